#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "voa/fusion.hpp"
#include "voa/span.hpp"

namespace voa {

using json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Inconclusive, NotApplicable };

std::string status_name(CheckStatus s);

// A FAIL always carries a concrete witness; an INCONCLUSIVE carries the
// cutoff at which the certificate search stopped.
struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
};

struct Report {
    json config;
    std::vector<json> tables;
    std::vector<Check> checks;
    std::vector<json> extras;  // fusion tables etc.

    bool any(CheckStatus s) const;
    // 0 = all PASS/N-A, 1 = any FAIL, 2 = no FAIL but some INCONCLUSIVE
    int exit_code() const;
    json to_json() const;
};

// `indices` carries the quotient parameters: {"n": k} or {"t": a, "s": b}.
json quotient_table_json(const std::string& model, const std::string& space,
                         const std::string& quotient, const json& indices,
                         const QuotientReport& report, const json& config_echo);

json fusion_table_json(const Model& model, const FusionTable& table);
std::string fusion_table_csv(const Model& model, const FusionTable& table);

std::string rat_str(const Rat& r);

}  // namespace voa
