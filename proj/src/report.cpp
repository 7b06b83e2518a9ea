#include "voa/report.hpp"

namespace voa {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Inconclusive: return "INCONCLUSIVE";
        case CheckStatus::NotApplicable: return "N/A";
    }
    return "?";
}

std::string rat_str(const Rat& r) { return r.get_str(); }

bool Report::any(CheckStatus s) const {
    for (const auto& c : checks)
        if (c.status == s) return true;
    return false;
}

int Report::exit_code() const {
    if (any(CheckStatus::Fail)) return 1;
    if (any(CheckStatus::Inconclusive)) return 2;
    return 0;
}

json Report::to_json() const {
    json out;
    out["config"] = config;
    out["tables"] = tables;
    for (const auto& extra : extras) {
        for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
    }
    json cl = json::array();
    for (const auto& c : checks) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = status_name(c.status);
        if (!c.witness.empty()) jc["witness"] = c.witness;
        cl.push_back(jc);
    }
    out["checks"] = cl;
    return out;
}

json quotient_table_json(const std::string& model, const std::string& space,
                         const std::string& quotient, const json& indices,
                         const QuotientReport& report, const json& config_echo) {
    json out;
    out["model"] = model;
    out["space"] = space;
    out["quotient"] = quotient;
    for (auto it = indices.begin(); it != indices.end(); ++it) out[it.key()] = it.value();
    out["config"] = config_echo;
    json rows = json::array();
    for (const auto& row : report.table) {
        json r;
        r["W"] = row.W;
        r["dim_space"] = row.dim_space;
        r["dim_span"] = row.dim_span;
        r["dim_quotient"] = row.dim_quotient;
        rows.push_back(r);
    }
    out["table"] = rows;
    if (report.stabilized_dim) out["stabilized_dim"] = *report.stabilized_dim;
    else out["stabilized_dim"] = nullptr;
    out["stabilization_window"] = report.window;
    return out;
}

json fusion_table_json(const Model& model, const FusionTable& table) {
    json out;
    out["n"] = table.n;
    out["consistent_across_st"] = table.consistent;
    json entries = json::array();
    for (size_t i = 0; i < table.count; ++i)
        for (size_t j = 0; j < table.count; ++j)
            for (size_t k = 0; k < table.count; ++k) {
                json e;
                e["i"] = model.module(i).label();
                e["j"] = model.module(j).label();
                e["k"] = model.module(k).label();
                e["N"] = table.N[i][j][k];
                entries.push_back(e);
            }
    out["entries"] = entries;
    return out;
}

std::string fusion_table_csv(const Model& model, const FusionTable& table) {
    std::string csv = "i";
    for (size_t j = 0; j < table.count; ++j)
        for (size_t k = 0; k < table.count; ++k)
            csv += ",(" + model.module(j).label() + ";" + model.module(k).label() + ")";
    csv += "\n";
    for (size_t i = 0; i < table.count; ++i) {
        csv += model.module(i).label();
        for (size_t j = 0; j < table.count; ++j)
            for (size_t k = 0; k < table.count; ++k)
                csv += "," + std::to_string(table.N[i][j][k]);
        csv += "\n";
    }
    return csv;
}

}  // namespace voa
