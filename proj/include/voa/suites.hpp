#pragma once

#include "voa/config.hpp"
#include "voa/report.hpp"

namespace voa {

extern const std::vector<std::string> kAllSuites;

// Batch drivers behind the CLI subcommands. Each returns a full report;
// exit codes come from Report::exit_code().
Report run_dims(const RunConfig& cfg);
Report run_verify(const RunConfig& cfg);
Report run_fusion_cmd(const RunConfig& cfg);
Report run_compare_on(const RunConfig& cfg);

}  // namespace voa
