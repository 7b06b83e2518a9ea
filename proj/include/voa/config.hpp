#pragma once

#include <optional>
#include <string>
#include <vector>

#include "voa/report.hpp"
#include "voa/space.hpp"

namespace voa {

// Batch-run configuration. Flat key-value config files use exact
// rational literals "p/q"; CLI flags override file values.
struct RunConfig {
    std::string model = "ising";  // ising | lee-yang | virasoro
    std::optional<Rat> c;         // central charge for model=virasoro
    std::vector<ModuleDecl> modules;  // extra modules for model=virasoro
    int n = 0;
    std::optional<int> t, s;  // A_{t,s} indices
    int w_min = 2;
    int w_max = 12;
    int window = 3;
    int budget = 4;          // exhaustive sample budget (total tuple degree)
    int random_samples = 200;
    int random_budget = 5;   // total tuple degree for random samples
    int star_budget = 6;     // V_{<=budget} spanning set for o(v)/hom systems
    unsigned long seed = 20240501;
    std::vector<std::string> suites;  // empty = all suites
    std::string out_path;
    std::string format = "json";  // json | csv
    int workers = 1;

    json echo() const;
};

// Parses "key = value" lines ('#' comments). Repeatable keys: suite,
// module ("module = label h verma|simple").
RunConfig load_config_file(const std::string& path, RunConfig base = RunConfig());

ModelSpec make_model_spec(const RunConfig& cfg);

int env_worker_cap();

}  // namespace voa
