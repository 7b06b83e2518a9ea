#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "voa/suites.hpp"

using namespace voa;

namespace {

struct CliState {
    RunConfig cfg;
    std::string config_path;
    std::string c_text;
    std::vector<std::string> module_texts;
    std::string w_range;
};

void add_common(CLI::App* cmd, CliState& st) {
    cmd->add_option("--config", st.config_path, "config file (key = value lines)");
    cmd->add_option("--model", st.cfg.model, "ising | lee-yang | virasoro");
    cmd->add_option("--c", st.c_text, "central charge p/q (model=virasoro)");
    cmd->add_option("--module", st.module_texts,
                    "extra module \"label:h\" (model=virasoro, repeatable)");
    cmd->add_option("--n", st.cfg.n, "filtration level n");
    cmd->add_option("--t", st.cfg.t, "A_{t,s} index t");
    cmd->add_option("--s", st.cfg.s, "A_{t,s} index s");
    cmd->add_option("--w", st.w_range, "cutoff range A..B");
    cmd->add_option("--window", st.cfg.window, "stabilization window");
    cmd->add_option("--budget", st.cfg.budget, "exhaustive sample budget (total degree)");
    cmd->add_option("--random-samples", st.cfg.random_samples, "random sample count");
    cmd->add_option("--random-budget", st.cfg.random_budget,
                    "random sample budget (total degree)");
    cmd->add_option("--star-budget", st.cfg.star_budget, "V spanning budget for o(v)");
    cmd->add_option("--seed", st.cfg.seed, "random seed (recorded in reports)");
    cmd->add_option("--out", st.cfg.out_path, "output path (default stdout)");
    cmd->add_option("--format", st.cfg.format, "json | csv (fusion tables)");
    cmd->add_option("--workers", st.cfg.workers, "worker threads (capped by VOA_LAB_WORKERS)");
}

RunConfig finalize(CliState& st, CLI::App* cmd) {
    RunConfig cfg = st.cfg;
    if (!st.config_path.empty()) {
        // file first, explicit CLI flags override
        RunConfig from_file = load_config_file(st.config_path);
        RunConfig merged = from_file;
        if (cmd->count("--model")) merged.model = cfg.model;
        if (cmd->count("--n")) merged.n = cfg.n;
        if (cmd->count("--t")) merged.t = cfg.t;
        if (cmd->count("--s")) merged.s = cfg.s;
        if (cmd->count("--window")) merged.window = cfg.window;
        if (cmd->count("--budget")) merged.budget = cfg.budget;
        if (cmd->count("--random-samples")) merged.random_samples = cfg.random_samples;
        if (cmd->count("--random-budget")) merged.random_budget = cfg.random_budget;
        if (cmd->count("--star-budget")) merged.star_budget = cfg.star_budget;
        if (cmd->count("--seed")) merged.seed = cfg.seed;
        if (cmd->count("--out")) merged.out_path = cfg.out_path;
        if (cmd->count("--format")) merged.format = cfg.format;
        if (cmd->count("--workers")) merged.workers = cfg.workers;
        if (!cfg.suites.empty()) merged.suites = cfg.suites;
        cfg = merged;
    }
    if (!st.c_text.empty()) {
        auto r = parse_rat(st.c_text);
        if (!r) throw CLI::ValidationError("--c", "expected a rational p/q");
        cfg.c = *r;
    }
    for (const auto& text : st.module_texts) {
        size_t colon = text.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--module", "expected label:h");
        auto h = parse_rat(text.substr(colon + 1));
        if (!h) throw CLI::ValidationError("--module", "bad rational h");
        cfg.modules.push_back({text.substr(0, colon), *h, false});
    }
    if (!st.w_range.empty()) {
        size_t dots = st.w_range.find("..");
        if (dots == std::string::npos)
            throw CLI::ValidationError("--w", "expected A..B");
        cfg.w_min = std::stoi(st.w_range.substr(0, dots));
        cfg.w_max = std::stoi(st.w_range.substr(dots + 2));
    }
    return cfg;
}

int emit(const Report& report, const RunConfig& cfg) {
    std::string payload;
    if (cfg.format == "csv") {
        // csv export applies to fusion tables; everything else stays json
        for (const auto& extra : report.extras)
            if (extra.contains("fusion_table_csv"))
                payload += extra["fusion_table_csv"].get<std::string>();
        if (payload.empty()) payload = report.to_json().dump(2) + "\n";
    } else {
        payload = report.to_json().dump(2) + "\n";
    }
    if (cfg.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "cannot write " << cfg.out_path << "\n";
            return 1;
        }
        out << payload;
    }
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact A_n(V)-bimodule computations for Virasoro-family VOAs"};
    app.require_subcommand(1);

    CliState dims_state, verify_state, fusion_state, compare_state;
    CLI::App* dims = app.add_subcommand("dims", "graded dimensions and quotient scans");
    add_common(dims, dims_state);
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, verify_state);
    verify->add_option("--suite", verify_state.cfg.suites,
                       "suite name (repeatable; default all)");
    CLI::App* fusion = app.add_subcommand("fusion", "fusion table via balanced-Hom");
    add_common(fusion, fusion_state);
    CLI::App* compare =
        app.add_subcommand("compare-on", "quotients with and without (L(-1)+L(0))V");
    add_common(compare, compare_state);

    CLI11_PARSE(app, argc, argv);

    try {
        if (dims->parsed()) {
            RunConfig cfg = finalize(dims_state, dims);
            return emit(run_dims(cfg), cfg);
        }
        if (verify->parsed()) {
            RunConfig cfg = finalize(verify_state, verify);
            return emit(run_verify(cfg), cfg);
        }
        if (fusion->parsed()) {
            RunConfig cfg = finalize(fusion_state, fusion);
            return emit(run_fusion_cmd(cfg), cfg);
        }
        if (compare->parsed()) {
            RunConfig cfg = finalize(compare_state, compare);
            return emit(run_compare_on(cfg), cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
