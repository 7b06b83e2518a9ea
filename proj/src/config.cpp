#include "voa/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace voa {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Rat parse_rat_or_throw(const std::string& text, const std::string& key) {
    auto r = parse_rat(text);
    if (!r) throw std::invalid_argument("bad rational for " + key + ": " + text);
    return *r;
}

}  // namespace

json RunConfig::echo() const {
    json e;
    e["model"] = model;
    if (c) e["c"] = rat_str(*c);
    if (!modules.empty()) {
        json ms = json::array();
        for (const auto& m : modules) {
            json jm;
            jm["label"] = m.label;
            jm["h"] = rat_str(m.h);
            jm["mode"] = m.simple ? "simple-quotient" : "verma";
            ms.push_back(jm);
        }
        e["modules"] = ms;
    }
    e["n"] = n;
    if (t) e["t"] = *t;
    if (s) e["s"] = *s;
    e["w_min"] = w_min;
    e["w_max"] = w_max;
    e["window"] = window;
    e["budget"] = budget;
    e["random_samples"] = random_samples;
    e["random_budget"] = random_budget;
    e["star_budget"] = star_budget;
    e["seed"] = seed;
    if (!suites.empty()) e["suites"] = suites;
    e["format"] = format;
    e["workers"] = workers;
    return e;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string text = line;
        size_t hash = text.find('#');
        if (hash != std::string::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));

        if (key == "model") base.model = value;
        else if (key == "c") base.c = parse_rat_or_throw(value, key);
        else if (key == "n") base.n = std::stoi(value);
        else if (key == "t") base.t = std::stoi(value);
        else if (key == "s") base.s = std::stoi(value);
        else if (key == "w_min") base.w_min = std::stoi(value);
        else if (key == "w_max") base.w_max = std::stoi(value);
        else if (key == "w") {
            size_t dots = value.find("..");
            if (dots == std::string::npos)
                throw std::invalid_argument("w expects A..B, got " + value);
            base.w_min = std::stoi(value.substr(0, dots));
            base.w_max = std::stoi(value.substr(dots + 2));
        } else if (key == "window") base.window = std::stoi(value);
        else if (key == "budget") base.budget = std::stoi(value);
        else if (key == "random_samples") base.random_samples = std::stoi(value);
        else if (key == "random_budget") base.random_budget = std::stoi(value);
        else if (key == "star_budget") base.star_budget = std::stoi(value);
        else if (key == "seed") base.seed = std::stoul(value);
        else if (key == "suite") base.suites.push_back(value);
        else if (key == "out") base.out_path = value;
        else if (key == "format") base.format = value;
        else if (key == "workers") base.workers = std::stoi(value);
        else if (key == "module") {
            std::istringstream ms(value);
            std::string label, h_text, mode;
            ms >> label >> h_text >> mode;
            if (label.empty() || h_text.empty())
                throw std::invalid_argument("module expects: label h [verma|simple]");
            ModuleDecl decl;
            decl.label = label;
            decl.h = parse_rat_or_throw(h_text, "module h");
            decl.simple = mode != "verma";
            base.modules.push_back(decl);
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return base;
}

ModelSpec make_model_spec(const RunConfig& cfg) {
    if (cfg.model == "ising") return ModelSpec::ising();
    if (cfg.model == "lee-yang") return ModelSpec::lee_yang();
    if (cfg.model == "virasoro") {
        if (!cfg.c) throw std::invalid_argument("model=virasoro requires c");
        return ModelSpec::universal(*cfg.c, cfg.modules);
    }
    throw std::invalid_argument("unknown model: " + cfg.model);
}

int env_worker_cap() {
    const char* env = std::getenv("VOA_LAB_WORKERS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v > 0 ? v : 0;
}

}  // namespace voa
