// Copyright 2026 The latticeft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "latticeft/census.h"
#include "latticeft/config.h"
#include "latticeft/exrec.h"
#include "latticeft/threshold.h"

using namespace latticeft;

namespace {

constexpr int EXIT_VALIDATION = 1;
constexpr int EXIT_IO = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixtures_or_default(const std::string &dir) {
    return dir.empty() ? default_fixtures_dir() : dir;
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << text;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

RunConfig load_config(const std::string &path, const std::vector<std::string> &overrides) {
    RunConfig rc = path.empty() ? RunConfig{} : read_run_config(path);
    for (const auto &kv : overrides) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        }
        set_config_value(rc, kv.substr(0, eq), kv.substr(eq + 1));
    }
    return rc;
}

std::vector<int> parse_types(const std::string &s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int t = std::stoi(tok);
        if (t < 0 || t >= NUM_LOCATION_TYPES) {
            throw ConfigError("location type out of range: " + tok);
        }
        out.push_back(t);
    }
    return out;
}

/// Sources for the two-dimensional parameters.
struct ParamArgs {
    std::string source = "fixtures";
    std::string alpha_cnot;
    std::string alpha_swap;
    std::string alpha_wait;
    std::string fixtures_dir;
    std::string expectations;
};

void add_param_options(CLI::App *cmd, ParamArgs &a) {
    cmd->add_option("--source", a.source, "fixtures (matrix files) or reference (expectations table)")
        ->check(CLI::IsMember({"fixtures", "reference"}));
    cmd->add_option("--alpha-cnot", a.alpha_cnot, "matrix of the h-CNOT exRec (default: shipped fixture)");
    cmd->add_option("--alpha-swap", a.alpha_swap, "matrix of the h-SWAP exRec (default: shipped fixture)");
    cmd->add_option("--alpha-wait", a.alpha_wait, "matrix of the wait exRec (default: census of exrec_15_local)");
    cmd->add_option("--fixtures", a.fixtures_dir, "fixtures directory");
    cmd->add_option("--expectations", a.expectations, "reference table");
}

TwoDimParams load_params(const ParamArgs &a) {
    std::string dir = fixtures_or_default(a.fixtures_dir);
    TwoDimParams p;
    if (a.source == "reference") {
        Expectations e = read_expectations(a.expectations.empty() ? dir + "/expectations.txt" : a.expectations);
        auto get = [&](const std::string &k) {
            auto it = e.find("map2d." + k);
            if (it == e.end()) {
                throw ConfigError("reference table lacks map2d." + k);
            }
            return it->second.value;
        };
        p.a = get("a");
        p.b = get("2b") / 2;
        p.c = get("c");
        p.d = get("d");
        p.e = get("2e") / 2;
        p.f = get("f");
        p.F = get("F");
        p.G = get("2G") / 2;
        p.H = get("H");
        p.J = get("J");
        p.K = get("2K") / 2;
        p.L = get("L");
        return p;
    }
    MalignancyMatrix cnot = read_matrix(a.alpha_cnot.empty() ? dir + "/alpha0_local.mat" : a.alpha_cnot);
    MalignancyMatrix swap = read_matrix(a.alpha_swap.empty() ? dir + "/alpha9_local.mat" : a.alpha_swap);
    MalignancyMatrix wait = a.alpha_wait.empty() ? census_pairs(build_exrec(15, Mode::LOCAL, dir).program)
                                                 : read_matrix(a.alpha_wait);
    extract_2d_params(cnot, swap, p);
    extract_first_iter_params(cnot, false, p);
    extract_first_iter_params(wait, true, p);
    return p;
}

void print_params(const TwoDimParams &p) {
    std::cout << "a=" << num(p.a) << " 2b=" << num(2 * p.b) << " c=" << num(p.c) << "\n";
    std::cout << "d=" << num(p.d) << " 2e=" << num(2 * p.e) << " f=" << num(p.f) << "\n";
    std::cout << "F=" << num(p.F) << " 2G=" << num(2 * p.G) << " H=" << num(p.H) << "\n";
    std::cout << "J=" << num(p.J) << " 2K=" << num(2 * p.K) << " L=" << num(p.L) << "\n";
}

int cmd_validate(const std::string &mode_arg, const std::string &dir, const std::string &exp_path) {
    std::string fdir = fixtures_or_default(dir);
    Expectations e = read_expectations(exp_path.empty() ? fdir + "/expectations.txt" : exp_path);
    std::vector<Mode> modes;
    if (mode_arg == "all") {
        modes = {Mode::LOCAL, Mode::NONLOCAL};
    } else {
        modes = {parse_mode(mode_arg)};
    }
    bool ok = true;
    for (Mode m : modes) {
        for (const auto &row : structure_checks(summarize_structure(m, fdir), e)) {
            std::cout << row.str() << "\n";
            ok = ok && row.pass;
        }
    }
    std::cout << (ok ? "validate: PASS" : "validate: FAIL") << "\n";
    return ok ? 0 : EXIT_VALIDATION;
}

int cmd_census(int exrec, const std::string &mode, const std::string &out, bool serial, int workers, int max_sites,
               const std::string &dir) {
    if (exrec < 0 || exrec >= NUM_LOCATION_TYPES) {
        throw ConfigError("--exrec must be in 0..16");
    }
    ExRec e = build_exrec(exrec, parse_mode(mode), fixtures_or_default(dir));
    CensusOptions opts;
    opts.workers = serial ? 1 : workers;
    opts.max_sites = max_sites;
    CensusStats stats;
    MalignancyMatrix m = census_pairs(e.program, opts, &stats);
    if (out.empty()) {
        std::cout << format_matrix(m);
    } else {
        write_text(out, format_matrix(m));
    }
    std::cerr << "pairs " << stats.pairs << " malignant " << m.total() << " ec_failure_pairs "
              << stats.ec_failure_pairs << "\n";
    return 0;
}

int cmd_badloc(const std::string &mode, const std::string &out, const std::string &dir) {
    BadLocationCount b = self_badloc(parse_mode(mode), fixtures_or_default(dir));
    if (out.empty()) {
        std::cout << format_badloc(b);
    } else {
        write_text(out, format_badloc(b));
    }
    return 0;
}

int cmd_map(const RunConfig &rc, double gamma) {
    ModelConfig model = build_model(rc);
    auto t = trajectory(gamma, model, rc.levels);
    std::cout << "level";
    for (int l = 0; l < NUM_LOCATION_TYPES; l++) {
        std::cout << ",gamma_" << l;
    }
    std::cout << "\n";
    char buf[32];
    for (size_t r = 0; r < t.size(); r++) {
        std::cout << r;
        for (double v : t[r]) {
            std::snprintf(buf, sizeof(buf), ",%.9e", v);
            std::cout << buf;
        }
        std::cout << "\n";
    }
    return 0;
}

void write_trip(const RunConfig &rc, const ModelConfig &model, const std::vector<int> &types) {
    std::filesystem::create_directories(rc.out_dir);
    auto grid = log_grid(rc.grid_lo, rc.grid_hi, rc.grid_points);
    write_text(rc.out_dir + "/trip.csv", format_trip_csv(trip_table(model, grid, rc.levels, types)));
    write_text(rc.out_dir + "/pseudothresholds.csv",
               format_pseudo_csv(pseudothreshold_table(model, rc.levels, types)));
}

int cmd_trip(const RunConfig &rc, const std::string &types) {
    ModelConfig model = build_model(rc);
    write_trip(rc, model, parse_types(types));
    std::cout << "wrote " << rc.out_dir << "/trip.csv and " << rc.out_dir << "/pseudothresholds.csv\n";
    return 0;
}

int cmd_threshold(const RunConfig &rc) {
    Expectations e = read_expectations(rc.expectations_path());
    std::cout << "# config\n" << rc.str() << "\n";
    ModelConfig model = build_model(rc);
    std::cout << "# bad locations\n" << format_badloc(model.badloc) << "\n";
    std::cout << "# full map\n";
    std::string m = mode_name(rc.mode);
    for (MemoryRule rule : {MemoryRule::TENTH, MemoryRule::EQUAL, MemoryRule::ZERO_SWAP}) {
        for (bool triple : {true, false}) {
            ModelConfig v = model;
            v.memory_rule = rule;
            v.include_triple = triple;
            std::string name = std::string(memory_rule_name(rule)) + (triple ? "" : ".no_triple");
            try {
                double g = threshold_search(v);
                std::cout << check_value(e, m + "." + name + ".gamma_c", m + " " + name + " gamma_c", "", g).str()
                          << "\n";
            } catch (const BracketError &err) {
                std::cout << m << " " << name << " gamma_c: " << err.what() << "\n";
            }
        }
    }
    write_trip(rc, model, {0, 9});
    std::cout << "wrote " << rc.out_dir << "/trip.csv and " << rc.out_dir << "/pseudothresholds.csv\n\n";

    std::cout << "# caps\n";
    std::cout << check_value(e, "cap.pair.13245", "pair cap 1/13245", "", pair_cap(13245)).str() << "\n";
    std::cout << check_value(e, "cap.triple.1225", "triple cap N=1225", "", triple_cap(1225)).str() << "\n";
    for (int t : {0, 9}) {
        std::cout << "self-census pair cap type " << t << ": " << num(pair_cap(model.matrices[t].at(t, t)))
                  << " (alpha[" << t << "][" << t << "]=" << model.matrices[t].at(t, t) << ")\n";
    }

    std::cout << "\n# two-dimensional map\n";
    if (rc.mode == Mode::LOCAL) {
        TwoDimParams p;
        extract_2d_params(model.matrices[0], model.matrices[9], p);
        extract_first_iter_params(model.matrices[0], false, p);
        extract_first_iter_params(model.matrices[15], true, p);
        print_params(p);
        try {
            Map2dResult r = map2d_threshold(p);
            std::cout << check_value(e, "map2d.gamma_c", "2D map gamma_c (iterated)", "", r.gamma_iterated).str()
                      << "\n";
            std::cout << "2D map gamma_c (fixed point): " << num(r.gamma_fixed_point) << "\n";
        } catch (const std::exception &err) {
            std::cout << "2D map: " << err.what() << "\n";
        }
        ClosedFormResult c = closed_form_threshold(p);
        std::cout << check_value(e, "closed_form.gamma_c", "closed form gamma_c", "", c.gamma_min).str() << "\n";
    } else {
        std::cout << "2D map extraction is defined for the local mode only\n";
    }
    return 0;
}

int cmd_approx2d(const ParamArgs &a, double kappa) {
    TwoDimParams p = load_params(a);
    if (kappa != 1) {
        p = p.scaled_map(kappa);
    }
    print_params(p);
    Map2dResult r = map2d_threshold(p);
    std::cout << "ratio r=" << num(r.ratio) << " x*=" << num(r.x_star) << " y*=" << num(r.y_star) << "\n";
    std::cout << "gamma_x=" << num(r.gamma_x) << " gamma_y=" << num(r.gamma_y) << "\n";
    std::cout << "gamma_c (fixed point)=" << num(r.gamma_fixed_point) << "\n";
    std::cout << "gamma_c (iterated)=" << num(r.gamma_iterated) << "\n";
    return 0;
}

int cmd_closed_form(const ParamArgs &a) {
    TwoDimParams p = load_params(a);
    print_params(p);
    ClosedFormResult c = closed_form_threshold(p);
    std::cout << "x=" << num(c.x) << (c.x_valid ? "" : " (nonpositive denominator)") << "\n";
    std::cout << "y=" << num(c.y) << (c.y_valid ? "" : " (nonpositive denominator)") << "\n";
    std::cout << "gamma_x=" << num(c.gamma_x) << " gamma_y=" << num(c.gamma_y) << "\n";
    std::cout << "gamma_c=" << num(c.gamma_min) << "\n";
    return (c.x_valid || c.y_valid) ? 0 : EXIT_VALIDATION;
}

int cmd_caps(uint64_t count, int n) {
    std::cout << "pair cap 1/" << count << " = " << num(pair_cap(count)) << "\n";
    std::cout << "triple cap N=" << n << " = " << num(triple_cap(n)) << "\n";
    return 0;
}

int cmd_theta(double gt, double gc) {
    ThetaResult r = theta_injection(gt, gc);
    std::cout << "injected rate = " << num(r.injected) << "\n";
    std::cout << "recursion threshold 1/C(84,2) = " << num(r.recursion_threshold) << "\n";
    std::cout << (r.injected < r.recursion_threshold ? "below" : "not below") << " the recursion threshold\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"latticeft: fault-tolerance analysis of the Steane code on a 2D lattice"};
    app.require_subcommand(1);

    std::string fixtures, mode = "local", out, config_path, exp_path;
    std::vector<std::string> overrides;
    int exrec = -1, workers = std::max(1u, std::thread::hardware_concurrency()), max_sites = -1;
    bool serial = false;
    double gamma = 1e-5, kappa = 1, gt = 0, gc = 0;
    uint64_t count = 13245;
    int n = 1225;
    std::string types = "0,9";
    ParamArgs params;

    auto *validate = app.add_subcommand("validate", "check location counts and timesteps against the reference table");
    validate->add_option("--mode", mode, "local, nonlocal or all")->check(CLI::IsMember({"local", "nonlocal", "all"}));
    validate->add_option("--fixtures", fixtures, "fixtures directory");
    validate->add_option("--expectations", exp_path, "reference table");

    auto *census = app.add_subcommand("census", "malignant pair census of one exRec");
    census->add_option("--exrec", exrec, "location type 0..16")->required();
    census->add_option("--mode", mode, "local or nonlocal");
    census->add_option("--out", out, "matrix file (default: stdout)");
    census->add_flag("--serial", serial, "single worker");
    census->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    census->add_option("--max-sites", max_sites, "only the first N sites carry faults");
    census->add_option("--fixtures", fixtures, "fixtures directory");

    auto *badloc = app.add_subcommand("badloc", "bad locations of the G||V circuit");
    badloc->add_option("--mode", mode, "local or nonlocal");
    badloc->add_option("--out", out, "table file (default: stdout)");
    badloc->add_option("--fixtures", fixtures, "fixtures directory");

    auto add_config = [&](CLI::App *cmd) {
        cmd->add_option("--config", config_path, "key=value config file");
        cmd->add_option("--set", overrides, "override one key=value");
    };
    auto *map = app.add_subcommand("map", "rates per level of the full map at one initial rate");
    add_config(map);
    map->add_option("--gamma", gamma, "initial gate rate")->required();

    auto *threshold = app.add_subcommand("threshold", "threshold report with TRIP CSVs");
    add_config(threshold);

    auto *trip = app.add_subcommand("trip", "TRIP and pseudothreshold CSVs");
    add_config(trip);
    trip->add_option("--types", types, "comma-separated location types");

    auto *approx2d = app.add_subcommand("approx2d", "two-dimensional approximate map");
    add_param_options(approx2d, params);
    approx2d->add_option("--kappa", kappa, "scale a..f by kappa")->check(CLI::PositiveNumber);

    auto *closed = app.add_subcommand("closed-form", "closed-form approximate thresholds");
    add_param_options(closed, params);

    auto *caps = app.add_subcommand("caps", "single-type threshold caps");
    caps->add_option("--count", count, "malignant pair count")->check(CLI::PositiveNumber);
    caps->add_option("--n", n, "locations in the exRec")->check(CLI::Range(3, 1 << 20));

    auto *theta = app.add_subcommand("theta", "injected rate of an encoded theta state");
    theta->add_option("--gamma-theta", gt, "unencoded theta rate")->required()->check(CLI::Range(0.0, 1.0));
    theta->add_option("--gamma-cnot", gc, "CNOT rate")->required()->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_IO;
    }

    try {
        if (*validate) {
            return cmd_validate(mode, fixtures, exp_path);
        }
        if (*census) {
            return cmd_census(exrec, mode, out, serial, workers, max_sites, fixtures);
        }
        if (*badloc) {
            return cmd_badloc(mode, out, fixtures);
        }
        if (*approx2d) {
            return cmd_approx2d(params, kappa);
        }
        if (*closed) {
            return cmd_closed_form(params);
        }
        if (*caps) {
            return cmd_caps(count, n);
        }
        if (*theta) {
            return cmd_theta(gt, gc);
        }
        RunConfig rc = load_config(config_path, overrides);
        if (*map) {
            return cmd_map(rc, gamma);
        }
        if (*threshold) {
            return cmd_threshold(rc);
        }
        if (*trip) {
            return cmd_trip(rc, types);
        }
    } catch (const BracketError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_VALIDATION;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_IO;
    }
    return EXIT_IO;
}
