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


#include "latticeft/config.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "latticeft/exrec.h"

namespace latticeft {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool parse_bool(const std::string &key, const std::string &v) {
    if (v == "true" || v == "1") {
        return true;
    }
    if (v == "false" || v == "0") {
        return false;
    }
    throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

int parse_int(const std::string &key, const std::string &v) {
    size_t used = 0;
    int r = 0;
    try {
        r = std::stoi(v, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != v.size() || v.empty()) {
        throw ConfigError(key + ": expected an integer, got '" + v + "'");
    }
    return r;
}

double parse_double(const std::string &key, const std::string &v) {
    size_t used = 0;
    double r = 0;
    try {
        r = std::stod(v, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != v.size() || v.empty()) {
        throw ConfigError(key + ": expected a number, got '" + v + "'");
    }
    return r;
}

}  // namespace

const std::vector<std::string> &config_keys() {
    static const std::vector<std::string> keys = {
        "mode", "memory_rule", "include_triple", "matrices", "badloc", "fixtures_dir", "out_dir", "matrix_dir",
        "expectations", "workers", "serial", "levels", "grid_points", "grid_lo", "grid_hi",
    };
    return keys;
}

void set_config_value(RunConfig &c, const std::string &key, const std::string &v) {
    try {
        if (key == "mode") {
            c.mode = parse_mode(v);
        } else if (key == "memory_rule") {
            c.memory_rule = parse_memory_rule(v);
        } else if (key == "include_triple") {
            c.include_triple = parse_bool(key, v);
        } else if (key == "matrices") {
            if (v == "self") {
                c.matrices = MatrixSource::SELF;
            } else if (v == "reference") {
                c.matrices = MatrixSource::REFERENCE;
            } else {
                throw ConfigError("matrices: expected self or reference, got '" + v + "'");
            }
        } else if (key == "badloc") {
            if (v == "self") {
                c.badloc = BadlocSource::SELF;
            } else if (v == "table") {
                c.badloc = BadlocSource::TABLE;
            } else {
                throw ConfigError("badloc: expected self or table, got '" + v + "'");
            }
        } else if (key == "fixtures_dir") {
            c.fixtures_dir = v;
        } else if (key == "out_dir") {
            c.out_dir = v;
        } else if (key == "matrix_dir") {
            c.matrix_dir = v;
        } else if (key == "expectations") {
            c.expectations = v;
        } else if (key == "workers") {
            c.workers = parse_int(key, v);
            if (c.workers < 1) {
                throw ConfigError("workers must be positive");
            }
        } else if (key == "serial") {
            c.serial = parse_bool(key, v);
        } else if (key == "levels") {
            c.levels = parse_int(key, v);
            if (c.levels < 1) {
                throw ConfigError("levels must be positive");
            }
        } else if (key == "grid_points") {
            c.grid_points = parse_int(key, v);
            if (c.grid_points < 1) {
                throw ConfigError("grid_points must be positive");
            }
        } else if (key == "grid_lo") {
            c.grid_lo = parse_double(key, v);
        } else if (key == "grid_hi") {
            c.grid_hi = parse_double(key, v);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    } catch (const ConfigError &) {
        throw;
    } catch (const std::exception &e) {
        throw ConfigError(key + ": " + e.what());
    }
}

RunConfig parse_run_config(const std::string &text) {
    RunConfig c;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        n++;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(n) + ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        if (!seen.insert(key).second) {
            throw ConfigError("line " + std::to_string(n) + ": repeated key '" + key + "'");
        }
        set_config_value(c, key, trim(line.substr(eq + 1)));
    }
    if (c.grid_lo <= 0 || c.grid_hi <= c.grid_lo) {
        throw ConfigError("grid range must satisfy 0 < grid_lo < grid_hi");
    }
    return c;
}

RunConfig read_run_config(const std::string &path) {
    return parse_run_config(slurp(path));
}

std::string RunConfig::expectations_path() const {
    if (!expectations.empty()) {
        return expectations;
    }
    return (fixtures_dir.empty() ? default_fixtures_dir() : fixtures_dir) + "/expectations.txt";
}

std::string RunConfig::str() const {
    std::ostringstream out;
    out << "mode=" << mode_name(mode) << "\n";
    out << "memory_rule=" << memory_rule_name(memory_rule) << "\n";
    out << "include_triple=" << (include_triple ? "true" : "false") << "\n";
    out << "matrices=" << (matrices == MatrixSource::SELF ? "self" : "reference") << "\n";
    out << "badloc=" << (badloc == BadlocSource::SELF ? "self" : "table") << "\n";
    out << "fixtures_dir=" << (fixtures_dir.empty() ? default_fixtures_dir() : fixtures_dir) << "\n";
    out << "out_dir=" << out_dir << "\n";
    out << "matrix_dir=" << matrix_dir << "\n";
    out << "expectations=" << expectations_path() << "\n";
    out << "workers=" << workers << "\n";
    out << "serial=" << (serial ? "true" : "false") << "\n";
    out << "levels=" << levels << "\n";
    out << "grid_points=" << grid_points << "\n";
    out << "grid_lo=" << grid_lo << "\n";
    out << "grid_hi=" << grid_hi << "\n";
    return out.str();
}

bool Expectation::holds(double actual) const {
    if (rel_tol == 0) {
        return actual == value;
    }
    return std::abs(actual - value) <= rel_tol * std::abs(value);
}

Expectations parse_expectations(const std::string &text) {
    Expectations out;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        n++;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string key, value, tol, extra;
        if (!(ls >> key >> value >> tol) || (ls >> extra)) {
            throw ConfigError("expectations line " + std::to_string(n) + ": expected 'key value rel_tol'");
        }
        Expectation e{parse_double(key, value), parse_double(key, tol)};
        if (e.rel_tol < 0) {
            throw ConfigError("expectations line " + std::to_string(n) + ": negative tolerance");
        }
        if (!out.emplace(key, e).second) {
            throw ConfigError("expectations line " + std::to_string(n) + ": repeated key '" + key + "'");
        }
    }
    return out;
}

Expectations read_expectations(const std::string &path) {
    return parse_expectations(slurp(path));
}

std::string CheckRow::str() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", actual);
    std::string out = label + ": " + buf + (unit.empty() ? "" : " " + unit);
    if (!has_expected) {
        return out + " INFO";
    }
    if (pass) {
        return out + " PASS";
    }
    std::snprintf(buf, sizeof(buf), "%.6g", expected);
    return out + " (expected " + buf + ") FAIL";
}

CheckRow check_value(const Expectations &e, const std::string &key, const std::string &label,
                     const std::string &unit, double actual) {
    CheckRow r;
    r.label = label;
    r.unit = unit;
    r.actual = actual;
    auto it = e.find(key);
    if (it != e.end()) {
        r.has_expected = true;
        r.expected = it->second.value;
        r.pass = it->second.holds(actual);
    }
    return r;
}

std::vector<CheckRow> structure_checks(const StructureSummary &s, const Expectations &e) {
    std::vector<CheckRow> rows;
    std::string m = mode_name(s.mode);
    rows.push_back(check_value(e, m + ".ec_duration", m + " 1-EC", "timesteps", s.ec_duration));
    auto type_label = [](int t) {
        return "type " + std::to_string(t) + " (" + location_type(t).name + ")";
    };
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        std::string k = std::to_string(t);
        rows.push_back(check_value(e, m + ".ec_pass." + k, m + " 1-EC pass path " + type_label(t), "locations",
                                   s.ec_pass[t]));
    }
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        std::string k = std::to_string(t);
        rows.push_back(check_value(e, m + ".ec_fail." + k, m + " 1-EC fail path " + type_label(t), "locations",
                                   s.ec_fail[t]));
    }
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        std::string k = std::to_string(t);
        rows.push_back(check_value(e, m + ".hcnot_ga." + k, m + " h-CNOT 1-Ga " + type_label(t), "locations",
                                   s.hcnot_ga[t]));
    }
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        std::string k = std::to_string(t);
        rows.push_back(check_value(e, m + ".rec_duration." + k, m + " 1-Rec " + type_label(t), "timesteps",
                                   s.rec_duration[t]));
        rows.push_back(check_value(e, m + ".exrec_duration." + k, m + " 1-exRec " + type_label(t), "timesteps",
                                   s.exrec_duration[t]));
        rows.push_back(check_value(e, m + ".exrec_total." + k, m + " 1-exRec " + type_label(t), "locations",
                                   s.exrec_total[t]));
    }
    return rows;
}

ModelConfig build_model(const RunConfig &rc) {
    std::string dir = rc.fixtures_dir.empty() ? default_fixtures_dir() : rc.fixtures_dir;
    ModelConfig m;
    m.mode = rc.mode;
    m.memory_rule = rc.memory_rule;
    m.include_triple = rc.include_triple;
    CensusOptions opts;
    opts.workers = rc.serial ? 1 : rc.workers;
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        if (rc.matrices == MatrixSource::REFERENCE && (t == 0 || t == 9)) {
            if (rc.mode != Mode::LOCAL) {
                throw ConfigError("reference matrices exist only for the local mode");
            }
            m.matrices[t] = read_matrix(dir + "/alpha" + std::to_string(t) + "_local.mat");
            continue;
        }
        std::string cached = rc.matrix_dir + "/alpha" + std::to_string(t) + "_" + mode_name(rc.mode) + ".mat";
        if (!rc.matrix_dir.empty() && std::ifstream(cached).good()) {
            m.matrices[t] = read_matrix(cached);
            if (m.matrices[t].exrec != t || m.matrices[t].mode != rc.mode) {
                throw ConfigError(cached + ": header does not match exrec " + std::to_string(t));
            }
            continue;
        }
        m.matrices[t] = census_pairs(build_exrec(t, rc.mode, dir).program, opts);
    }
    if (rc.badloc == BadlocSource::TABLE) {
        if (rc.mode != Mode::LOCAL) {
            throw ConfigError("the bad-location table exists only for the local mode");
        }
        m.badloc = read_badloc(dir + "/badloc_local.tbl");
    } else {
        m.badloc = self_badloc(rc.mode, dir);
    }
    return m;
}

}  // namespace latticeft
