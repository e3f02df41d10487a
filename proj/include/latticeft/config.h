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


#ifndef _LATTICEFT_CONFIG_H
#define _LATTICEFT_CONFIG_H

#include <map>
#include <string>
#include <vector>

#include "latticeft/exrec.h"
#include "latticeft/threshold.h"

namespace latticeft {

/// Where the 17 matrices of a full-map run come from.
enum class MatrixSource : uint8_t {
    /// Census of every shipped exRec.
    SELF,
    /// Shipped fixture matrices for types 0 and 9, census for the rest.
    REFERENCE,
};

enum class BadlocSource : uint8_t {
    /// Census of the shipped G||V circuit.
    SELF,
    /// badloc_local.tbl.
    TABLE,
};

/// Settings of a command-line run, read from key=value lines.
struct RunConfig {
    Mode mode = Mode::LOCAL;
    MemoryRule memory_rule = MemoryRule::TENTH;
    bool include_triple = true;
    MatrixSource matrices = MatrixSource::SELF;
    BadlocSource badloc = BadlocSource::SELF;
    std::string fixtures_dir;
    std::string out_dir = ".";
    /// Directory of precomputed matrix files alpha<t>_<mode>.mat; empty to run the census.
    std::string matrix_dir;
    /// Reference values; empty for <fixtures_dir>/expectations.txt.
    std::string expectations;
    int workers = 1;
    bool serial = false;
    int levels = 4;
    int grid_points = 41;
    double grid_lo = 1e-6;
    double grid_hi = 1e-3;

    std::string expectations_path() const;
    /// Canonical key=value rendering, parseable by parse_run_config.
    std::string str() const;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Blank lines and '#' comments are skipped. Unknown or repeated keys throw ConfigError.
RunConfig parse_run_config(const std::string &text);
RunConfig read_run_config(const std::string &path);
/// Applies one key=value assignment.
void set_config_value(RunConfig &c, const std::string &key, const std::string &value);
const std::vector<std::string> &config_keys();

/// A reference value with a relative tolerance (0 for exact).
struct Expectation {
    double value = 0;
    double rel_tol = 0;
    bool holds(double actual) const;
};

/// Keyed reference values, one `key value rel_tol` per line.
using Expectations = std::map<std::string, Expectation>;
Expectations parse_expectations(const std::string &text);
Expectations read_expectations(const std::string &path);

/// One reported quantity, compared against a reference when one exists.
struct CheckRow {
    std::string label;
    std::string unit;
    double actual = 0;
    bool has_expected = false;
    double expected = 0;
    bool pass = true;
    /// "<label>: <actual> <unit> PASS", with the reference on FAIL and INFO without one.
    std::string str() const;
};

/// Compares a key against the reference table (INFO row if the key is absent).
CheckRow check_value(const Expectations &e, const std::string &key, const std::string &label,
                     const std::string &unit, double actual);

/// Count and timestep rows of a structure summary.
std::vector<CheckRow> structure_checks(const StructureSummary &s, const Expectations &e);

/// Builds the full-map model for a run (runs the census unless matrix_dir has the files).
ModelConfig build_model(const RunConfig &rc);

}  // namespace latticeft

#endif
