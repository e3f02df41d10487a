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

#ifndef _LATTICEFT_THRESHOLD_H
#define _LATTICEFT_THRESHOLD_H

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "latticeft/census.h"

namespace latticeft {

using RateVector = std::array<double, NUM_LOCATION_TYPES>;

enum class MemoryRule : uint8_t {
    /// Waits start at gamma / 10.
    TENTH,
    /// Every type starts at gamma.
    EQUAL,
    /// Tenth rule with both SWAP types held at zero on every level.
    ZERO_SWAP,
};
const char *memory_rule_name(MemoryRule r);
MemoryRule parse_memory_rule(const std::string &s);

/// n choose k as a double.
double binomial(int n, int k);

/// Locations per exRec used by the triple-fault term.
std::array<int, NUM_LOCATION_TYPES> reference_exrec_sizes();

/// Trailing-EC exponent q per type.
std::array<int, NUM_LOCATION_TYPES> trailing_ec_exponents();

struct ModelConfig {
    Mode mode = Mode::LOCAL;
    MemoryRule memory_rule = MemoryRule::TENTH;
    bool include_triple = true;
    std::array<int, NUM_LOCATION_TYPES> sizes = reference_exrec_sizes();
    int gv_total = 49;
    std::array<int, NUM_LOCATION_TYPES> q = trailing_ec_exponents();
    std::array<MalignancyMatrix, NUM_LOCATION_TYPES> matrices{};
    BadLocationCount badloc{};

    /// Copy with every matrix entry multiplied by kappa.
    ModelConfig scaled(double kappa) const;
};

double anc_pass_probability(const RateVector &rates, const BadLocationCount &badloc, int gv_total = 49);
double ec_occurs_probability(double p_pass);

/// One level of the concatenation map.
RateVector flow_map(const RateVector &rates, const ModelConfig &config);

/// Level-0 rates for initial gate rate gamma.
RateVector initial_rates(double gamma, MemoryRule rule);

struct SearchOptions {
    double lo = 1e-8;
    double hi = 1e-2;
    double rel_tol = 0.005;
    int levels = 12;
    double floor = 1e-12;
};

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rates at levels 0..levels.
std::vector<RateVector> trajectory(double gamma, const ModelConfig &config, int levels);

bool below_threshold(double gamma, const ModelConfig &config, const SearchOptions &opts = {});

/// Largest gamma that flows to zero, by geometric bisection. Throws BracketError.
double threshold_search(const ModelConfig &config, const SearchOptions &opts = {});

/// gamma at which the level-r rate of `type` crosses the initial gate rate.
/// Throws BracketError if there is no crossing in [lo, hi].
double pseudothreshold(const ModelConfig &config, int level, int type, const SearchOptions &opts = {});

struct TripRow {
    double gamma0;
    int level;
    int type;
    double gamma_r;
};

/// Log-spaced grid of n points in [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);
std::vector<TripRow> trip_table(const ModelConfig &config, const std::vector<double> &grid, int levels,
                                const std::vector<int> &types);
std::string format_trip_csv(const std::vector<TripRow> &rows);

struct PseudoRow {
    int level;
    int type;
    /// NaN when there is no crossing.
    double pseudothreshold;
};
std::vector<PseudoRow> pseudothreshold_table(const ModelConfig &config, int levels, const std::vector<int> &types,
                                             const SearchOptions &opts = {});
std::string format_pseudo_csv(const std::vector<PseudoRow> &rows);

struct TwoDimParams {
    double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
    double F = 0, G = 0, H = 0, J = 0, K = 0, L = 0;
    TwoDimParams scaled_map(double kappa) const;
};

/// Sums over the two-qubit group {0..7} and single-qubit group {9,10,11,12,15,16}
/// with measurements dropped. Returns (both two-qubit, mixed, both single).
std::array<uint64_t, 3> group_sums_2d(const MalignancyMatrix &m);

/// Sums over the gate group (all types but 15, 16) and the wait group {15, 16}.
/// Returns (both gate, mixed, both wait).
std::array<uint64_t, 3> group_sums_wait(const MalignancyMatrix &m);

/// Fills a..f from the two-qubit and single-qubit gate matrices.
void extract_2d_params(const MalignancyMatrix &alpha_cnot, const MalignancyMatrix &alpha_swap, TwoDimParams &p);

/// Fills F, G, H (wait = false) or J, K, L (wait = true).
void extract_first_iter_params(const MalignancyMatrix &m, bool wait, TwoDimParams &p);

struct Map2dResult {
    /// Bisection boundary of the iterated map from (F g^2, J g^2).
    double gamma_iterated = 0;
    double ratio = 0;
    double x_star = 0;
    double y_star = 0;
    double gamma_x = 0;
    double gamma_y = 0;
    /// min(gamma_x, gamma_y).
    double gamma_fixed_point = 0;
};

struct Map2dOptions {
    double lo = 1e-8;
    double hi = 1e-2;
    double rel_tol = 1e-5;
    int max_iterations = 400;
    double floor = 1e-30;
    /// Wait rate as a fraction of the gate rate in the first iteration.
    double wait_ratio = 0;
};

/// Throws std::domain_error if the ratio cubic has no positive root.
Map2dResult map2d_threshold(const TwoDimParams &p, const Map2dOptions &opts = {});

/// Positive real roots of c r^3 + (2b - f) r^2 + (a - 2e) r - d, ascending.
std::vector<double> ratio_cubic_roots(const TwoDimParams &p);

struct ClosedFormResult {
    double x = 0;
    double y = 0;
    double gamma_x = 0;
    double gamma_y = 0;
    double gamma_min = 0;
    /// False when the corresponding denominator is not positive.
    bool x_valid = true;
    bool y_valid = true;
};
ClosedFormResult closed_form_threshold(const TwoDimParams &p);

/// 1 / count, clamped to 1.
double pair_cap(uint64_t count);
/// 1 / sqrt(C(n, 3)), clamped to 1.
double triple_cap(int n);

struct ThetaResult {
    double injected;
    double recursion_threshold;
};
ThetaResult theta_injection(double gamma_theta0, double gamma_cnot0);

}  // namespace latticeft

#endif
