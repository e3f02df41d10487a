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

#include "latticeft/threshold.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace latticeft {

const char *memory_rule_name(MemoryRule r) {
    switch (r) {
        case MemoryRule::TENTH:
            return "tenth";
        case MemoryRule::EQUAL:
            return "equal";
        case MemoryRule::ZERO_SWAP:
            return "zero-swap";
    }
    return "?";
}

MemoryRule parse_memory_rule(const std::string &s) {
    for (MemoryRule r : {MemoryRule::TENTH, MemoryRule::EQUAL, MemoryRule::ZERO_SWAP}) {
        if (s == memory_rule_name(r)) {
            return r;
        }
    }
    throw std::invalid_argument("unknown memory rule '" + s + "' (expected tenth, equal or zero-swap)");
}

double binomial(int n, int k) {
    if (k < 0 || n < k) {
        return 0;
    }
    double r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::array<int, NUM_LOCATION_TYPES> reference_exrec_sizes() {
    std::array<int, NUM_LOCATION_TYPES> n{};
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        if (t <= 7) {
            n[t] = 1225;
        } else if (t <= 10 || t == 15) {
            n[t] = 616;
        } else if (t <= 12) {
            n[t] = 469;
        } else if (t <= 14) {
            n[t] = 196;
        } else {
            n[t] = 378;
        }
    }
    return n;
}

std::array<int, NUM_LOCATION_TYPES> trailing_ec_exponents() {
    std::array<int, NUM_LOCATION_TYPES> q{};
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        q[t] = t <= 7 ? 2 : (t == 13 || t == 14) ? 0 : 1;
    }
    return q;
}

ModelConfig ModelConfig::scaled(double kappa) const {
    ModelConfig c = *this;
    for (auto &m : c.matrices) {
        m = m.scaled(kappa);
    }
    return c;
}

double anc_pass_probability(const RateVector &rates, const BadLocationCount &badloc, int gv_total) {
    double s = 0, gmax = 0;
    for (int t = 0; t < NUM_LOCATION_TYPES; t++) {
        s += badloc[t] * rates[t];
        gmax = std::max(gmax, rates[t]);
    }
    s += binomial(gv_total, 2) * gmax * gmax;
    return std::clamp(1 - std::min(1.0, s), 0.0, 1.0);
}

double ec_occurs_probability(double p_pass) {
    return p_pass * p_pass + 2 * p_pass * p_pass * (1 - p_pass);
}

RateVector flow_map(const RateVector &g, const ModelConfig &config) {
    double occurs = ec_occurs_probability(anc_pass_probability(g, config.badloc, config.gv_total));
    double gmax = *std::max_element(g.begin(), g.end());
    RateVector out{};
    for (int l = 0; l < NUM_LOCATION_TYPES; l++) {
        const MalignancyMatrix &m = config.matrices[l];
        double pair = 0;
        for (int i = 0; i < NUM_LOCATION_TYPES; i++) {
            for (int j = i; j < NUM_LOCATION_TYPES; j++) {
                pair += double(m.alpha[i][j]) * g[i] * g[j];
            }
        }
        double triple = config.include_triple ? binomial(config.sizes[l], 3) * gmax * gmax * gmax : 0;
        double v = (1 - std::pow(occurs, config.q[l])) + pair + triple;
        out[l] = std::clamp(v, 0.0, 1.0);
    }
    if (config.memory_rule == MemoryRule::ZERO_SWAP) {
        out[9] = out[10] = 0;
    }
    return out;
}

RateVector initial_rates(double gamma, MemoryRule rule) {
    RateVector r;
    r.fill(gamma);
    if (rule != MemoryRule::EQUAL) {
        r[15] = r[16] = gamma / 10;
    }
    if (rule == MemoryRule::ZERO_SWAP) {
        r[9] = r[10] = 0;
    }
    return r;
}

std::vector<RateVector> trajectory(double gamma, const ModelConfig &config, int levels) {
    std::vector<RateVector> t = {initial_rates(gamma, config.memory_rule)};
    for (int r = 0; r < levels; r++) {
        t.push_back(flow_map(t.back(), config));
    }
    return t;
}

bool below_threshold(double gamma, const ModelConfig &config, const SearchOptions &opts) {
    RateVector g = initial_rates(gamma, config.memory_rule);
    for (int r = 0; r < opts.levels; r++) {
        g = flow_map(g, config);
    }
    return *std::max_element(g.begin(), g.end()) < opts.floor;
}

namespace {

/// Geometric bisection for the boundary of a predicate true at lo and false at hi.
template <typename P>
double bisect(double lo, double hi, double rel_tol, P below) {
    while (hi / lo - 1 > rel_tol) {
        double mid = std::sqrt(lo * hi);
        if (below(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

double threshold_search(const ModelConfig &config, const SearchOptions &opts) {
    auto below = [&](double g) { return below_threshold(g, config, opts); };
    if (!below(opts.lo) || below(opts.hi)) {
        throw BracketError("threshold not bracketed by [" + sci(opts.lo) + ", " + sci(opts.hi) + "]");
    }
    return bisect(opts.lo, opts.hi, opts.rel_tol, below);
}

double pseudothreshold(const ModelConfig &config, int level, int type, const SearchOptions &opts) {
    auto below = [&](double g) { return trajectory(g, config, level)[level][type] < g; };
    if (!below(opts.lo) || below(opts.hi)) {
        throw BracketError("no level-" + std::to_string(level) + " crossing for type " + std::to_string(type));
    }
    return bisect(opts.lo, opts.hi, opts.rel_tol, below);
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    for (int k = 0; k < n; k++) {
        double t = n == 1 ? 0 : double(k) / (n - 1);
        g.push_back(lo * std::pow(hi / lo, t));
    }
    return g;
}

std::vector<TripRow> trip_table(const ModelConfig &config, const std::vector<double> &grid, int levels,
                                const std::vector<int> &types) {
    std::vector<TripRow> rows;
    for (double g : grid) {
        auto t = trajectory(g, config, levels);
        for (int r = 1; r <= levels; r++) {
            for (int type : types) {
                rows.push_back({g, r, type, t[r][type]});
            }
        }
    }
    return rows;
}

std::string format_trip_csv(const std::vector<TripRow> &rows) {
    std::ostringstream out;
    out << "gamma0,level,type,gamma_r\n";
    char buf[96];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof(buf), "%.9e,%d,%d,%.9e\n", r.gamma0, r.level, r.type, r.gamma_r);
        out << buf;
    }
    return out.str();
}

std::vector<PseudoRow> pseudothreshold_table(const ModelConfig &config, int levels, const std::vector<int> &types,
                                             const SearchOptions &opts) {
    std::vector<PseudoRow> rows;
    for (int r = 1; r <= levels; r++) {
        for (int type : types) {
            double v;
            try {
                v = pseudothreshold(config, r, type, opts);
            } catch (const BracketError &) {
                v = std::numeric_limits<double>::quiet_NaN();
            }
            rows.push_back({r, type, v});
        }
    }
    return rows;
}

std::string format_pseudo_csv(const std::vector<PseudoRow> &rows) {
    std::ostringstream out;
    out << "level,type,pseudothreshold\n";
    char buf[96];
    for (const auto &r : rows) {
        if (std::isnan(r.pseudothreshold)) {
            std::snprintf(buf, sizeof(buf), "%d,%d,nan\n", r.level, r.type);
        } else {
            std::snprintf(buf, sizeof(buf), "%d,%d,%.9e\n", r.level, r.type, r.pseudothreshold);
        }
        out << buf;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Two-dimensional approximation.

TwoDimParams TwoDimParams::scaled_map(double kappa) const {
    TwoDimParams p = *this;
    p.a *= kappa;
    p.b *= kappa;
    p.c *= kappa;
    p.d *= kappa;
    p.e *= kappa;
    p.f *= kappa;
    return p;
}

namespace {

std::array<uint64_t, 3> grouped(const MalignancyMatrix &m, bool (*in1)(int), bool (*in2)(int)) {
    std::array<uint64_t, 3> s{};
    for (int i = 0; i < NUM_LOCATION_TYPES; i++) {
        for (int j = i; j < NUM_LOCATION_TYPES; j++) {
            uint64_t v = m.alpha[i][j];
            if (in1(i) && in1(j)) {
                s[0] += v;
            } else if (in2(i) && in2(j)) {
                s[2] += v;
            } else if ((in1(i) && in2(j)) || (in2(i) && in1(j))) {
                s[1] += v;
            }
        }
    }
    return s;
}

bool two_qubit_group(int t) {
    return t <= 7;
}
bool single_qubit_group(int t) {
    return t == 9 || t == 10 || t == 11 || t == 12 || t == 15 || t == 16;
}
bool wait_group(int t) {
    return t == 15 || t == 16;
}
bool gate_group(int t) {
    return !wait_group(t);
}

}  // namespace

std::array<uint64_t, 3> group_sums_2d(const MalignancyMatrix &m) {
    return grouped(m, two_qubit_group, single_qubit_group);
}

std::array<uint64_t, 3> group_sums_wait(const MalignancyMatrix &m) {
    return grouped(m, gate_group, wait_group);
}

void extract_2d_params(const MalignancyMatrix &alpha_cnot, const MalignancyMatrix &alpha_swap, TwoDimParams &p) {
    auto s0 = group_sums_2d(alpha_cnot);
    auto s9 = group_sums_2d(alpha_swap);
    p.a = double(s0[0]);
    p.b = double(s0[1]) / 2;
    p.c = double(s0[2]);
    p.d = double(s9[0]);
    p.e = double(s9[1]) / 2;
    p.f = double(s9[2]);
}

void extract_first_iter_params(const MalignancyMatrix &m, bool wait, TwoDimParams &p) {
    auto s = group_sums_wait(m);
    double &g = wait ? p.J : p.F;
    double &mixed = wait ? p.K : p.G;
    double &w = wait ? p.L : p.H;
    g = double(s[0]);
    mixed = double(s[1]) / 2;
    w = double(s[2]);
}

std::vector<double> ratio_cubic_roots(const TwoDimParams &p) {
    // c r^3 + (2b - f) r^2 + (a - 2e) r - d = 0 with r = y / x at the fixed point.
    double c3 = p.c, c2 = 2 * p.b - p.f, c1 = p.a - 2 * p.e, c0 = -p.d;
    auto poly = [&](double r) { return ((c3 * r + c2) * r + c1) * r + c0; };
    // Bracket sign changes on a log grid, then refine.
    std::vector<double> roots;
    std::vector<double> grid = {0};
    for (double r = 1e-9; r < 1e9; r *= 1.05) {
        grid.push_back(r);
    }
    for (size_t k = 1; k < grid.size(); k++) {
        double lo = grid[k - 1], hi = grid[k];
        double flo = poly(lo);
        if ((flo < 0) == (poly(hi) < 0)) {
            continue;
        }
        for (int it = 0; it < 200; it++) {
            double mid = 0.5 * (lo + hi);
            if ((poly(mid) < 0) == (flo < 0)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    return roots;
}

Map2dResult map2d_threshold(const TwoDimParams &p, const Map2dOptions &opts) {
    Map2dResult r;
    auto roots = ratio_cubic_roots(p);
    if (roots.empty()) {
        throw std::domain_error("ratio cubic has no positive root");
    }
    r.ratio = roots.front();
    r.x_star = 1 / (p.a + 2 * p.b * r.ratio + p.c * r.ratio * r.ratio);
    r.y_star = r.ratio * r.x_star;
    r.gamma_x = p.F > 0 ? std::sqrt(r.x_star / p.F) : std::numeric_limits<double>::infinity();
    r.gamma_y = p.J > 0 ? std::sqrt(r.y_star / p.J) : std::numeric_limits<double>::infinity();
    r.gamma_fixed_point = std::min(r.gamma_x, r.gamma_y);

    auto converges = [&](double g) {
        double w = opts.wait_ratio * g;
        double x = p.F * g * g + 2 * p.G * g * w + p.H * w * w;
        double y = p.J * g * g + 2 * p.K * g * w + p.L * w * w;
        for (int it = 0; it < opts.max_iterations; it++) {
            if (std::max(x, y) < opts.floor) {
                return true;
            }
            if (std::max(x, y) > 1) {
                return false;
            }
            double nx = p.a * x * x + 2 * p.b * x * y + p.c * y * y;
            double ny = p.d * x * x + 2 * p.e * x * y + p.f * y * y;
            x = nx;
            y = ny;
        }
        return std::max(x, y) < opts.floor;
    };
    if (!converges(opts.lo) || converges(opts.hi)) {
        throw BracketError("2D map threshold not bracketed by [" + sci(opts.lo) + ", " + sci(opts.hi) + "]");
    }
    r.gamma_iterated = bisect(opts.lo, opts.hi, opts.rel_tol, converges);
    return r;
}

ClosedFormResult closed_form_threshold(const TwoDimParams &p) {
    ClosedFormResult r;
    double dx = p.a * p.c + 4 * p.c * p.e - 2 * p.b * p.f - p.f * p.f;
    double dy = p.a * p.a + 4 * p.b * p.d - 2 * p.a * p.e + p.d * p.f;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.x_valid = dx > 0 && p.F > 0;
    r.y_valid = dy > 0 && p.J > 0;
    r.x = dx != 0 ? p.c / dx : nan;
    r.y = dy != 0 ? p.d / dy : nan;
    r.gamma_x = r.x_valid ? std::sqrt(p.c / (p.F * dx)) : nan;
    r.gamma_y = r.y_valid ? std::sqrt(p.d / (p.J * dy)) : nan;
    if (r.x_valid && r.y_valid) {
        r.gamma_min = std::min(r.gamma_x, r.gamma_y);
    } else if (r.x_valid) {
        r.gamma_min = r.gamma_x;
    } else if (r.y_valid) {
        r.gamma_min = r.gamma_y;
    } else {
        r.gamma_min = nan;
    }
    return r;
}

double pair_cap(uint64_t count) {
    if (count == 0) {
        throw std::invalid_argument("pair count must be positive");
    }
    return std::min(1.0, 1.0 / double(count));
}

double triple_cap(int n) {
    double c = binomial(n, 3);
    if (c <= 0) {
        throw std::invalid_argument("triple cap needs at least 3 locations");
    }
    return std::min(1.0, 1.0 / std::sqrt(c));
}

ThetaResult theta_injection(double gamma_theta0, double gamma_cnot0) {
    if (gamma_theta0 < 0 || gamma_theta0 > 1 || gamma_cnot0 < 0 || gamma_cnot0 > 1) {
        throw std::invalid_argument("rates must lie in [0, 1]");
    }
    return {gamma_theta0 + 10 * gamma_cnot0, 1 / binomial(84, 2)};
}

}  // namespace latticeft
