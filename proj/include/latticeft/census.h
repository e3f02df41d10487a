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

#ifndef _LATTICEFT_CENSUS_H
#define _LATTICEFT_CENSUS_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "latticeft/engine.h"
#include "latticeft/simd.h"

namespace latticeft {

/// Upper-triangular table of malignant pair counts by location type.
struct MalignancyMatrix {
    int exrec = -1;
    Mode mode = Mode::LOCAL;
    /// Only entries with i <= j are meaningful.
    std::array<std::array<uint64_t, NUM_LOCATION_TYPES>, NUM_LOCATION_TYPES> alpha{};

    /// Symmetric access.
    uint64_t at(int i, int j) const {
        return i <= j ? alpha[i][j] : alpha[j][i];
    }
    void add(int i, int j, uint64_t v = 1) {
        if (i <= j) {
            alpha[i][j] += v;
        } else {
            alpha[j][i] += v;
        }
    }
    MalignancyMatrix &operator+=(const MalignancyMatrix &other);
    MalignancyMatrix scaled(double kappa) const;
    uint64_t total() const;
    bool operator==(const MalignancyMatrix &other) const;
};

std::string format_matrix(const MalignancyMatrix &m);
MalignancyMatrix parse_matrix(const std::string &text);
void write_matrix(const MalignancyMatrix &m, const std::string &path);
MalignancyMatrix read_matrix(const std::string &path);

/// Checks alpha[i][j] <= N_i N_j (i != j) and alpha[i][i] <= C(N_i, 2).
/// Returns an empty string on success, otherwise a description.
std::string check_matrix_bounds(const MalignancyMatrix &m, const std::array<int, NUM_LOCATION_TYPES> &counts);

struct CensusOptions {
    int workers = 1;
    /// Only the first max_sites sites carry faults (-1 for all).
    int max_sites = -1;
    /// Kernels used for signature arithmetic (active_kernels() if null).
    const simd::Kernels *kernels = nullptr;
    /// Restricts two-qubit fault alphabets to these codes when non-empty.
    std::vector<uint8_t> two_qubit_alphabet;
};

struct CensusStats {
    uint64_t pairs = 0;
    uint64_t evaluations = 0;
    uint64_t path_switches = 0;
    uint64_t ec_failure_pairs = 0;
};

/// Precomputed single-fault observable signatures of a program along every
/// branch path. Pair outcomes are obtained by XOR plus a short replay of
/// branch and syndrome decisions.
class SignatureTable {
   public:
    SignatureTable(const Program &p, const simd::Kernels &kernels);

    Verdict evaluate(int s1, int a1, int s2, int a2, uint64_t *path_switches = nullptr) const;
    Verdict evaluate_single(int s, int a) const;

    size_t num_observables() const {
        return num_obs_;
    }
    size_t words() const {
        return words_;
    }
    /// Alphabet indices of site s whose signatures differ on some path.
    const std::vector<int> &representatives(int s) const {
        return reps_[s];
    }
    /// Signature of (site, alphabet index) on a path, or null if inactive.
    const uint64_t *signature(int path, int s, int a) const;

   private:
    struct Event {
        int step;
        bool is_branch;
        int index;
    };
    const Program &p_;
    const simd::Kernels &k_;
    size_t num_obs_ = 0;
    size_t words_ = 0;
    std::vector<int> obs_of_site_;
    std::vector<std::array<int, 7>> out_x_obs_;
    std::vector<std::array<int, 7>> out_z_obs_;
    std::vector<std::vector<int64_t>> base_;
    std::vector<uint64_t> pool_;
    std::vector<std::vector<Event>> events_;
    /// corr_[path][syndrome * 7 + j] -> offset into pool_ (or -1).
    std::vector<std::vector<int64_t>> corr_;
    std::vector<std::vector<int>> reps_;

    Verdict finish(uint64_t *sig) const;
};

MalignancyMatrix census_pairs(const Program &p, const CensusOptions &opts = {}, CensusStats *stats = nullptr);

/// Unoptimized reference: forward-simulates every pair and every Pauli combination.
MalignancyMatrix census_pairs_oracle(const Program &p, int max_sites = -1,
                                     const std::vector<uint8_t> &two_qubit_alphabet = {});

/// Number of (site, Pauli) single faults that are malignant.
uint64_t census_single_malignant(const Program &p);

using BadLocationCount = std::array<int, NUM_LOCATION_TYPES>;

/// Per-type number of sites for which some single fault fails branchpoint `bp`.
BadLocationCount census_badloc(const Program &gv, int bp = 0);

std::string format_badloc(const BadLocationCount &b);
BadLocationCount parse_badloc(const std::string &text);
BadLocationCount read_badloc(const std::string &path);

}  // namespace latticeft

#endif
