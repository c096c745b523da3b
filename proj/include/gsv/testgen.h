// Copyright 2026 The gsv Authors
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

#ifndef GSV_TESTGEN_H
#define GSV_TESTGEN_H

#include <string>
#include <vector>

#include "gsv/gf2.h"
#include "gsv/graph.h"
#include "gsv/rational.h"
#include "gsv/stabilizer.h"
#include "gsv/symplectic.h"

namespace gsv {

/// Diagonal of a canonical test projector in the graph basis, w = 0 omitted.
/// Bit (index(w) - 1) holds <G_w|P|G_w>, index(w) = sum_j 2^j w_j with qubit 0 least significant.
struct TestVector {
    size_t n = 0;
    SymplecticVector setting;
    size_t rank = 0;
    BitVector bits;

    /// Entry for w given as an index in [1, 2^n).
    bool at(uint64_t index) const {
        return bits.get(index - 1);
    }
    bool trivial() const {
        return rank == n;
    }
    /// tr(P) = 2^rank.
    uint64_t projector_rank() const {
        return uint64_t{1} << rank;
    }
};

inline constexpr size_t kDefaultEnumerationLimit = 12;

Gf2Matrix a_mu(const Graph &g, const SymplecticVector &mu);
/// Rows of M-tilde for a maximal stabilizer group and a possibly incomplete setting.
Gf2Matrix m_tilde(const StabilizerBasis &s, const SymplecticVector &mu);

TestVector test_vector_graph(const Graph &g, const SymplecticVector &mu);
TestVector test_vector_stab(const StabilizerBasis &s, const SymplecticVector &mu);

std::vector<TestVector> all_nontrivial_test_vectors(const Graph &g, size_t limit = kDefaultEnumerationLimit);
/// Nontrivial test vectors over an arbitrary per-qubit alphabet (e.g. {"XZ", "XZ", ...}).
std::vector<TestVector> restricted_nontrivial_test_vectors(const Graph &g, const std::vector<std::string> &alphabets,
                                                           size_t limit = kDefaultEnumerationLimit);
/// Drops vectors shared by several settings, then vectors strictly dominated by a lower-rank one.
std::vector<TestVector> filter_admissible(const std::vector<TestVector> &nontrivial);
std::vector<TestVector> admissible_test_vectors(const Graph &g, size_t limit = kDefaultEnumerationLimit);

size_t kappa(const Graph &g, size_t limit = kDefaultEnumerationLimit);
Rational lambda_p(const Graph &g, size_t limit = kDefaultEnumerationLimit);

/// X on b, Z elsewhere.
SymplecticVector xz_setting(const BitVector &b);
TestVector xz_test_vector(const Graph &g, const BitVector &b);
std::vector<TestVector> xz_admissible_test_vectors(const Graph &g, size_t limit = kDefaultEnumerationLimit);

/// Element-wise AND of the given test vectors (all ones for an empty list).
BitVector test_vector_product(const std::vector<const TestVector *> &tvs, size_t n);

}  // namespace gsv

#endif
