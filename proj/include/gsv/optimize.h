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

#ifndef GSV_OPTIMIZE_H
#define GSV_OPTIMIZE_H

#include <optional>
#include <string>
#include <vector>

#include "gsv/graph.h"
#include "gsv/protocol.h"
#include "gsv/rational.h"
#include "gsv/testgen.h"

namespace gsv {

struct LpSolution {
    Rational beta = 1;
    /// One weight per input test vector.
    std::vector<Rational> p;
    /// Indices w (as index(w)) with (A p)_w == beta.
    std::vector<uint64_t> active;
    /// False when the inputs cannot verify the state (beta == 1).
    bool valid = false;
    /// Support of p as a protocol.
    Protocol protocol;
    size_t pivots = 0;
};

/// minimize max_w (A p)_w over the probability simplex, exactly.
LpSolution max_gap_lp(const std::vector<TestVector> &tvs);
LpSolution max_gap_lp_xz(const Graph &g, size_t limit = kDefaultEnumerationLimit);
/// The full pipeline: admissible sweep, then the LP.
LpSolution optimal_protocol(const Graph &g, size_t limit = kDefaultEnumerationLimit);

struct MinSettingsResult {
    size_t m = 0;
    Protocol protocol;
};

/// Smallest subset whose element-wise product vanishes; uniform 1/m weights.
/// Ties go to the lexicographically least index set. Throws InvalidProtocol if nothing covers.
MinSettingsResult min_settings(const std::vector<TestVector> &tvs);
/// As above but only sizes in [lower, upper]; nullopt if none that small.
std::optional<MinSettingsResult> min_settings_bounded(const std::vector<TestVector> &tvs, size_t lower, size_t upper);

struct TwoBasisResult {
    size_t m = 0;
    Protocol protocol;
    /// Per-qubit two-letter alphabets of the witness.
    std::vector<std::string> alphabets;
};
TwoBasisResult min_settings_two_basis(const Graph &g, size_t max_n = 8);

Protocol coloring_protocol(const Graph &g, const Coloring &c);
Protocol odd_ring_xz_protocol(size_t n);
/// Star with center vertex 0.
Protocol star_optimal_protocol(size_t n);

/// Joint protocol for a disjoint union; component protocols are coupled through their cumulative
/// distributions so each marginal is preserved exactly.
Protocol compose_product_protocol(const std::vector<Component> &parts, const std::vector<Protocol> &protos, size_t n);
/// Concatenates (graph, protocol) pairs in order.
Protocol compose_product_protocol(const std::vector<std::pair<Graph, Protocol>> &parts);
/// Uniform protocols combined index by index, identity-padded, weight 1/max m_j.
Protocol compose_uniform_protocol(const std::vector<Component> &parts, const std::vector<Protocol> &protos, size_t n);

/// Fractional chromatic number via LP over maximal independent sets.
Rational chi_star(const Graph &g);

}  // namespace gsv

#endif
