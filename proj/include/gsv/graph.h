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

#ifndef GSV_GRAPH_H
#define GSV_GRAPH_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsv/gf2.h"

namespace gsv {

/// Simple undirected graph. Vertices are 0-based internally; text formats are 1-based.
class Graph {
   public:
    Graph() = default;
    explicit Graph(size_t n);
    static Graph from_edges(size_t n, const std::vector<std::pair<size_t, size_t>> &edges);

    static Graph empty(size_t n);
    static Graph complete(size_t n);
    static Graph path(size_t n);
    static Graph ring(size_t n);
    /// Star with center vertex 0.
    static Graph star(size_t n);

    size_t n() const {
        return n_;
    }
    const Gf2Matrix &adjacency() const {
        return adj_;
    }
    bool has_edge(size_t u, size_t v) const {
        return adj_.get(u, v);
    }
    void set_edge(size_t u, size_t v, bool on);
    void toggle_edge(size_t u, size_t v);
    const BitVector &neighbors(size_t v) const {
        return adj_.row(v);
    }
    /// Neighborhood as a word; only valid for n <= 64.
    uint64_t nbr_mask(size_t v) const {
        return adj_.row(v).word0();
    }
    size_t degree(size_t v) const {
        return adj_.row(v).popcount();
    }
    size_t num_edges() const;
    std::vector<std::pair<size_t, size_t>> edges() const;
    bool is_connected() const;
    bool is_empty() const {
        return num_edges() == 0;
    }
    /// Packed upper triangle, row-major over pairs (i<j). n <= 11.
    uint64_t key() const;

    bool operator==(const Graph &other) const = default;
    /// "1-2 2-3" style, 1-based.
    std::string edge_string() const;

   private:
    size_t n_ = 0;
    Gf2Matrix adj_;
};

struct Coloring {
    std::vector<size_t> colors;
    size_t k = 0;
};

struct ChromaticResult {
    size_t chi = 0;
    Coloring coloring;
};

struct Component {
    Graph graph;
    /// vertices[i] is the parent-graph vertex of component vertex i.
    std::vector<size_t> vertices;
};

bool is_proper_coloring(const Graph &g, const Coloring &c);
ChromaticResult chromatic_number(const Graph &g);
size_t independence_number(const Graph &g);
bool is_independent_set(const Graph &g, const BitVector &b);
bool is_maximal_independent_set(const Graph &g, const BitVector &b);
/// All maximal independent sets as vertex masks, increasing order. n <= 64.
std::vector<uint64_t> maximal_independent_sets(const Graph &g);

Graph local_complement(const Graph &g, size_t v);

struct LcOrbitStats {
    size_t chi_lc = 0;
    size_t orbit_size = 0;
    bool exhausted = false;
};
/// Min chromatic number over the local-complementation orbit.
/// Stops early once the trivial lower bound is met; `exhausted` reports whether the full orbit was visited.
LcOrbitStats chi_lc_search(const Graph &g, size_t budget = size_t{1} << 20);
size_t chi_lc(const Graph &g, size_t budget = size_t{1} << 20);

std::vector<Component> connected_components(const Graph &g);
/// Induced subgraph on `vertices` (in that order).
Graph induced_subgraph(const Graph &g, const std::vector<size_t> &vertices);

/// Relabeling that minimizes key(), searched within refined degree classes. n <= 10.
Graph canonical_form(const Graph &g);
/// One representative per isomorphism class, in canonical form, sorted by key. n <= 7.
std::vector<Graph> nonisomorphic_graphs(size_t n);

Graph parse_graph6(std::string_view s);
std::string emit_graph6(const Graph &g);
/// Lines "u v" (1-based). An optional "n N" line fixes the vertex count; '#' starts a comment.
Graph parse_edge_list(std::string_view text);

}  // namespace gsv

#endif
