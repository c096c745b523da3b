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

#include "gsv/graph.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "gsv/errors.h"

namespace gsv {

namespace {

uint64_t low_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

uint64_t as_mask(const Graph &g, const BitVector &b) {
    require(b.len() == g.n(), "vertex set size mismatch");
    require(g.n() <= 64, "vertex sets limited to 64 vertices");
    return b.word0();
}

}  // namespace

Graph::Graph(size_t n) : n_(n), adj_(n, n) {
}

Graph Graph::from_edges(size_t n, const std::vector<std::pair<size_t, size_t>> &edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.set_edge(u, v, true);
    }
    return g;
}

Graph Graph::empty(size_t n) {
    return Graph(n);
}

Graph Graph::complete(size_t n) {
    Graph g(n);
    for (size_t u = 0; u < n; u++) {
        for (size_t v = u + 1; v < n; v++) {
            g.set_edge(u, v, true);
        }
    }
    return g;
}

Graph Graph::path(size_t n) {
    Graph g(n);
    for (size_t v = 0; v + 1 < n; v++) {
        g.set_edge(v, v + 1, true);
    }
    return g;
}

Graph Graph::ring(size_t n) {
    require(n >= 3, "ring needs at least 3 vertices");
    Graph g = path(n);
    g.set_edge(n - 1, 0, true);
    return g;
}

Graph Graph::star(size_t n) {
    Graph g(n);
    for (size_t v = 1; v < n; v++) {
        g.set_edge(0, v, true);
    }
    return g;
}

void Graph::set_edge(size_t u, size_t v, bool on) {
    require(u < n_ && v < n_, "vertex out of range");
    require(u != v, "self loops are not allowed");
    adj_.set(u, v, on);
    adj_.set(v, u, on);
}

void Graph::toggle_edge(size_t u, size_t v) {
    set_edge(u, v, !has_edge(u, v));
}

size_t Graph::num_edges() const {
    size_t e = 0;
    for (size_t v = 0; v < n_; v++) {
        e += degree(v);
    }
    return e / 2;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t u = 0; u < n_; u++) {
        for (size_t v = u + 1; v < n_; v++) {
            if (has_edge(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) {
        return true;
    }
    std::vector<bool> seen(n_, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t u = 0; u < n_; u++) {
            if (!seen[u] && has_edge(v, u)) {
                seen[u] = true;
                count++;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

uint64_t Graph::key() const {
    require(n_ <= 11, "Graph::key supports n <= 11");
    uint64_t k = 0;
    size_t bit = 0;
    for (size_t u = 0; u < n_; u++) {
        for (size_t v = u + 1; v < n_; v++, bit++) {
            if (has_edge(u, v)) {
                k |= uint64_t{1} << bit;
            }
        }
    }
    return k;
}

std::string Graph::edge_string() const {
    std::string s;
    for (auto [u, v] : edges()) {
        if (!s.empty()) {
            s += ' ';
        }
        s += std::to_string(u + 1) + "-" + std::to_string(v + 1);
    }
    return s;
}

bool is_proper_coloring(const Graph &g, const Coloring &c) {
    if (c.colors.size() != g.n()) {
        return false;
    }
    for (size_t v = 0; v < g.n(); v++) {
        if (c.colors[v] >= c.k) {
            return false;
        }
    }
    for (auto [u, v] : g.edges()) {
        if (c.colors[u] == c.colors[v]) {
            return false;
        }
    }
    return true;
}

namespace {

// DSATUR backtracking: can g be colored with k colors?
struct Colorer {
    size_t n;
    std::vector<uint64_t> nbr;
    size_t k;
    std::vector<int> color;

    bool run(size_t colored, size_t used) {
        if (colored == n) {
            return true;
        }
        size_t best = n;
        int best_sat = -1;
        int best_deg = -1;
        for (size_t v = 0; v < n; v++) {
            if (color[v] >= 0) {
                continue;
            }
            uint64_t seen = 0;
            int deg = 0;
            for (size_t u = 0; u < n; u++) {
                if ((nbr[v] >> u) & 1) {
                    if (color[u] >= 0) {
                        seen |= uint64_t{1} << color[u];
                    } else {
                        deg++;
                    }
                }
            }
            int sat = std::popcount(seen);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        uint64_t forbidden = 0;
        for (size_t u = 0; u < n; u++) {
            if (((nbr[best] >> u) & 1) && color[u] >= 0) {
                forbidden |= uint64_t{1} << color[u];
            }
        }
        size_t limit = std::min(k, used + 1);
        for (size_t c = 0; c < limit; c++) {
            if ((forbidden >> c) & 1) {
                continue;
            }
            color[best] = (int)c;
            if (run(colored + 1, std::max(used, c + 1))) {
                return true;
            }
            color[best] = -1;
        }
        return false;
    }
};

size_t greedy_clique_bound(const std::vector<uint64_t> &nbr, size_t n) {
    size_t best = n > 0 ? 1 : 0;
    for (size_t s = 0; s < n; s++) {
        uint64_t cand = nbr[s];
        size_t size = 1;
        while (cand) {
            size_t pick = 0;
            int pick_deg = -1;
            for (uint64_t c = cand; c; c &= c - 1) {
                size_t v = std::countr_zero(c);
                int d = std::popcount(nbr[v] & cand);
                if (d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            size++;
            cand &= nbr[pick];
        }
        best = std::max(best, size);
    }
    return best;
}

}  // namespace

ChromaticResult chromatic_number(const Graph &g) {
    size_t n = g.n();
    require(n >= 1, "chromatic_number: empty vertex set");
    require(n <= 64, "chromatic_number: n > 64");
    std::vector<uint64_t> nbr(n);
    for (size_t v = 0; v < n; v++) {
        nbr[v] = g.nbr_mask(v);
    }
    for (size_t k = greedy_clique_bound(nbr, n); k <= n; k++) {
        Colorer c{n, nbr, k, std::vector<int>(n, -1)};
        if (c.run(0, 0)) {
            ChromaticResult r;
            r.chi = k;
            r.coloring.k = k;
            r.coloring.colors.assign(c.color.begin(), c.color.end());
            return r;
        }
    }
    throw ContractViolation("chromatic_number: unreachable");
}

namespace {

size_t max_independent(const std::vector<uint64_t> &nbr, uint64_t cand) {
    if (!cand) {
        return 0;
    }
    size_t v = std::countr_zero(cand);
    // Either v is out, or v is in and its neighbors are out.
    size_t with = 1 + max_independent(nbr, cand & ~nbr[v] & ~(uint64_t{1} << v));
    if ((nbr[v] & cand) == 0) {
        return with;
    }
    size_t without = max_independent(nbr, cand & ~(uint64_t{1} << v));
    return std::max(with, without);
}

}  // namespace

size_t independence_number(const Graph &g) {
    require(g.n() <= 64, "independence_number: n > 64");
    std::vector<uint64_t> nbr(g.n());
    for (size_t v = 0; v < g.n(); v++) {
        nbr[v] = g.nbr_mask(v);
    }
    return max_independent(nbr, low_mask(g.n()));
}

bool is_independent_set(const Graph &g, const BitVector &b) {
    uint64_t m = as_mask(g, b);
    for (uint64_t r = m; r; r &= r - 1) {
        if (g.nbr_mask(std::countr_zero(r)) & m) {
            return false;
        }
    }
    return true;
}

bool is_maximal_independent_set(const Graph &g, const BitVector &b) {
    if (!is_independent_set(g, b)) {
        return false;
    }
    uint64_t m = b.word0();
    for (size_t v = 0; v < g.n(); v++) {
        if (!((m >> v) & 1) && !(g.nbr_mask(v) & m)) {
            return false;
        }
    }
    return true;
}

namespace {

void bron_kerbosch(const std::vector<uint64_t> &non, uint64_t r, uint64_t p, uint64_t x, std::vector<uint64_t> &out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    uint64_t px = p | x;
    size_t pivot = std::countr_zero(px);
    for (uint64_t c = p & ~non[pivot]; c; c &= c - 1) {
        size_t v = std::countr_zero(c);
        uint64_t bit = uint64_t{1} << v;
        bron_kerbosch(non, r | bit, p & non[v], x & non[v], out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

std::vector<uint64_t> maximal_independent_sets(const Graph &g) {
    size_t n = g.n();
    require(n <= 64, "maximal_independent_sets: n > 64");
    uint64_t all = low_mask(n);
    // Maximal independent sets are maximal cliques of the complement.
    std::vector<uint64_t> non(n);
    for (size_t v = 0; v < n; v++) {
        non[v] = all & ~g.nbr_mask(v) & ~(uint64_t{1} << v);
    }
    std::vector<uint64_t> out;
    if (n > 0) {
        bron_kerbosch(non, 0, all, 0, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph local_complement(const Graph &g, size_t v) {
    require(v < g.n(), "local_complement: vertex out of range");
    Graph r = g;
    std::vector<size_t> nb;
    for (size_t u = 0; u < g.n(); u++) {
        if (g.has_edge(v, u)) {
            nb.push_back(u);
        }
    }
    for (size_t i = 0; i < nb.size(); i++) {
        for (size_t j = i + 1; j < nb.size(); j++) {
            r.toggle_edge(nb[i], nb[j]);
        }
    }
    return r;
}

LcOrbitStats chi_lc_search(const Graph &g, size_t budget) {
    require(g.n() >= 1 && g.n() <= 10, "chi_lc: n must be in [1, 10]");
    LcOrbitStats st;
    st.chi_lc = chromatic_number(g).chi;
    size_t floor = g.is_empty() ? 1 : 2;
    std::unordered_set<uint64_t> seen{g.key()};
    std::deque<Graph> queue{g};
    while (!queue.empty()) {
        if (st.chi_lc == floor) {
            st.orbit_size = seen.size();
            return st;
        }
        Graph cur = std::move(queue.front());
        queue.pop_front();
        for (size_t v = 0; v < cur.n(); v++) {
            Graph nxt = local_complement(cur, v);
            if (!seen.insert(nxt.key()).second) {
                continue;
            }
            if (seen.size() > budget) {
                throw BudgetExceeded("chi_lc: orbit budget exceeded");
            }
            st.chi_lc = std::min(st.chi_lc, chromatic_number(nxt).chi);
            queue.push_back(std::move(nxt));
        }
    }
    st.orbit_size = seen.size();
    st.exhausted = true;
    return st;
}

size_t chi_lc(const Graph &g, size_t budget) {
    return chi_lc_search(g, budget).chi_lc;
}

Graph induced_subgraph(const Graph &g, const std::vector<size_t> &vertices) {
    Graph s(vertices.size());
    for (size_t i = 0; i < vertices.size(); i++) {
        for (size_t j = i + 1; j < vertices.size(); j++) {
            if (g.has_edge(vertices[i], vertices[j])) {
                s.set_edge(i, j, true);
            }
        }
    }
    return s;
}

std::vector<Component> connected_components(const Graph &g) {
    std::vector<Component> out;
    std::vector<bool> seen(g.n(), false);
    for (size_t s = 0; s < g.n(); s++) {
        if (seen[s]) {
            continue;
        }
        std::vector<size_t> verts;
        std::vector<size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (size_t u = 0; u < g.n(); u++) {
                if (!seen[u] && g.has_edge(v, u)) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(Component{induced_subgraph(g, verts), verts});
    }
    return out;
}

namespace {

// Isomorphism-invariant vertex classes by iterated neighbor-color refinement.
std::vector<size_t> refined_colors(const Graph &g) {
    size_t n = g.n();
    std::vector<size_t> color(n);
    for (size_t v = 0; v < n; v++) {
        color[v] = g.degree(v);
    }
    size_t classes = 0;
    while (true) {
        std::vector<std::vector<size_t>> sig(n);
        for (size_t v = 0; v < n; v++) {
            sig[v].push_back(color[v]);
            std::vector<size_t> nb;
            for (size_t u = 0; u < n; u++) {
                if (g.has_edge(u, v)) {
                    nb.push_back(color[u]);
                }
            }
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<size_t>, size_t> ids;
        for (const auto &s : sig) {
            ids.emplace(s, 0);
        }
        size_t next = 0;
        for (auto &kv : ids) {
            kv.second = next++;
        }
        for (size_t v = 0; v < n; v++) {
            color[v] = ids[sig[v]];
        }
        if (ids.size() == classes) {
            return color;
        }
        classes = ids.size();
    }
}

}  // namespace

Graph canonical_form(const Graph &g) {
    size_t n = g.n();
    require(n <= 10, "canonical_form supports n <= 10");
    if (n <= 1) {
        return g;
    }
    auto color = refined_colors(g);
    std::vector<size_t> order(n);
    for (size_t v = 0; v < n; v++) {
        order[v] = v;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return color[a] < color[b]; });
    std::vector<std::pair<size_t, size_t>> ranges;
    for (size_t i = 0; i < n;) {
        size_t j = i;
        while (j < n && color[order[j]] == color[order[i]]) {
            j++;
        }
        ranges.emplace_back(i, j);
        i = j;
    }
    uint64_t best_key = ~uint64_t{0};
    std::vector<size_t> best;
    // order[pos] = old vertex placed at new position pos.
    auto relabeled_key = [&]() {
        uint64_t k = 0;
        size_t bit = 0;
        for (size_t a = 0; a < n; a++) {
            for (size_t b = a + 1; b < n; b++, bit++) {
                if (g.has_edge(order[a], order[b])) {
                    k |= uint64_t{1} << bit;
                }
            }
        }
        return k;
    };
    std::function<void(size_t)> rec = [&](size_t r) {
        if (r == ranges.size()) {
            uint64_t k = relabeled_key();
            if (k < best_key) {
                best_key = k;
                best = order;
            }
            return;
        }
        auto first = order.begin() + (long)ranges[r].first;
        auto last = order.begin() + (long)ranges[r].second;
        std::sort(first, last);
        do {
            rec(r + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);
    Graph out(n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (g.has_edge(best[a], best[b])) {
                out.set_edge(a, b, true);
            }
        }
    }
    return out;
}

std::vector<Graph> nonisomorphic_graphs(size_t n) {
    require(n <= 7, "nonisomorphic_graphs supports n <= 7");
    if (n == 0) {
        return {Graph(0)};
    }
    std::map<uint64_t, Graph> seen;
    for (const auto &h : nonisomorphic_graphs(n - 1)) {
        for (uint64_t nb = 0; nb < (uint64_t{1} << (n - 1)); nb++) {
            Graph g(n);
            for (auto [u, v] : h.edges()) {
                g.set_edge(u, v, true);
            }
            for (size_t u = 0; u + 1 < n; u++) {
                if ((nb >> u) & 1) {
                    g.set_edge(u, n - 1, true);
                }
            }
            Graph c = canonical_form(g);
            seen.emplace(c.key(), c);
        }
    }
    std::vector<Graph> out;
    for (auto &kv : seen) {
        out.push_back(std::move(kv.second));
    }
    return out;
}

Graph parse_graph6(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) {
        s.remove_suffix(1);
    }
    if (s.starts_with(">>graph6<<")) {
        s.remove_prefix(10);
    }
    if (s.empty()) {
        throw ParseError("graph6: empty string");
    }
    for (char c : s) {
        if (c < 63 || c > 126) {
            throw ParseError("graph6: byte out of range");
        }
    }
    size_t n;
    size_t pos;
    if (s[0] != 126) {
        n = (size_t)(s[0] - 63);
        pos = 1;
    } else if (s.size() >= 4 && s[1] != 126) {
        n = ((size_t)(s[1] - 63) << 12) | ((size_t)(s[2] - 63) << 6) | (size_t)(s[3] - 63);
        pos = 4;
    } else {
        throw ParseError("graph6: vertex counts above 258047 unsupported");
    }
    size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    size_t need = (nbits + 5) / 6;
    if (s.size() - pos != need) {
        throw ParseError("graph6: length does not match vertex count");
    }
    Graph g(n);
    size_t k = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++, k++) {
            int byte = s[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                g.set_edge(i, j, true);
            }
        }
    }
    for (; k < need * 6; k++) {
        int byte = s[pos + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) {
            throw ParseError("graph6: nonzero padding bits");
        }
    }
    return g;
}

std::string emit_graph6(const Graph &g) {
    size_t n = g.n();
    std::string out;
    if (n <= 62) {
        out += (char)(63 + n);
    } else {
        require(n <= 258047, "emit_graph6: too many vertices");
        out += (char)126;
        out += (char)(63 + ((n >> 12) & 63));
        out += (char)(63 + ((n >> 6) & 63));
        out += (char)(63 + (n & 63));
    }
    int acc = 0;
    int used = 0;
    for (size_t j = 1; j < n; j++) {
        for (size_t i = 0; i < j; i++) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out += (char)(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0) {
        out += (char)(63 + (acc << (6 - used)));
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::pair<size_t, size_t>> edges;
    size_t declared = 0;
    size_t max_v = 0;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) {
            line.resize(h);
        }
        std::istringstream ls(line);
        std::string a;
        if (!(ls >> a)) {
            continue;
        }
        if (a == "n") {
            long long v;
            if (!(ls >> v) || v < 0) {
                throw ParseError("edge list: bad 'n' line");
            }
            declared = (size_t)v;
            continue;
        }
        long long u;
        long long v;
        try {
            u = std::stoll(a);
        } catch (const std::exception &) {
            throw ParseError("edge list: expected vertex number, got '" + a + "'");
        }
        if (!(ls >> v)) {
            throw ParseError("edge list: expected two vertices per line");
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError("edge list: trailing tokens");
        }
        if (u < 1 || v < 1 || u == v) {
            throw ParseError("edge list: vertices are 1-based and distinct");
        }
        edges.emplace_back((size_t)u - 1, (size_t)v - 1);
        max_v = std::max<size_t>(max_v, (size_t)std::max(u, v));
    }
    if (declared && max_v > declared) {
        throw ParseError("edge list: vertex exceeds declared n");
    }
    size_t n = declared ? declared : max_v;
    if (n == 0) {
        throw ParseError("edge list: no vertices");
    }
    return Graph::from_edges(n, edges);
}

}  // namespace gsv
