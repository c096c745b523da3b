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

#include "gsv/optimize.h"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "gsv/errors.h"
#include "gsv/lp.h"

namespace gsv {

namespace {

size_t common_n(const std::vector<TestVector> &tvs) {
    require(!tvs.empty(), "no test vectors given");
    size_t n = tvs[0].n;
    for (const auto &tv : tvs) {
        require(tv.n == n, "test vectors disagree on n");
    }
    return n;
}

Protocol support_protocol(const std::vector<TestVector> &tvs, const std::vector<Rational> &p, Provenance prov) {
    Protocol out;
    out.n = tvs[0].n;
    out.provenance = prov;
    for (size_t i = 0; i < tvs.size(); i++) {
        if (sgn(p[i]) > 0) {
            out.entries.push_back({tvs[i].setting, p[i]});
        }
    }
    return out;
}

}  // namespace

LpSolution max_gap_lp(const std::vector<TestVector> &tvs) {
    common_n(tvs);
    size_t m = tvs.size();
    size_t len = tvs[0].bits.len();

    // Row w of A as the set of columns containing w; keep only maximal distinct patterns.
    std::unordered_set<BitVector> unique_rows;
    std::vector<BitVector> rows;
    for (size_t k = 0; k < len; k++) {
        BitVector pat(m);
        for (size_t i = 0; i < m; i++) {
            if (tvs[i].bits.get(k)) {
                pat.set(i, true);
            }
        }
        if (pat.any() && unique_rows.insert(pat).second) {
            rows.push_back(std::move(pat));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const BitVector &a, const BitVector &b) {
        size_t pa = a.popcount();
        size_t pb = b.popcount();
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<BitVector> maximal;
    for (const auto &r : rows) {
        bool dominated = false;
        for (const auto &q : maximal) {
            if (r.is_subset_of(q)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            maximal.push_back(r);
        }
    }

    LpSolution sol;
    bool full_row = !maximal.empty() && maximal[0].popcount() == m;
    if (full_row) {
        // Some w lies in every span: no mixture can push beta below 1.
        sol.beta = 1;
        sol.valid = false;
        sol.p.assign(m, Rational(0));
        sol.p[0] = 1;
    } else {
        LinearProgram lp;
        lp.num_vars = m + 1;
        lp.objective.assign(m + 1, Rational(0));
        lp.objective[m] = 1;
        for (const auto &r : maximal) {
            LpRow row;
            for (size_t i = 0; i < m; i++) {
                if (r.get(i)) {
                    row.coeffs.emplace_back(i, Rational(1));
                }
            }
            row.coeffs.emplace_back(m, Rational(-1));
            row.sense = Sense::kLessEqual;
            row.rhs = 0;
            lp.rows.push_back(std::move(row));
        }
        LpRow norm;
        for (size_t i = 0; i < m; i++) {
            norm.coeffs.emplace_back(i, Rational(1));
        }
        norm.sense = Sense::kEqual;
        norm.rhs = 1;
        lp.rows.push_back(std::move(norm));
        LpResult res = solve_lp(lp);
        require(res.status == LpStatus::kOptimal, "max_gap_lp: LP not optimal");
        sol.beta = res.value;
        sol.p.assign(res.x.begin(), res.x.begin() + (long)m);
        sol.valid = sol.beta < 1;
        sol.pivots = res.pivots;
    }
    for (size_t k = 0; k < len; k++) {
        Rational v = 0;
        for (size_t i = 0; i < m; i++) {
            if (tvs[i].bits.get(k)) {
                v += sol.p[i];
            }
        }
        if (v == sol.beta && sgn(v) > 0) {
            sol.active.push_back(k + 1);
        }
    }
    sol.protocol = support_protocol(tvs, sol.p, Provenance::kLp);
    return sol;
}

LpSolution max_gap_lp_xz(const Graph &g, size_t limit) {
    return max_gap_lp(xz_admissible_test_vectors(g, limit));
}

LpSolution optimal_protocol(const Graph &g, size_t limit) {
    return max_gap_lp(admissible_test_vectors(g, limit));
}

namespace {

struct CoverSearch {
    const std::vector<TestVector> &tvs;
    std::vector<long> last_zero;
    std::vector<size_t> chosen;

    bool dfs(const BitVector &acc, size_t start, size_t depth_left) {
        if (acc.none()) {
            return true;
        }
        if (depth_left == 0) {
            return false;
        }
        // Every remaining w must still be coverable by a later column.
        for (size_t wi = 0; wi < acc.words().size(); wi++) {
            for (uint64_t bits = acc.words()[wi]; bits; bits &= bits - 1) {
                size_t k = wi * 64 + std::countr_zero(bits);
                if (last_zero[k] < (long)start) {
                    return false;
                }
            }
        }
        for (size_t i = start; i < tvs.size(); i++) {
            BitVector next = acc & tvs[i].bits;
            if (next == acc) {
                continue;
            }
            chosen.push_back(i);
            if (dfs(next, i + 1, depth_left - 1)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<MinSettingsResult> min_settings_bounded(const std::vector<TestVector> &tvs, size_t lower, size_t upper) {
    common_n(tvs);
    size_t len = tvs[0].bits.len();
    CoverSearch cs{tvs, std::vector<long>(len, -1), {}};
    for (size_t i = 0; i < tvs.size(); i++) {
        for (size_t k = 0; k < len; k++) {
            if (!tvs[i].bits.get(k)) {
                cs.last_zero[k] = (long)i;
            }
        }
    }
    BitVector all(len);
    for (size_t k = 0; k < len; k++) {
        all.set(k, true);
    }
    upper = std::min(upper, tvs.size());
    for (size_t d = std::max<size_t>(lower, 1); d <= upper; d++) {
        cs.chosen.clear();
        if (cs.dfs(all, 0, d)) {
            std::vector<SymplecticVector> settings;
            for (size_t i : cs.chosen) {
                settings.push_back(tvs[i].setting);
            }
            MinSettingsResult r;
            r.m = settings.size();
            r.protocol = Protocol::uniform(settings, Provenance::kMinSettings);
            return r;
        }
    }
    return std::nullopt;
}

MinSettingsResult min_settings(const std::vector<TestVector> &tvs) {
    auto r = min_settings_bounded(tvs, 1, tvs.size());
    if (!r) {
        throw InvalidProtocol("min_settings: no subset of the given test vectors verifies the state");
    }
    return *r;
}

namespace {

// Keeps one copy of each distinct vector and drops strict supersets; the cover number is unchanged.
std::vector<TestVector> reduce_for_cover(std::vector<TestVector> tvs) {
    std::unordered_set<BitVector> seen;
    std::vector<TestVector> distinct;
    for (auto &tv : tvs) {
        if (seen.insert(tv.bits).second) {
            distinct.push_back(std::move(tv));
        }
    }
    std::vector<TestVector> out;
    for (size_t i = 0; i < distinct.size(); i++) {
        bool dominated = false;
        for (size_t j = 0; j < distinct.size() && !dominated; j++) {
            dominated = j != i && distinct[j].rank < distinct[i].rank && distinct[j].bits.is_subset_of(distinct[i].bits);
        }
        if (!dominated) {
            out.push_back(std::move(distinct[i]));
        }
    }
    return out;
}

}  // namespace

TwoBasisResult min_settings_two_basis(const Graph &g, size_t max_n) {
    size_t n = g.n();
    require(n >= 1, "min_settings_two_basis: empty graph");
    if (n > max_n) {
        throw BudgetExceeded("min_settings_two_basis limited to n <= " + std::to_string(max_n));
    }
    size_t lower = min_settings(admissible_test_vectors(g, max_n)).m;
    static const char *pairs[3] = {"XY", "XZ", "YZ"};
    TwoBasisResult best;
    best.m = n + 2;
    std::vector<int> digit(n, 0);
    while (true) {
        std::vector<std::string> alpha(n);
        for (size_t j = 0; j < n; j++) {
            alpha[j] = pairs[digit[j]];
        }
        auto tvs = reduce_for_cover(restricted_nontrivial_test_vectors(g, alpha, max_n));
        if (!tvs.empty()) {
            if (auto r = min_settings_bounded(tvs, lower, best.m - 1)) {
                best.m = r->m;
                best.protocol = r->protocol;
                best.alphabets = alpha;
                if (best.m == lower) {
                    return best;
                }
            }
        }
        size_t j = n;
        while (j > 0 && ++digit[j - 1] == 3) {
            digit[j - 1] = 0;
            j--;
        }
        if (j == 0) {
            break;
        }
    }
    require(best.m <= n + 1, "min_settings_two_basis: no cover found");
    return best;
}

Protocol coloring_protocol(const Graph &g, const Coloring &c) {
    require(is_proper_coloring(g, c), "coloring_protocol: coloring is not proper");
    std::vector<SymplecticVector> settings;
    for (size_t k = 0; k < c.k; k++) {
        BitVector b(g.n());
        for (size_t v = 0; v < g.n(); v++) {
            if (c.colors[v] == k) {
                b.set(v, true);
            }
        }
        require(b.any(), "coloring_protocol: empty color class");
        settings.push_back(xz_setting(b));
    }
    return Protocol::uniform(settings, Provenance::kColoring);
}

Protocol odd_ring_xz_protocol(size_t n) {
    require(n >= 5 && n % 2 == 1, "odd_ring_xz_protocol: n must be odd and at least 5");
    std::vector<SymplecticVector> settings;
    for (size_t j = 0; j < n; j++) {
        BitVector b(n);
        for (size_t t = 0; t + 3 <= n; t += 2) {
            b.set((j + t) % n, true);
        }
        settings.push_back(xz_setting(b));
    }
    BitVector all(n);
    for (size_t v = 0; v < n; v++) {
        all.set(v, true);
    }
    settings.push_back(xz_setting(all));
    return Protocol::uniform(settings, Provenance::kClosedForm);
}

Protocol star_optimal_protocol(size_t n) {
    require(n >= 3, "star_optimal_protocol: n must be at least 3");
    require(n <= 24, "star_optimal_protocol: n too large");
    Protocol p;
    p.n = n;
    p.provenance = Provenance::kClosedForm;
    SymplecticVector p0(n);
    p0.set_letter(0, 'Z');
    for (size_t v = 1; v < n; v++) {
        p0.set_letter(v, 'X');
    }
    p.entries.push_back({p0, Rational(1, 3)});
    Rational w = Rational(1, 3) / pow2((long)n - 2);
    // Center X or Y, leaves Y or Z, an even number of Y overall.
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
        if (std::popcount(mask) % 2 != 0) {
            continue;
        }
        SymplecticVector s(n);
        s.set_letter(0, (mask & 1) ? 'Y' : 'X');
        for (size_t v = 1; v < n; v++) {
            s.set_letter(v, ((mask >> v) & 1) ? 'Y' : 'Z');
        }
        p.entries.push_back({s, w});
    }
    std::sort(p.entries.begin() + 1, p.entries.end(),
              [](const ProtocolEntry &a, const ProtocolEntry &b) { return a.setting < b.setting; });
    p.validate();
    return p;
}

namespace {

void check_parts(const std::vector<Component> &parts, const std::vector<Protocol> &protos, size_t n) {
    require(parts.size() == protos.size() && !parts.empty(), "compose: one protocol per component");
    std::vector<bool> covered(n, false);
    for (size_t j = 0; j < parts.size(); j++) {
        require(protos[j].n == parts[j].graph.n(), "compose: protocol size does not match component");
        require(parts[j].vertices.size() == parts[j].graph.n(), "compose: vertex map size mismatch");
        protos[j].validate();
        for (size_t v : parts[j].vertices) {
            require(v < n && !covered[v], "compose: vertex maps must partition the qubits");
            covered[v] = true;
        }
    }
    require(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }),
            "compose: vertex maps must cover every qubit");
}

}  // namespace

Protocol compose_product_protocol(const std::vector<Component> &parts, const std::vector<Protocol> &protos, size_t n) {
    check_parts(parts, protos, n);
    size_t J = parts.size();
    std::vector<size_t> idx(J, 0);
    std::vector<Rational> cum(J);
    for (size_t j = 0; j < J; j++) {
        cum[j] = protos[j].entries[0].p;
    }
    Protocol out;
    out.n = n;
    out.provenance = Provenance::kComposed;
    Rational cur = 0;
    while (cur < 1) {
        Rational next = cum[0];
        for (size_t j = 1; j < J; j++) {
            if (cum[j] < next) {
                next = cum[j];
            }
        }
        SymplecticVector s(n);
        for (size_t j = 0; j < J; j++) {
            const auto &src = protos[j].entries[idx[j]].setting;
            for (size_t i = 0; i < parts[j].vertices.size(); i++) {
                s.set_letter(parts[j].vertices[i], src.letter(i));
            }
        }
        out.entries.push_back({std::move(s), next - cur});
        cur = next;
        for (size_t j = 0; j < J; j++) {
            if (cum[j] == next && idx[j] + 1 < protos[j].entries.size()) {
                idx[j]++;
                cum[j] += protos[j].entries[idx[j]].p;
            }
        }
    }
    out.validate();
    return out;
}

Protocol compose_product_protocol(const std::vector<std::pair<Graph, Protocol>> &parts) {
    std::vector<Component> comps;
    std::vector<Protocol> protos;
    size_t off = 0;
    for (const auto &[g, p] : parts) {
        Component c{g, {}};
        for (size_t i = 0; i < g.n(); i++) {
            c.vertices.push_back(off + i);
        }
        off += g.n();
        comps.push_back(std::move(c));
        protos.push_back(p);
    }
    return compose_product_protocol(comps, protos, off);
}

Protocol compose_uniform_protocol(const std::vector<Component> &parts, const std::vector<Protocol> &protos, size_t n) {
    check_parts(parts, protos, n);
    size_t m = 0;
    for (const auto &p : protos) {
        for (const auto &e : p.entries) {
            require(e.p == Rational(1, (unsigned long)p.size()),
                    "compose_uniform_protocol: component protocol is not uniform");
        }
        m = std::max(m, p.size());
    }
    std::vector<SymplecticVector> settings;
    for (size_t k = 0; k < m; k++) {
        SymplecticVector s(n);
        for (size_t j = 0; j < parts.size(); j++) {
            if (k < protos[j].size()) {
                const auto &src = protos[j].entries[k].setting;
                for (size_t i = 0; i < parts[j].vertices.size(); i++) {
                    s.set_letter(parts[j].vertices[i], src.letter(i));
                }
            }
        }
        settings.push_back(std::move(s));
    }
    return Protocol::uniform(settings, Provenance::kComposed);
}

Rational chi_star(const Graph &g) {
    require(g.n() >= 1, "chi_star: empty graph");
    auto sets = maximal_independent_sets(g);
    LinearProgram lp;
    lp.num_vars = sets.size();
    lp.objective.assign(sets.size(), Rational(1));
    for (size_t v = 0; v < g.n(); v++) {
        LpRow row;
        for (size_t i = 0; i < sets.size(); i++) {
            if ((sets[i] >> v) & 1) {
                row.coeffs.emplace_back(i, Rational(1));
            }
        }
        row.sense = Sense::kGreaterEqual;
        row.rhs = 1;
        lp.rows.push_back(std::move(row));
    }
    LpResult res = solve_lp(lp);
    require(res.status == LpStatus::kOptimal, "chi_star: LP not optimal");
    return res.value;
}

}  // namespace gsv
