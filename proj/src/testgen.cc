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

#include "gsv/testgen.h"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "gsv/errors.h"

namespace gsv {

namespace {

void check_limit(size_t n, size_t limit) {
    require(n >= 1, "graph must have at least one vertex");
    if (n > limit) {
        throw BudgetExceeded("setting enumeration limited to n <= " + std::to_string(limit));
    }
}

// Fills the indicator of rspan(rows) minus the origin.
TestVector span_vector(const Gf2Matrix &rows, size_t n, const SymplecticVector &mu) {
    require(n <= 30, "test vectors need n <= 30");
    RowBasis rb(rows);
    TestVector tv;
    tv.n = n;
    tv.setting = mu;
    tv.rank = rb.rank();
    tv.bits = BitVector((size_t{1} << n) - 1);
    std::vector<uint64_t> basis;
    for (const auto &b : rb.basis()) {
        basis.push_back(b.word0());
    }
    // Gray-code walk over all 2^rank combinations.
    uint64_t w = 0;
    uint64_t total = uint64_t{1} << basis.size();
    for (uint64_t i = 1; i < total; i++) {
        w ^= basis[std::countr_zero(i)];
        tv.bits.set(w - 1, true);
    }
    return tv;
}

}  // namespace

Gf2Matrix a_mu(const Graph &g, const SymplecticVector &mu) {
    require(mu.n == g.n(), "a_mu: size mismatch");
    size_t n = g.n();
    Gf2Matrix m(n, n);
    for (size_t j = 0; j < n; j++) {
        BitVector row(n);
        if (mu.z.get(j)) {
            row.set(j, true);
        }
        if (mu.x.get(j)) {
            row ^= g.neighbors(j);
        }
        m.row(j) = std::move(row);
    }
    return m;
}

Gf2Matrix m_tilde(const StabilizerBasis &s, const SymplecticVector &mu) {
    require(s.maximal(), "m_tilde: stabilizer group must be maximal");
    require(mu.n == s.n(), "m_tilde: size mismatch");
    Gf2Matrix mx = s.mx();
    Gf2Matrix mz = s.mz();
    Gf2Matrix out(0, s.k());
    for (size_t j = 0; j < s.n(); j++) {
        if (mu.measured(j)) {
            BitVector row(s.k());
            if (mu.z.get(j)) {
                row ^= mx.row(j);
            }
            if (mu.x.get(j)) {
                row ^= mz.row(j);
            }
            out.append_row(std::move(row));
        } else {
            out.append_row(mx.row(j));
            out.append_row(mz.row(j));
        }
    }
    return out;
}

TestVector test_vector_graph(const Graph &g, const SymplecticVector &mu) {
    require(mu.complete(), "test_vector_graph: setting must be complete; use test_vector_stab");
    return span_vector(a_mu(g, mu), g.n(), mu);
}

TestVector test_vector_stab(const StabilizerBasis &s, const SymplecticVector &mu) {
    return span_vector(m_tilde(s, mu), s.n(), mu);
}

std::vector<TestVector> restricted_nontrivial_test_vectors(const Graph &g, const std::vector<std::string> &alphabets,
                                                           size_t limit) {
    check_limit(g.n(), limit);
    require(alphabets.size() == g.n(), "alphabet count must equal n");
    std::vector<TestVector> out;
    for (const auto &mu : enumerate_settings(alphabets)) {
        Gf2Matrix m = a_mu(g, mu);
        if (rank(m) < g.n()) {
            out.push_back(span_vector(m, g.n(), mu));
        }
    }
    return out;
}

std::vector<TestVector> all_nontrivial_test_vectors(const Graph &g, size_t limit) {
    return restricted_nontrivial_test_vectors(g, std::vector<std::string>(g.n(), "XYZ"), limit);
}

std::vector<TestVector> filter_admissible(const std::vector<TestVector> &nontrivial) {
    std::unordered_map<BitVector, size_t> multiplicity;
    for (const auto &tv : nontrivial) {
        multiplicity[tv.bits]++;
    }
    // Distinct spans grouped by rank, for the dominance test.
    std::vector<std::vector<const BitVector *>> by_rank;
    for (const auto &[bits, count] : multiplicity) {
        (void)count;
        size_t r = std::bit_width(bits.popcount() + 1) - 1;
        if (by_rank.size() <= r) {
            by_rank.resize(r + 1);
        }
        by_rank[r].push_back(&bits);
    }
    std::vector<TestVector> out;
    for (const auto &tv : nontrivial) {
        if (multiplicity[tv.bits] > 1) {
            continue;
        }
        bool dominated = false;
        for (size_t r = 0; r < tv.rank && r < by_rank.size() && !dominated; r++) {
            for (const BitVector *b : by_rank[r]) {
                if (b->is_subset_of(tv.bits)) {
                    dominated = true;
                    break;
                }
            }
        }
        if (!dominated) {
            out.push_back(tv);
        }
    }
    return out;
}

std::vector<TestVector> admissible_test_vectors(const Graph &g, size_t limit) {
    return filter_admissible(all_nontrivial_test_vectors(g, limit));
}

size_t kappa(const Graph &g, size_t limit) {
    check_limit(g.n(), limit);
    size_t best = g.n();
    for_each_complete_setting(g.n(), [&](const SymplecticVector &mu) {
        if (best > 0) {
            best = std::min(best, rank(a_mu(g, mu)));
        }
    });
    return best;
}

Rational lambda_p(const Graph &g, size_t limit) {
    return pow2(-(long)kappa(g, limit));
}

SymplecticVector xz_setting(const BitVector &b) {
    SymplecticVector mu(b.len());
    for (size_t j = 0; j < b.len(); j++) {
        mu.set_letter(j, b.get(j) ? 'X' : 'Z');
    }
    return mu;
}

TestVector xz_test_vector(const Graph &g, const BitVector &b) {
    require(b.len() == g.n(), "xz_test_vector: size mismatch");
    return test_vector_graph(g, xz_setting(b));
}

std::vector<TestVector> xz_admissible_test_vectors(const Graph &g, size_t limit) {
    return filter_admissible(restricted_nontrivial_test_vectors(g, std::vector<std::string>(g.n(), "XZ"), limit));
}

BitVector test_vector_product(const std::vector<const TestVector *> &tvs, size_t n) {
    BitVector acc((size_t{1} << n) - 1);
    for (size_t k = 0; k < acc.len(); k++) {
        acc.set(k, true);
    }
    for (const TestVector *tv : tvs) {
        acc &= tv->bits;
    }
    return acc;
}

}  // namespace gsv
