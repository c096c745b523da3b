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

#include "gsv/oracle.h"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "gsv/errors.h"

namespace gsv::oracle {

namespace {

void guard(size_t n, size_t cap) {
    if (n > cap) {
        throw BudgetExceeded("dense oracle limited to n <= " + std::to_string(cap));
    }
}

Gaussian times_i_pow(Gaussian g, int k) {
    for (int t = 0; t < (k & 3); t++) {
        g = Gaussian{-g.im, g.re};
    }
    return g;
}

// Numerator of (1 + (-1)^v sigma) over denominator 2, or 2*I for an unmeasured qubit.
void local_factor(char letter, bool v, Gaussian out[2][2]) {
    int64_t s = v ? -1 : 1;
    switch (letter) {
        case 'I':
            out[0][0] = {2, 0};
            out[0][1] = {0, 0};
            out[1][0] = {0, 0};
            out[1][1] = {2, 0};
            break;
        case 'X':
            out[0][0] = {1, 0};
            out[0][1] = {s, 0};
            out[1][0] = {s, 0};
            out[1][1] = {1, 0};
            break;
        case 'Z':
            out[0][0] = {1 + s, 0};
            out[0][1] = {0, 0};
            out[1][0] = {0, 0};
            out[1][1] = {1 - s, 0};
            break;
        case 'Y':
            out[0][0] = {1, 0};
            out[0][1] = {0, -s};
            out[1][0] = {0, s};
            out[1][1] = {1, 0};
            break;
        default:
            throw ContractViolation("bad Pauli letter");
    }
}

// Scales both to a common denominator and returns the shift applied to each.
void align(const DenseMatrix &x, const DenseMatrix &y, int &sx, int &sy) {
    size_t d = std::max(x.den_log2, y.den_log2);
    sx = (int)(d - x.den_log2);
    sy = (int)(d - y.den_log2);
}

Rational gaussian_real(Gaussian g, size_t den_log2) {
    require(g.im == 0, "expected a real value");
    Rational q(g.re);
    return q / pow2((long)den_log2);
}

}  // namespace

DenseState dense_graph_state(const Graph &g) {
    size_t n = g.n();
    guard(n, kMaxStateQubits);
    DenseState s;
    s.n = n;
    s.sqrt2_den = n;
    s.amp.resize(size_t{1} << n);
    auto edges = g.edges();
    for (size_t b = 0; b < s.amp.size(); b++) {
        int parity = 0;
        for (auto [u, v] : edges) {
            parity ^= (int)(((b >> u) & 1) & ((b >> v) & 1));
        }
        s.amp[b] = {parity ? -1 : 1, 0};
    }
    return s;
}

Rational norm_squared(const DenseState &s) {
    int64_t acc = 0;
    for (const auto &a : s.amp) {
        acc += a.re * a.re + a.im * a.im;
    }
    return Rational(acc) / pow2((long)s.sqrt2_den);
}

DenseState apply_pauli(const DenseState &s, const SymplecticVector &mu) {
    require(mu.n == s.n, "apply_pauli: size mismatch");
    uint64_t x = mu.x.word0();
    uint64_t z = mu.z.word0();
    int phase = std::popcount(x & z);
    DenseState out = s;
    for (size_t b = 0; b < s.amp.size(); b++) {
        Gaussian a = s.amp[b];
        if (std::popcount(z & b) & 1) {
            a = Gaussian{-a.re, -a.im};
        }
        out.amp[b ^ x] = times_i_pow(a, phase);
    }
    return out;
}

bool same_state(const DenseState &a, const DenseState &b) {
    return a.n == b.n && a.sqrt2_den == b.sqrt2_den && a.amp == b.amp;
}

bool stabilizer_eigenrelations_hold(const Graph &g) {
    DenseState s = dense_graph_state(g);
    for (size_t j = 0; j < g.n(); j++) {
        SymplecticVector gen(g.n());
        gen.x.set(j, true);
        gen.z = g.neighbors(j);
        if (!same_state(apply_pauli(s, gen), s)) {
            return false;
        }
    }
    return true;
}

DenseMatrix dense_identity(size_t n) {
    guard(n, kMaxProjectorQubits);
    DenseMatrix m;
    m.n = n;
    m.a.assign(m.dim() * m.dim(), Gaussian{});
    for (size_t r = 0; r < m.dim(); r++) {
        m.at(r, r) = {1, 0};
    }
    return m;
}

DenseMatrix dense_outcome_projector(const SymplecticVector &mu, const BitVector &v) {
    size_t n = mu.n;
    guard(n, kMaxProjectorQubits);
    require(v.len() == n, "dense_outcome_projector: size mismatch");
    std::vector<std::array<std::array<Gaussian, 2>, 2>> f(n);
    for (size_t j = 0; j < n; j++) {
        Gaussian tmp[2][2];
        char c = mu.letter(j);
        require(c != 'I' || !v.get(j), "dense_outcome_projector: outcome on an unmeasured qubit");
        local_factor(c, v.get(j), tmp);
        for (int r = 0; r < 2; r++) {
            for (int col = 0; col < 2; col++) {
                f[j][r][col] = tmp[r][col];
            }
        }
    }
    DenseMatrix m;
    m.n = n;
    m.den_log2 = n;
    m.a.assign(m.dim() * m.dim(), Gaussian{});
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            Gaussian acc{1, 0};
            for (size_t j = 0; j < n && (acc.re || acc.im); j++) {
                acc = acc * f[j][(r >> j) & 1][(c >> j) & 1];
            }
            m.at(r, c) = acc;
        }
    }
    return m;
}

Rational expectation(const DenseState &s, const DenseMatrix &p) {
    require(s.n == p.n, "expectation: size mismatch");
    Gaussian acc{};
    for (size_t r = 0; r < p.dim(); r++) {
        for (size_t c = 0; c < p.dim(); c++) {
            acc += s.amp[r].conj() * p.at(r, c) * s.amp[c];
        }
    }
    return gaussian_real(acc, p.den_log2 + s.sqrt2_den);
}

DenseMatrix dense_canonical_projector(const Graph &g, const SymplecticVector &mu) {
    size_t n = g.n();
    guard(n, kMaxProjectorQubits);
    require(mu.n == n, "dense_canonical_projector: size mismatch");
    DenseState s = dense_graph_state(g);
    std::vector<size_t> measured;
    for (size_t j = 0; j < n; j++) {
        if (mu.measured(j)) {
            measured.push_back(j);
        }
    }
    DenseMatrix sum;
    sum.n = n;
    sum.den_log2 = n;
    sum.a.assign((size_t{1} << n) * (size_t{1} << n), Gaussian{});
    for (uint64_t o = 0; o < (uint64_t{1} << measured.size()); o++) {
        BitVector v(n);
        for (size_t t = 0; t < measured.size(); t++) {
            v.set(measured[t], (o >> t) & 1);
        }
        DenseMatrix pi = dense_outcome_projector(mu, v);
        if (sgn(expectation(s, pi)) > 0) {
            for (size_t k = 0; k < sum.a.size(); k++) {
                sum.a[k] += pi.a[k];
            }
        }
    }
    return sum;
}

DenseMatrix dense_state_projector(const DenseState &s) {
    guard(s.n, kMaxProjectorQubits);
    DenseMatrix m;
    m.n = s.n;
    m.den_log2 = s.sqrt2_den;
    m.a.assign(m.dim() * m.dim(), Gaussian{});
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            m.at(r, c) = s.amp[r] * s.amp[c].conj();
        }
    }
    return m;
}

DenseMatrix multiply(const DenseMatrix &x, const DenseMatrix &y) {
    require(x.n == y.n, "multiply: size mismatch");
    DenseMatrix m;
    m.n = x.n;
    m.den_log2 = x.den_log2 + y.den_log2;
    m.a.assign(x.a.size(), Gaussian{});
    size_t d = x.dim();
    for (size_t r = 0; r < d; r++) {
        for (size_t k = 0; k < d; k++) {
            Gaussian xv = x.at(r, k);
            if (!xv.re && !xv.im) {
                continue;
            }
            for (size_t c = 0; c < d; c++) {
                m.at(r, c) += xv * y.at(k, c);
            }
        }
    }
    return m;
}

bool equal(const DenseMatrix &x, const DenseMatrix &y) {
    if (x.n != y.n) {
        return false;
    }
    int sx;
    int sy;
    align(x, y, sx, sy);
    for (size_t k = 0; k < x.a.size(); k++) {
        if (x.a[k].re * (int64_t{1} << sx) != y.a[k].re * (int64_t{1} << sy) ||
            x.a[k].im * (int64_t{1} << sx) != y.a[k].im * (int64_t{1} << sy)) {
            return false;
        }
    }
    return true;
}

bool is_idempotent(const DenseMatrix &p) {
    return equal(multiply(p, p), p);
}

bool is_hermitian(const DenseMatrix &p) {
    for (size_t r = 0; r < p.dim(); r++) {
        for (size_t c = 0; c < p.dim(); c++) {
            if (!(p.at(r, c) == p.at(c, r).conj())) {
                return false;
            }
        }
    }
    return true;
}

bool commute(const DenseMatrix &x, const DenseMatrix &y) {
    return equal(multiply(x, y), multiply(y, x));
}

Rational trace(const DenseMatrix &p) {
    Gaussian acc{};
    for (size_t r = 0; r < p.dim(); r++) {
        acc += p.at(r, r);
    }
    return gaussian_real(acc, p.den_log2);
}

std::vector<Rational> graph_basis_diagonal(const Graph &g, const DenseMatrix &p) {
    guard(g.n(), kMaxProjectorQubits);
    require(p.n == g.n(), "graph_basis_diagonal: size mismatch");
    require(is_hermitian(p), "graph_basis_diagonal: matrix is not Hermitian");
    DenseState s = dense_graph_state(g);
    std::vector<Rational> out;
    for (uint64_t w = 0; w < (uint64_t{1} << g.n()); w++) {
        // |G_w> = Z^w |G>.
        SymplecticVector zw(g.n());
        zw.z = BitVector::from_word(g.n(), w);
        out.push_back(expectation(apply_pauli(s, zw), p));
    }
    return out;
}

}  // namespace gsv::oracle
