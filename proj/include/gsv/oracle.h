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

#ifndef GSV_ORACLE_H
#define GSV_ORACLE_H

#include <cstdint>
#include <vector>

#include "gsv/graph.h"
#include "gsv/rational.h"
#include "gsv/symplectic.h"

// Brute-force state-vector arithmetic, exact. Only meant for tiny n.
namespace gsv::oracle {

struct Gaussian {
    int64_t re = 0;
    int64_t im = 0;

    Gaussian operator+(Gaussian o) const {
        return {re + o.re, im + o.im};
    }
    Gaussian operator-(Gaussian o) const {
        return {re - o.re, im - o.im};
    }
    Gaussian operator*(Gaussian o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Gaussian &operator+=(Gaussian o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian conj() const {
        return {re, -im};
    }
    bool operator==(const Gaussian &o) const = default;
};

/// amp[b] / sqrt(2)^sqrt2_den; basis index b has qubit j at bit j.
struct DenseState {
    size_t n = 0;
    std::vector<Gaussian> amp;
    size_t sqrt2_den = 0;
};

/// entries / 2^den_log2, row-major 2^n x 2^n.
struct DenseMatrix {
    size_t n = 0;
    std::vector<Gaussian> a;
    size_t den_log2 = 0;

    size_t dim() const {
        return size_t{1} << n;
    }
    Gaussian at(size_t r, size_t c) const {
        return a[r * dim() + c];
    }
    Gaussian &at(size_t r, size_t c) {
        return a[r * dim() + c];
    }
};

inline constexpr size_t kMaxStateQubits = 5;
inline constexpr size_t kMaxProjectorQubits = 4;

DenseState dense_graph_state(const Graph &g);
Rational norm_squared(const DenseState &s);
/// Applies g(mu) = i^{mu^x . mu^z} X^{mu^x} Z^{mu^z}.
DenseState apply_pauli(const DenseState &s, const SymplecticVector &mu);
bool same_state(const DenseState &a, const DenseState &b);
/// S_j |G> = |G> for every generator.
bool stabilizer_eigenrelations_hold(const Graph &g);

DenseMatrix dense_identity(size_t n);
DenseMatrix dense_outcome_projector(const SymplecticVector &mu, const BitVector &v);
DenseMatrix dense_canonical_projector(const Graph &g, const SymplecticVector &mu);
DenseMatrix dense_state_projector(const DenseState &s);

DenseMatrix multiply(const DenseMatrix &x, const DenseMatrix &y);
/// Compares values, not representations.
bool equal(const DenseMatrix &x, const DenseMatrix &y);
bool is_idempotent(const DenseMatrix &p);
bool is_hermitian(const DenseMatrix &p);
bool commute(const DenseMatrix &x, const DenseMatrix &y);
Rational trace(const DenseMatrix &p);
Rational expectation(const DenseState &s, const DenseMatrix &p);

/// <G_w|P|G_w> for w = 0 .. 2^n - 1 in index order.
std::vector<Rational> graph_basis_diagonal(const Graph &g, const DenseMatrix &p);

}  // namespace gsv::oracle

#endif
