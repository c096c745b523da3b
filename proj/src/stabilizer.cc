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

#include "gsv/stabilizer.h"

#include "gsv/errors.h"

namespace gsv {

StabilizerBasis::StabilizerBasis(size_t n, Gf2Matrix m, BitVector signs)
    : n_(n), m_(std::move(m)), signs_(std::move(signs)) {
    require(m_.rows() == 2 * n_, "StabilizerBasis: matrix must have 2n rows");
    require(m_.cols() <= n_, "StabilizerBasis: more than n generators");
    require(signs_.len() == m_.cols(), "StabilizerBasis: one sign per generator");
    require(is_isotropic(m_), "StabilizerBasis: generators do not commute");
    require(rank(m_.transpose()) == m_.cols(), "StabilizerBasis: generators are dependent");
}

StabilizerBasis StabilizerBasis::from_generators(const std::vector<SymplecticVector> &gens, BitVector signs) {
    require(!gens.empty(), "from_generators: need at least one generator");
    size_t n = gens[0].n;
    Gf2Matrix m(2 * n, gens.size());
    for (size_t c = 0; c < gens.size(); c++) {
        require(gens[c].n == n, "from_generators: size mismatch");
        for (size_t j = 0; j < n; j++) {
            m.set(j, c, gens[c].x.get(j));
            m.set(n + j, c, gens[c].z.get(j));
        }
    }
    return StabilizerBasis(n, std::move(m), std::move(signs));
}

Gf2Matrix StabilizerBasis::mx() const {
    Gf2Matrix r(0, k());
    for (size_t j = 0; j < n_; j++) {
        r.append_row(m_.row(j));
    }
    return r;
}

Gf2Matrix StabilizerBasis::mz() const {
    Gf2Matrix r(0, k());
    for (size_t j = 0; j < n_; j++) {
        r.append_row(m_.row(n_ + j));
    }
    return r;
}

SymplecticVector StabilizerBasis::generator(size_t c) const {
    require(c < k(), "generator index out of range");
    SymplecticVector g(n_);
    for (size_t j = 0; j < n_; j++) {
        g.x.set(j, m_.get(j, c));
        g.z.set(j, m_.get(n_ + j, c));
    }
    return g;
}

Gf2Matrix symplectic_gram(const Gf2Matrix &m, const Gf2Matrix &mp) {
    require(m.rows() == mp.rows() && m.rows() % 2 == 0, "symplectic_gram: shape mismatch");
    size_t n = m.rows() / 2;
    // J M' swaps the halves of M'.
    Gf2Matrix jm(0, mp.cols());
    for (size_t j = 0; j < n; j++) {
        jm.append_row(mp.row(n + j));
    }
    for (size_t j = 0; j < n; j++) {
        jm.append_row(mp.row(j));
    }
    return matmul(m.transpose(), jm);
}

bool is_isotropic(const Gf2Matrix &m) {
    return symplectic_gram(m, m).is_zero();
}

StabilizerBasis graph_stabilizer(const Graph &g) {
    Gf2Matrix m = vstack(Gf2Matrix::identity(g.n()), g.adjacency());
    return StabilizerBasis(g.n(), std::move(m), BitVector(g.n()));
}

size_t intersection_log2(const StabilizerBasis &s, const StabilizerBasis &t) {
    require(s.maximal() && t.maximal(), "intersection_order: groups must be maximal");
    require(s.n() == t.n(), "intersection_order: size mismatch");
    return s.n() - rank(symplectic_gram(s.matrix(), t.matrix()));
}

uint64_t intersection_order(const StabilizerBasis &s, const StabilizerBasis &t) {
    require(s.n() <= 63, "intersection_order: n > 63");
    return uint64_t{1} << intersection_log2(s, t);
}

Rational max_fidelity(const StabilizerBasis &s, const StabilizerBasis &t) {
    require(s.maximal() && t.maximal(), "max_fidelity: groups must be maximal");
    require(s.n() == t.n(), "max_fidelity: size mismatch");
    return pow2(-(long)rank(symplectic_gram(s.matrix(), t.matrix())));
}

StabilizerBasis measurement_group(const SymplecticVector &mu, const BitVector &v) {
    require(v.len() == mu.n, "measurement_group: sign vector size mismatch");
    size_t n = mu.n;
    std::vector<size_t> qubits;
    for (size_t j = 0; j < n; j++) {
        if (mu.measured(j)) {
            qubits.push_back(j);
        } else {
            require(!v.get(j), "measurement_group: sign on an unmeasured qubit");
        }
    }
    Gf2Matrix m(2 * n, qubits.size());
    BitVector signs(qubits.size());
    for (size_t c = 0; c < qubits.size(); c++) {
        size_t j = qubits[c];
        m.set(j, c, mu.x.get(j));
        m.set(n + j, c, mu.z.get(j));
        signs.set(c, v.get(j));
    }
    return StabilizerBasis(n, std::move(m), std::move(signs));
}

}  // namespace gsv
