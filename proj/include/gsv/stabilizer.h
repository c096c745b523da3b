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

#ifndef GSV_STABILIZER_H
#define GSV_STABILIZER_H

#include <vector>

#include "gsv/gf2.h"
#include "gsv/graph.h"
#include "gsv/rational.h"
#include "gsv/symplectic.h"

namespace gsv {

/// Stabilizer group given by a 2n x k basis matrix; column c is generator c as (x; z).
class StabilizerBasis {
   public:
    /// Throws ContractViolation unless the columns are isotropic and independent.
    StabilizerBasis(size_t n, Gf2Matrix m, BitVector signs);
    static StabilizerBasis from_generators(const std::vector<SymplecticVector> &gens, BitVector signs);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return m_.cols();
    }
    bool maximal() const {
        return k() == n_;
    }
    const Gf2Matrix &matrix() const {
        return m_;
    }
    const BitVector &signs() const {
        return signs_;
    }
    /// Upper n rows (x part), n x k.
    Gf2Matrix mx() const;
    /// Lower n rows (z part), n x k.
    Gf2Matrix mz() const;
    SymplecticVector generator(size_t c) const;

   private:
    size_t n_;
    Gf2Matrix m_;
    BitVector signs_;
};

/// M^T J M' where J swaps the x and z halves.
Gf2Matrix symplectic_gram(const Gf2Matrix &m, const Gf2Matrix &mp);
bool is_isotropic(const Gf2Matrix &m);

StabilizerBasis graph_stabilizer(const Graph &g);
/// log2 |S-bar intersect S'| = n - rank(M^T J M').
size_t intersection_log2(const StabilizerBasis &s, const StabilizerBasis &t);
/// |S-bar intersect S'|; n <= 63.
uint64_t intersection_order(const StabilizerBasis &s, const StabilizerBasis &t);
Rational max_fidelity(const StabilizerBasis &s, const StabilizerBasis &t);
/// Single-qubit generators of the measured qubits; sign bits taken from v.
StabilizerBasis measurement_group(const SymplecticVector &mu, const BitVector &v);

}  // namespace gsv

#endif
