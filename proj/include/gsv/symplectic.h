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

#ifndef GSV_SYMPLECTIC_H
#define GSV_SYMPLECTIC_H

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gsv/gf2.h"

namespace gsv {

/// Pauli label mu = (x; z). Letters: I=(0;0), X=(1;0), Y=(1;1), Z=(0;1).
struct SymplecticVector {
    size_t n = 0;
    BitVector x;
    BitVector z;

    SymplecticVector() = default;
    explicit SymplecticVector(size_t n) : n(n), x(n), z(n) {
    }
    SymplecticVector(BitVector x, BitVector z);

    char letter(size_t j) const;
    void set_letter(size_t j, char c);
    bool complete() const;
    /// Qubit j carries a nontrivial measurement.
    bool measured(size_t j) const {
        return x.get(j) || z.get(j);
    }

    std::string str() const;
    bool operator==(const SymplecticVector &other) const = default;
    bool operator<(const SymplecticVector &other) const;
};

/// [mu, nu] = mu^z . nu^x + mu^x . nu^z.
bool symplectic_form(const SymplecticVector &mu, const SymplecticVector &nu);

SymplecticVector setting_from_string(std::string_view s);
std::string setting_to_string(const SymplecticVector &mu);

size_t weight(const SymplecticVector &mu);

/// All 3^n complete settings, lexicographic in X<Y<Z with qubit 1 leftmost.
std::vector<SymplecticVector> enumerate_complete_settings(size_t n);

/// Settings over a per-qubit alphabet, lexicographic in the order given.
std::vector<SymplecticVector> enumerate_settings(const std::vector<std::string> &alphabets);

/// Streams settings to `fn` without materializing them.
void for_each_complete_setting(size_t n, const std::function<void(const SymplecticVector &)> &fn);

}  // namespace gsv

template <>
struct std::hash<gsv::SymplecticVector> {
    size_t operator()(const gsv::SymplecticVector &v) const {
        return v.x.hash() * 31 + v.z.hash();
    }
};

#endif
