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

#include "gsv/symplectic.h"

#include "gsv/errors.h"

namespace gsv {

SymplecticVector::SymplecticVector(BitVector x_, BitVector z_) : n(x_.len()), x(std::move(x_)), z(std::move(z_)) {
    require(x.len() == z.len(), "SymplecticVector: x/z length mismatch");
}

char SymplecticVector::letter(size_t j) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(x.get(j) ? 1 : 0) | (z.get(j) ? 2 : 0)];
}

void SymplecticVector::set_letter(size_t j, char c) {
    switch (c) {
        case 'I':
            x.set(j, false);
            z.set(j, false);
            break;
        case 'X':
            x.set(j, true);
            z.set(j, false);
            break;
        case 'Y':
            x.set(j, true);
            z.set(j, true);
            break;
        case 'Z':
            x.set(j, false);
            z.set(j, true);
            break;
        default:
            throw ParseError(std::string("unknown Pauli letter '") + c + "'");
    }
}

bool SymplecticVector::complete() const {
    return weight(*this) == n;
}

std::string SymplecticVector::str() const {
    std::string s(n, 'I');
    for (size_t j = 0; j < n; j++) {
        s[j] = letter(j);
    }
    return s;
}

bool SymplecticVector::operator<(const SymplecticVector &other) const {
    // Matches the string order of the enumeration (X<Y<Z, I first).
    static constexpr int rank_of[4] = {0, 1, 3, 2};
    if (n != other.n) {
        return n < other.n;
    }
    for (size_t j = 0; j < n; j++) {
        int a = rank_of[(x.get(j) ? 1 : 0) | (z.get(j) ? 2 : 0)];
        int b = rank_of[(other.x.get(j) ? 1 : 0) | (other.z.get(j) ? 2 : 0)];
        if (a != b) {
            return a < b;
        }
    }
    return false;
}

bool symplectic_form(const SymplecticVector &mu, const SymplecticVector &nu) {
    require(mu.n == nu.n, "symplectic_form: size mismatch");
    return mu.z.dot(nu.x) ^ mu.x.dot(nu.z);
}

SymplecticVector setting_from_string(std::string_view s) {
    SymplecticVector mu(s.size());
    for (size_t j = 0; j < s.size(); j++) {
        mu.set_letter(j, s[j]);
    }
    return mu;
}

std::string setting_to_string(const SymplecticVector &mu) {
    return mu.str();
}

size_t weight(const SymplecticVector &mu) {
    return (mu.x | mu.z).popcount();
}

std::vector<SymplecticVector> enumerate_settings(const std::vector<std::string> &alphabets) {
    size_t n = alphabets.size();
    std::vector<SymplecticVector> out;
    std::vector<size_t> digit(n, 0);
    SymplecticVector cur(n);
    for (size_t j = 0; j < n; j++) {
        require(!alphabets[j].empty(), "enumerate_settings: empty alphabet");
        cur.set_letter(j, alphabets[j][0]);
    }
    while (true) {
        out.push_back(cur);
        bool carry = true;
        for (size_t j = n; j > 0 && carry; j--) {
            size_t q = j - 1;
            if (++digit[q] < alphabets[q].size()) {
                carry = false;
            } else {
                digit[q] = 0;
            }
            cur.set_letter(q, alphabets[q][digit[q]]);
        }
        if (carry) {
            return out;
        }
    }
}

std::vector<SymplecticVector> enumerate_complete_settings(size_t n) {
    require(n >= 1, "enumerate_complete_settings: n must be positive");
    return enumerate_settings(std::vector<std::string>(n, "XYZ"));
}

void for_each_complete_setting(size_t n, const std::function<void(const SymplecticVector &)> &fn) {
    require(n >= 1, "for_each_complete_setting: n must be positive");
    static constexpr char letters[3] = {'X', 'Y', 'Z'};
    std::vector<int> digit(n, 0);
    SymplecticVector cur(n);
    for (size_t j = 0; j < n; j++) {
        cur.set_letter(j, 'X');
    }
    while (true) {
        fn(cur);
        bool carry = true;
        for (size_t j = n; j > 0 && carry; j--) {
            size_t q = j - 1;
            if (++digit[q] < 3) {
                carry = false;
            } else {
                digit[q] = 0;
            }
            cur.set_letter(q, letters[digit[q]]);
        }
        if (carry) {
            return;
        }
    }
}

}  // namespace gsv
