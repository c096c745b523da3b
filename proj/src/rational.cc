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

#include "gsv/rational.h"

#include <cctype>

#include "gsv/errors.h"

namespace gsv {

std::string to_string(const Rational &q) {
    return q.get_str();
}

Rational parse_rational(std::string_view s) {
    std::string t(s);
    size_t slash = t.find('/');
    auto digits_ok = [](const std::string &d, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && i < d.size() && (d[i] == '-' || d[i] == '+')) {
            i++;
        }
        if (i == d.size()) {
            return false;
        }
        for (; i < d.size(); i++) {
            if (!std::isdigit((unsigned char)d[i])) {
                return false;
            }
        }
        return true;
    };
    std::string num = slash == std::string::npos ? t : t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
        throw ParseError("bad rational '" + t + "'");
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    mpz_class d(den);
    if (d == 0) {
        throw ParseError("rational with zero denominator");
    }
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

Rational pow2(long e) {
    mpz_class one = 1;
    mpz_class p;
    mpz_mul_2exp(p.get_mpz_t(), one.get_mpz_t(), (mp_bitcnt_t)(e < 0 ? -e : e));
    return e < 0 ? Rational(1, p) : Rational(p);
}

}  // namespace gsv
