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

#ifndef GSV_RATIONAL_H
#define GSV_RATIONAL_H

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gsv {

using Rational = mpq_class;

/// "num/den", or just "num" when den == 1.
std::string to_string(const Rational &q);
/// Accepts "a", "a/b", with optional sign. Result is canonical.
Rational parse_rational(std::string_view s);
Rational pow2(long e);

}  // namespace gsv

#endif
