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

#ifndef GSV_LP_H
#define GSV_LP_H

#include <utility>
#include <vector>

#include "gsv/rational.h"

namespace gsv {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct LpRow {
    std::vector<std::pair<size_t, Rational>> coeffs;
    Sense sense = Sense::kLessEqual;
    Rational rhs = 0;
};

/// minimize c.x subject to rows, x >= 0.
struct LinearProgram {
    size_t num_vars = 0;
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
    LpStatus status = LpStatus::kInfeasible;
    Rational value = 0;
    std::vector<Rational> x;
    size_t pivots = 0;
};

/// Two-phase dense tableau simplex in exact rationals, Bland's rule throughout.
LpResult solve_lp(const LinearProgram &lp);

}  // namespace gsv

#endif
