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

#ifndef GSV_VERIFY_H
#define GSV_VERIFY_H

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "gsv/graph.h"
#include "gsv/protocol.h"
#include "gsv/rational.h"

namespace gsv {

struct VerificationReport {
    Rational beta = 0;
    Rational nu = 1;
    /// index(w) -> <G_w|Omega|G_w>, nonzero entries only, w != 0.
    std::map<uint64_t, Rational> lambda;
    bool valid = true;
    /// marginals[j] = {p_X, p_Y, p_Z} on qubit j.
    std::vector<std::array<Rational, 3>> marginals;
    /// An index attaining beta (0 when lambda is empty).
    uint64_t argmax = 0;
};

VerificationReport evaluate(const Graph &g, const Protocol &proto);

/// ceil(ln delta / ln(1 - nu eps)).
uint64_t num_tests(const Rational &nu, double epsilon, double delta);

double worst_case_pass_probability(const VerificationReport &report, double epsilon);

Rational minimal_set_bound(size_t m);

/// Restriction of a protocol on a nonconnected graph to one connected component.
Protocol reduced_protocol(const Graph &g, const Protocol &proto, size_t component);

}  // namespace gsv

#endif
