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

#include "gsv/verify.h"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>

#include "gsv/errors.h"
#include "gsv/stabilizer.h"
#include "gsv/testgen.h"

namespace gsv {

VerificationReport evaluate(const Graph &g, const Protocol &proto) {
    require(proto.n == g.n(), "evaluate: protocol size does not match graph");
    proto.validate();
    size_t n = g.n();
    require(n <= 24, "evaluate: n too large for dense eigenvalue vector");
    StabilizerBasis s = graph_stabilizer(g);
    std::vector<Rational> dense((size_t{1} << n) - 1, Rational(0));
    VerificationReport rep;
    rep.marginals.assign(n, {Rational(0), Rational(0), Rational(0)});
    for (const auto &e : proto.entries) {
        TestVector tv = e.setting.complete() ? test_vector_graph(g, e.setting) : test_vector_stab(s, e.setting);
        for (size_t k = 0; k < dense.size(); k++) {
            if (tv.bits.get(k)) {
                dense[k] += e.p;
            }
        }
        for (size_t j = 0; j < n; j++) {
            switch (e.setting.letter(j)) {
                case 'X':
                    rep.marginals[j][0] += e.p;
                    break;
                case 'Y':
                    rep.marginals[j][1] += e.p;
                    break;
                case 'Z':
                    rep.marginals[j][2] += e.p;
                    break;
                default:
                    break;
            }
        }
    }
    for (size_t k = 0; k < dense.size(); k++) {
        if (sgn(dense[k]) != 0) {
            if (dense[k] > rep.beta) {
                rep.beta = dense[k];
                rep.argmax = k + 1;
            }
            rep.lambda.emplace(k + 1, std::move(dense[k]));
        }
    }
    rep.nu = 1 - rep.beta;
    rep.valid = rep.beta < 1;
    return rep;
}

uint64_t num_tests(const Rational &nu, double epsilon, double delta) {
    require(epsilon > 0 && epsilon < 1, "num_tests: epsilon must lie in (0,1)");
    require(delta > 0 && delta < 1, "num_tests: delta must lie in (0,1)");
    require(sgn(nu) > 0 && nu <= 1, "num_tests: nu must lie in (0,1]");
    double ne = nu.get_d() * epsilon;
    require(ne < 1, "num_tests: nu * epsilon must be below 1");
    double ratio = std::log(delta) / std::log1p(-ne);
    double nearest = std::nearbyint(ratio);
    if (std::fabs(ratio - nearest) > 1e-9 * std::max(1.0, std::fabs(ratio))) {
        return (uint64_t)std::ceil(ratio);
    }
    using boost::multiprecision::cpp_dec_float_50;
    cpp_dec_float_50 num(nu.get_num().get_str());
    cpp_dec_float_50 den(nu.get_den().get_str());
    cpp_dec_float_50 e(epsilon);
    cpp_dec_float_50 d(delta);
    cpp_dec_float_50 r = log(d) / log(1 - num / den * e);
    // Values within rounding noise above an integer count as that integer.
    cpp_dec_float_50 lo = floor(r);
    cpp_dec_float_50 c = r - lo < cpp_dec_float_50("1e-40") ? lo : cpp_dec_float_50(ceil(r));
    return c.convert_to<uint64_t>();
}

double worst_case_pass_probability(const VerificationReport &report, double epsilon) {
    require(epsilon >= 0 && epsilon <= 1, "worst_case_pass_probability: epsilon must lie in [0,1]");
    return 1.0 - report.nu.get_d() * epsilon;
}

Rational minimal_set_bound(size_t m) {
    require(m >= 1, "minimal_set_bound: m must be positive");
    return Rational(1, (unsigned long)m);
}

Protocol reduced_protocol(const Graph &g, const Protocol &proto, size_t component) {
    require(proto.n == g.n(), "reduced_protocol: size mismatch");
    auto comps = connected_components(g);
    require(comps.size() > 1, "reduced_protocol: graph is connected");
    require(component < comps.size(), "reduced_protocol: component index out of range");
    const auto &verts = comps[component].vertices;
    Protocol out;
    out.n = verts.size();
    out.provenance = proto.provenance;
    for (const auto &e : proto.entries) {
        SymplecticVector r(verts.size());
        for (size_t i = 0; i < verts.size(); i++) {
            r.set_letter(i, e.setting.letter(verts[i]));
        }
        bool merged = false;
        for (auto &o : out.entries) {
            if (o.setting == r) {
                o.p += e.p;
                merged = true;
                break;
            }
        }
        if (!merged) {
            out.entries.push_back({std::move(r), e.p});
        }
    }
    out.validate();
    return out;
}

}  // namespace gsv
