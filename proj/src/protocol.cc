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

#include "gsv/protocol.h"

#include <unordered_set>

#include "gsv/errors.h"

namespace gsv {

const char *provenance_name(Provenance p) {
    switch (p) {
        case Provenance::kLp:
            return "lp";
        case Provenance::kColoring:
            return "coloring";
        case Provenance::kClosedForm:
            return "closed-form";
        case Provenance::kComposed:
            return "composed";
        case Provenance::kMinSettings:
            return "min-settings";
        case Provenance::kInput:
            return "input";
    }
    return "?";
}

void Protocol::validate() const {
    if (entries.empty()) {
        throw InvalidProtocol("protocol has no settings");
    }
    Rational total = 0;
    std::unordered_set<SymplecticVector> seen;
    for (const auto &e : entries) {
        if (e.setting.n != n) {
            throw InvalidProtocol("setting " + e.setting.str() + " has wrong length");
        }
        if (sgn(e.p) <= 0) {
            throw InvalidProtocol("nonpositive probability for " + e.setting.str());
        }
        if (!seen.insert(e.setting).second) {
            throw InvalidProtocol("duplicate setting " + e.setting.str());
        }
        total += e.p;
    }
    if (total != 1) {
        throw InvalidProtocol("probabilities sum to " + to_string(total) + ", not 1");
    }
}

Protocol Protocol::from_strings(const std::vector<std::pair<std::string, std::string>> &rows, Provenance prov) {
    Protocol p;
    p.provenance = prov;
    for (const auto &[s, q] : rows) {
        ProtocolEntry e{setting_from_string(s), parse_rational(q)};
        if (p.entries.empty()) {
            p.n = e.setting.n;
        }
        p.entries.push_back(std::move(e));
    }
    p.validate();
    return p;
}

Protocol Protocol::uniform(const std::vector<SymplecticVector> &settings, Provenance prov) {
    require(!settings.empty(), "Protocol::uniform: no settings");
    Protocol p;
    p.n = settings[0].n;
    p.provenance = prov;
    Rational w(1, (unsigned long)settings.size());
    for (const auto &s : settings) {
        p.entries.push_back({s, w});
    }
    p.validate();
    return p;
}

}  // namespace gsv
