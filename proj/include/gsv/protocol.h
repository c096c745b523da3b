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

#ifndef GSV_PROTOCOL_H
#define GSV_PROTOCOL_H

#include <string>
#include <utility>
#include <vector>

#include "gsv/rational.h"
#include "gsv/symplectic.h"

namespace gsv {

enum class Provenance { kLp, kColoring, kClosedForm, kComposed, kMinSettings, kInput };

const char *provenance_name(Provenance p);

struct ProtocolEntry {
    SymplecticVector setting;
    Rational p;
};

/// Distribution over Pauli settings.
struct Protocol {
    size_t n = 0;
    std::vector<ProtocolEntry> entries;
    Provenance provenance = Provenance::kInput;

    /// Throws InvalidProtocol on nonpositive weights, a sum other than 1, duplicates, or size mismatches.
    void validate() const;
    size_t size() const {
        return entries.size();
    }
    /// From ("XZX", "1/3") pairs; validated.
    static Protocol from_strings(const std::vector<std::pair<std::string, std::string>> &rows,
                                 Provenance prov = Provenance::kInput);
    /// Equal weight on every setting; validated.
    static Protocol uniform(const std::vector<SymplecticVector> &settings, Provenance prov);
};

}  // namespace gsv

#endif
