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

#ifndef GSV_ERRORS_H
#define GSV_ERRORS_H

#include <stdexcept>
#include <string>

namespace gsv {

/// Caller broke a documented precondition (size mismatch, bad index, ...).
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input: settings, graph6, edge lists, rationals.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration or search exceeded its configured size limit.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A protocol failed validation or cannot verify the state.
struct InvalidProtocol : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const char *what) {
    if (!cond) {
        throw ContractViolation(what);
    }
}

}  // namespace gsv

#endif
