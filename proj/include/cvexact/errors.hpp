// Copyright 2026 The cvexact Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace cvexact {

/// BCH series did not vanish within its term bound.
struct NonTerminatingSeries : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Target gate has no exact route; `what()` carries the verdict reason.
struct Ineligible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Polynomial-power decomposition needs a summand with exponent one.
struct NoUnitCentralMode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Heisenberg image grew past the configured term budget.
struct VerificationBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cvexact
