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

#include <string>
#include <vector>

#include "cvexact/target.hpp"

namespace cvexact {

// Target syntax:
//
//   t=0.1 X[0] X[1] X[2]^2
//   t=0.5 X[0]^2 + P[0]^2        (sums only make sense with Trotter splitting)
//
// Factors may be separated by whitespace or '*'. Each mode may appear once
// per term.

/// Every '+'-separated term as a TargetGate sharing the strength t.
std::vector<TargetGate> parse_terms(const std::string &text);
/// Exactly one term; throws ParseError otherwise.
TargetGate parse_target(const std::string &text);
/// Inverse of parse_target (strength in shortest round-trip form).
std::string format_target(const TargetGate &t);

/// Kernel spec for a named application preset, or throws ParseError.
std::string preset_spec(const std::string &name);
std::vector<std::string> preset_names();

}  // namespace cvexact
