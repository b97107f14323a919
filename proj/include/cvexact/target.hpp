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

#include <cstdint>
#include <map>
#include <string>

#include "cvexact/gate.hpp"
#include "cvexact/weyl.hpp"

namespace cvexact {

struct Factor {
    int power = 1;
    Basis basis = Basis::Position;

    bool operator==(const Factor &) const = default;
};

/// exp(i * strength * H) with H a product of one quadrature power per mode.
struct TargetGate {
    std::map<std::uint32_t, Factor> exponents;
    double strength = 0.0;

    NOPoly hamiltonian() const;
    /// One past the largest mode index.
    std::uint32_t n_modes() const;
    int total_degree() const;
    Gate as_gate() const { return Gate::exp_poly(hamiltonian(), strength, "target"); }
    std::string describe() const;

    bool operator==(const TargetGate &) const = default;
};

}  // namespace cvexact
