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

#include "cvexact/decomposer.hpp"
#include "cvexact/gate.hpp"
#include "cvexact/target.hpp"
#include "cvexact/weyl.hpp"

namespace cvexact {

/// Reads a single real-coefficient monomial as exp(i * strength * coeff * mono).
/// Throws Ineligible for sums, complex coefficients, or mixed X/P factors.
TargetGate target_from_term(const NOPoly &term, double strength);

/// (prod_j exp(i t/K H_j))^K with every factor compiled exactly.
GateSeq trotter_suzuki(const std::vector<NOPoly> &terms, double t, int K,
                       const CompileOptions &opts = {});

/// (exp(i d b) exp(i d a) exp(-i d b) exp(-i d a))^{K^2}, d = sqrt(t2)/K,
/// which approximates exp(t2 [a, b]).
GateSeq commutator_approx(const NOPoly &a, const NOPoly &b, double t2, int K,
                          const CompileOptions &opts = {});

struct CommutatorEstimate {
    double gates = 0;     // total gate count
    long long K = 1;      // per-level K
    double repeats = 1;   // K^2, repeats of the four-gate group per level
    int levels = 1;
    std::string model;
};

/// Error constant of the cost model: error ~ kappa * s^2 / K for a group
/// commutator approximating exp(s [A, B]).
inline constexpr double kCommutatorKappa = 0.37;

/// Cost of approximating exp(s [A, B]) with four-gate groups to precision epsilon.
CommutatorEstimate estimate_single_commutator(double s, double epsilon);

/// Cost-model estimate for a monomial target: levels = max(1, modes - 1)
/// nested commutators, each with s = (2/3)|t| and its own K.
CommutatorEstimate estimate_commutator_count(const TargetGate &target, double epsilon);

}  // namespace cvexact
