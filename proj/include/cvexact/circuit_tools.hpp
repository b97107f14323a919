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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cvexact/gate.hpp"

namespace cvexact {

struct TraceEntry {
    std::string label;
    int depth = 0;

    bool operator==(const TraceEntry &) const = default;
};

struct DecompReport {
    std::size_t n_gates_total = 0;
    std::size_t n_gates_nonfourier = 0;
    std::size_t n_gates_preopt = 0;  // non-Fourier count before optimize()
    std::size_t n_ancillas = 0;
    std::string route;
    int max_depth = 0;
    std::vector<TraceEntry> recursion_trace;
    double residual_symbolic = -1.0;  // negative: not computed
    std::string symbolic_method;       // "flat" or "compositional"
    std::optional<double> residual_numeric;
    std::optional<double> phase_offset;
};

/// Strengths below this magnitude are dropped by optimize().
inline constexpr double kZeroStrength = 1e-14;

/// Peephole passes to a fixpoint: adjacent inverse pairs cancel, adjacent
/// gates with the same generator merge, zero-strength gates vanish, and
/// ancillas with disjoint live ranges share a register.
GateSeq optimize(const GateSeq &seq);

std::size_t count_gates(const GateSeq &seq, bool exclude_fourier);

/// Circuit document; gates are listed in application order.
nlohmann::json serialize(const GateSeq &seq);
/// Throws SchemaViolation on malformed documents.
GateSeq deserialize(const nlohmann::json &doc);

nlohmann::json report_to_json(const DecompReport &r);
std::string report_to_text(const DecompReport &r);

}  // namespace cvexact
