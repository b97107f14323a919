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
#include <vector>

#include <Eigen/Dense>

#include "cvexact/decomposer.hpp"
#include "cvexact/gate.hpp"
#include "cvexact/target.hpp"
#include "cvexact/weyl.hpp"

namespace cvexact {

/// Images U^dagger q U of every generator q of the first `modes` modes.
struct HeisenbergMap {
    std::uint32_t modes = 0;
    std::map<QuadLabel, NOPoly> images;

    const NOPoly &image(QuadLabel q) const { return images.at(q); }
    static HeisenbergMap identity(std::uint32_t modes);
};

/// `term_budget` caps the total number of terms across the running images
/// (0 means unlimited); exceeding it throws VerificationBudgetExceeded.
HeisenbergMap heisenberg_action(const GateSeq &seq, std::uint32_t modes,
                                std::size_t term_budget = 0);
/// Action of the single gate exp(i s H), computed by its own BCH series.
HeisenbergMap gate_action(const Gate &g, std::uint32_t modes);

/// Largest coefficient difference over all generator images.
double action_residual(const HeisenbergMap &a, const HeisenbergMap &b);

/// Residual between the circuit's action and the target gate's action. The
/// comparison covers every mode the circuit touches, so ancillas must come
/// back untouched.
double verify_symbolic(const GateSeq &seq, const TargetGate &target, std::size_t term_budget = 0);
/// Same check against an arbitrary single-exponential left-hand side.
double verify_identity(const GateSeq &seq, const Gate &lhs, std::size_t term_budget = 0);

struct Certificate {
    double residual = 0.0;       // largest identity residual
    std::size_t identities = 0;  // distinct kernels checked
};

/// Checks the lowering of `target` one identity at a time: every kernel's
/// one-level expansion is verified against the kernel itself, then its
/// kernels are checked in turn. Exact identities at every level make the
/// unoptimized circuit exact, without ever forming its global action.
Certificate certify_lowering(const TargetGate &target, const CompileOptions &opts = {});

/// Largest deviation of [img X_j, img P_k] from (i/2) delta_jk and of the
/// same-basis commutators from zero.
double canonical_commutator_defect(const HeisenbergMap &map);

// ---------------------------------------------------------------------------
// Truncated Fock space

using CMatrix = Eigen::MatrixXcd;

struct FockContext {
    int cutoff = 24;    // D
    int subspace = 5;   // d
    /// Levels compared on modes beyond the target's (ancillas); 1 means the
    /// ancillas start in, and are projected back onto, the vacuum.
    int ancilla_levels = 1;
    double tolerance = 1e-5;
    /// Largest full Hilbert-space dimension allowed.
    std::size_t max_dimension = 100000;
};

struct FockMatrices {
    std::vector<CMatrix> x;
    std::vector<CMatrix> p;
};

/// Single-mode ladder matrices at cutoff D.
CMatrix ladder(int cutoff);
CMatrix position_matrix(int cutoff);
CMatrix momentum_matrix(int cutoff);
/// Per-mode X = (a^dagger + a)/2, P = i(a^dagger - a)/2.
FockMatrices fock_matrices(std::uint32_t modes, const FockContext &ctx);

/// exp(i s H) for a Hermitian matrix H via eigendecomposition.
CMatrix expi_hermitian(const CMatrix &h, double s);

/// Evaluates a polynomial on the truncated single-mode matrices (one mode).
CMatrix single_mode_matrix(const NOPoly &p, int cutoff);

/// Hamiltonian built from the truncated single-mode X and P matrices; every
/// monomial must carry pure powers per mode (no X^a P^b on one mode).
CMatrix hamiltonian_matrix(const NOPoly &h, std::uint32_t modes, int cutoff);

/// Dense D^m x D^m unitary of a circuit of universal gates (or single-term
/// pure-power generators). Mode k has stride D^k.
CMatrix circuit_unitary(const GateSeq &seq, std::uint32_t modes, int cutoff);

/// Largest singular value of P(a - e^{i phi} b)P on the lowest `subspace`
/// levels of every mode, phi = arg tr(b^dagger a) over that block.
double subspace_distance(const CMatrix &a, const CMatrix &b, std::uint32_t modes, int cutoff,
                         int subspace, double *phase = nullptr);

struct NumericResult {
    double subspace_error = 0.0;
    double phase_offset = 0.0;
};

/// Compares the circuit with exp(i t H) on the lowest `subspace` levels of
/// every target mode (ancillas per `ancilla_levels`), after aligning the
/// global phase. The error is the largest singular value of the projected
/// difference.
NumericResult verify_numeric(const GateSeq &seq, const TargetGate &target, const FockContext &ctx);

}  // namespace cvexact
