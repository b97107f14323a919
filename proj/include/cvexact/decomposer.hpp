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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "cvexact/circuit_tools.hpp"
#include "cvexact/gate.hpp"
#include "cvexact/target.hpp"

namespace cvexact {

using Rational = boost::rational<std::int64_t>;

enum class RouteKind {
    UniversalPrimitive,
    SingleEven,
    SingleOdd3,
    GeneralMultiMode,
    SpecialIdentity,
};

struct EligibilityVerdict {
    bool eligible = false;
    RouteKind route = RouteKind::UniversalPrimitive;
    std::string label;  // identity label for SpecialIdentity routes
    std::string reason;
};

std::string route_name(const EligibilityVerdict &v);

/// Chooses the compilation route. Dedicated identities (two squares, P X^2,
/// P X^n, P P X^2, up to Fourier transforms on individual modes) take
/// precedence over the linear-combination rules.
EligibilityVerdict check_eligibility(const TargetGate &target);

/// Solution of the Pascal system: coeffs[k-1] = c_k, c_{N-k} = (-1)^k / N!.
struct CoeffSolution {
    int N = 0;
    std::vector<Rational> coeffs;

    Rational c(int k) const { return coeffs.at(static_cast<std::size_t>(k - 1)); }
};

/// (N-1) x N Pascal matrix acting on (c_N, ..., c_1).
std::vector<std::vector<Rational>> pascal_matrix(int N);
CoeffSolution solve_pascal_coeffs(int N);

/// Sum of X_mode^power over the listed summands.
using Summands = std::vector<std::pair<std::uint32_t, int>>;

struct PolyTerm {
    Rational coefficient;
    Summands summands;
};

/// Expansion of the all-position target monomial as sum_k c_k sum_S (sum_S X^n)^N,
/// subsets in lexicographic order, largest subsets first.
std::vector<PolyTerm> expand_general_d(const TargetGate &target);

// ---------------------------------------------------------------------------
// Intermediate gates produced while applying identities.

struct MonoKernel {
    Monomial mono;
    double strength = 0.0;
};

/// exp(i strength (sum X_m^{n_m})^N)
struct PolyPowKernel {
    Summands summands;
    int power = 1;
    double strength = 0.0;
};

struct FourierKernel {
    std::uint32_t mode = 0;
    int power = 1;
};

using Kernel = std::variant<MonoKernel, PolyPowKernel, FourierKernel>;

Gate kernel_gate(const Kernel &k, const std::string &provenance = {});
GateSeq kernels_to_seq(const std::vector<Kernel> &ks, std::uint32_t n_modes,
                       const std::string &provenance = {});

/// One-level right-hand sides of the building-block identities. Ancilla modes
/// are passed explicitly. Strength conventions follow the left-hand sides:
///   px2:        exp(i s P_k X_j^2) with 3 alpha^2 t = s, s > 0
///   px_n:       exp(i s P_k X_j^N) with 2 alpha^2 = s, s > 0
///   pp_xn:      exp(i s P_k P_l X_j^n) with 2 alpha^2 = s, s > 0
///   x2x2:       exp(i t X_j^2 X_k^2)
///   single_even exp(i t X_k^N), ancilla j; `shift` is the strength of the
///               exp(i shift P_j X_k^{N/2}) conjugator (default 2)
///   single_odd3 exp(i t X_k^N), ancillas j, l
///   poly_power  exp(i t (sum X^n)^N) via conjugation around the first unit summand
std::vector<Kernel> identity_px2(std::uint32_t j, std::uint32_t k, double alpha, double t);
std::vector<Kernel> identity_px_n(std::uint32_t j, std::uint32_t k, int N, double alpha);
std::vector<Kernel> identity_pp_xn(std::uint32_t j, std::uint32_t k, std::uint32_t l, int n,
                                   double alpha);
std::vector<Kernel> identity_x2x2(std::uint32_t j, std::uint32_t k, double t);
std::vector<Kernel> identity_single_even(std::uint32_t k, std::uint32_t j, int N, double t,
                                         double shift = 2.0);
std::vector<Kernel> identity_single_odd3(std::uint32_t k, std::uint32_t j, std::uint32_t l, int N,
                                         double t);
std::vector<Kernel> identity_poly_power(const Summands &summands, int N, double t);

struct CompileOptions {
    /// Magnitude of the cubic strength t in exp(i s P X^2); alpha = sqrt(|s| / 3t).
    double param_split = 1.0;
    /// Conjugator strength in the even single-mode identity. Smaller values keep
    /// intermediate states closer to the vacuum, which helps truncated checks.
    double even_shift = 2.0;
    bool run_optimizer = true;
};

/// Full compilation result.
struct Compiled {
    GateSeq seq;
    DecompReport report;
};

// Each decompose_* call lowers its identity all the way to universal gates.
// Fresh ancillas are numbered from one past the largest mode in use.
GateSeq decompose_poly_power(const Summands &summands, int N, double t,
                             const CompileOptions &opts = {});
GateSeq decompose_px2(std::uint32_t j, std::uint32_t k, double s, const CompileOptions &opts = {});
GateSeq decompose_px_n(std::uint32_t j, std::uint32_t k, int N, double s,
                       const CompileOptions &opts = {});
GateSeq decompose_pp_xn(std::uint32_t j, std::uint32_t k, std::uint32_t l, int n, double s,
                        const CompileOptions &opts = {});
GateSeq decompose_x2x2(std::uint32_t j, std::uint32_t k, double t, const CompileOptions &opts = {});
GateSeq decompose_single_even(std::uint32_t k, int N, double t, const CompileOptions &opts = {});
GateSeq decompose_single_odd3(std::uint32_t k, int N, double t, const CompileOptions &opts = {});

/// One identity application: the right-hand side as gates (Fourier gates and
/// intermediate kernels) and the kernels it still has to lower.
struct Expansion {
    GateSeq seq;
    std::vector<Kernel> kernels;
};

/// Applies the identity the router picks for `k`, without recursing. Universal
/// kernels expand to themselves (wrapped in Fourier gates where needed).
Expansion expand_once(const Kernel &k, const CompileOptions &opts = {});

/// Intake, route dispatch, recursive lowering, then optimize(). Throws
/// Ineligible with the verdict reason.
Compiled compile(const TargetGate &target, const CompileOptions &opts = {});

}  // namespace cvexact
