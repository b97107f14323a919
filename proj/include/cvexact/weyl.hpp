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

#include <complex>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cvexact {

using Complex = std::complex<double>;

enum class Basis : std::uint8_t { Position, Momentum };

/// One quadrature generator: X_mode or P_mode.
struct QuadLabel {
    std::uint32_t mode = 0;
    Basis basis = Basis::Position;

    auto operator<=>(const QuadLabel &) const = default;
    bool operator==(const QuadLabel &) const = default;
};

std::string to_string(const QuadLabel &q);

/// X^x P^p on a single mode, in normal order.
struct ModePower {
    std::uint32_t mode = 0;
    std::uint16_t x = 0;
    std::uint16_t p = 0;

    auto operator<=>(const ModePower &) const = default;
    bool operator==(const ModePower &) const = default;
};

/// Product of per-mode normal-ordered powers, sorted by mode, no empty factors.
class Monomial {
   public:
    Monomial() = default;
    Monomial(std::initializer_list<ModePower> factors);
    explicit Monomial(std::vector<ModePower> factors);

    const std::vector<ModePower> &factors() const { return factors_; }
    bool is_identity() const { return factors_.empty(); }
    int degree() const;
    /// Exponents on `mode`, {0,0} when absent.
    ModePower on_mode(std::uint32_t mode) const;

    auto operator<=>(const Monomial &) const = default;
    bool operator==(const Monomial &) const = default;

   private:
    std::vector<ModePower> factors_;
};

std::string to_string(const Monomial &m);

/// Noncommutative polynomial in {X_j, P_j} stored in normal order (X before P
/// within each mode) under [X_j, P_j] = i/2.
class NOPoly {
   public:
    /// A sum whose magnitude falls below this fraction of the summed
    /// |contributions| is treated as an exact cancellation and dropped.
    static constexpr double kDefaultPrune = 1e-12;
    static bool cancelled(Complex sum, double mass);
    using TermMap = std::map<Monomial, Complex>;

    NOPoly() = default;
    NOPoly(Complex constant);  // NOLINT: scalars embed as constants

    static NOPoly X(std::uint32_t mode, int power = 1);
    static NOPoly P(std::uint32_t mode, int power = 1);
    static NOPoly generator(QuadLabel q, int power = 1);
    static NOPoly term(const Monomial &m, Complex c = 1.0);

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const;
    Complex coefficient(const Monomial &m) const;
    double max_abs_coeff() const;
    std::set<std::uint32_t> modes() const;
    /// Present iff the polynomial is a single monomial (coefficient returned
    /// through `coeff`).
    bool single_term(Monomial *mono, Complex *coeff) const;

    void add_term(const Monomial &m, Complex c);
    /// Drops every term with |c| < threshold.
    NOPoly &prune(double threshold = kDefaultPrune);

    NOPoly &operator+=(const NOPoly &o);
    NOPoly &operator-=(const NOPoly &o);
    NOPoly &operator*=(Complex s);
    friend NOPoly operator+(NOPoly a, const NOPoly &b) { return a += b; }
    friend NOPoly operator-(NOPoly a, const NOPoly &b) { return a -= b; }
    friend NOPoly operator-(NOPoly a) { return a *= -1.0; }
    friend NOPoly operator*(NOPoly a, Complex s) { return a *= s; }
    friend NOPoly operator*(Complex s, NOPoly a) { return a *= s; }
    friend NOPoly operator*(const NOPoly &a, const NOPoly &b);
    bool operator==(const NOPoly &o) const { return terms_ == o.terms_; }

    /// Hermitian adjoint, re-normal-ordered.
    NOPoly adjoint() const;

   private:
    TermMap terms_;
};

std::string to_string(const NOPoly &p);

NOPoly poly_mul(const NOPoly &a, const NOPoly &b);
NOPoly commutator(const NOPoly &a, const NOPoly &b);
NOPoly power(const NOPoly &a, int k);

/// Largest |coefficient| of a - b.
double max_coeff_diff(const NOPoly &a, const NOPoly &b);

/// Images of generators under an algebra homomorphism; generators absent from
/// the map are sent to themselves.
using GeneratorMap = std::map<QuadLabel, NOPoly>;

/// Applies the homomorphism defined by `images` to `p`.
NOPoly substitute(const NOPoly &p, const GeneratorMap &images);

/// a = X + iP, a^dagger = X - iP (times 1; the quadratures carry the 1/2).
NOPoly annihilation(std::uint32_t mode);
NOPoly creation(std::uint32_t mode);

}  // namespace cvexact
