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
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cvexact/weyl.hpp"

namespace cvexact {

/// Members of the universal gate set other than the Fourier gate.
enum class UniversalKind : std::uint8_t { X1, X2, X3, XX };

/// A Fourier gate F^power on one mode, or exp(i * strength * generator).
///
/// F = exp(i pi/2 (X^2 + P^2)) acts as F X F^dagger = P, F P F^dagger = -X,
/// so that F^dagger X F = -P and F^dagger P F = X.
class Gate {
   public:
    enum class Kind : std::uint8_t { Fourier, ExpPoly };

    static Gate fourier(std::uint32_t mode, int power, std::string provenance = {});
    static Gate exp_poly(NOPoly generator, double strength, std::string provenance = {});
    static Gate exp_poly(std::shared_ptr<const NOPoly> generator, double strength,
                         std::string provenance = {});
    static Gate universal(UniversalKind kind, std::uint32_t mode_a, std::uint32_t mode_b,
                          double strength, std::string provenance = {});

    Kind kind() const { return kind_; }
    bool is_fourier() const { return kind_ == Kind::Fourier; }
    std::uint32_t fourier_mode() const { return mode_; }
    int fourier_power() const { return power_; }
    const NOPoly &generator() const { return *generator_; }
    const std::shared_ptr<const NOPoly> &generator_ptr() const { return generator_; }
    double strength() const { return strength_; }
    const std::string &provenance() const { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }

    /// Universal-set classification of an ExpPoly gate; Fourier gates and
    /// non-universal generators return nullopt.
    std::optional<UniversalKind> universal_kind() const;
    /// Modes touched by a universal ExpPoly gate, ordered (second equals first
    /// for single-mode kinds).
    std::vector<std::uint32_t> universal_modes() const;
    bool is_universal() const { return is_fourier() || universal_kind().has_value(); }

    std::set<std::uint32_t> modes() const;
    Gate inverse() const;
    Gate with_strength(double s) const;
    /// Same Fourier mode, or identical generator polynomial.
    bool same_generator(const Gate &o) const;
    Gate renamed(const std::vector<std::uint32_t> &mode_map) const;

    bool operator==(const Gate &o) const;

   private:
    Kind kind_ = Kind::ExpPoly;
    std::uint32_t mode_ = 0;
    int power_ = 1;
    std::shared_ptr<const NOPoly> generator_;
    double strength_ = 0.0;
    std::string provenance_;
};

/// Ordered gate list written as an operator product: gates.front() is the
/// leftmost factor, i.e. applied last.
struct GateSeq {
    std::vector<Gate> gates;
    std::uint32_t n_target_modes = 0;
    std::vector<std::uint32_t> ancilla_modes;

    std::uint32_t total_modes() const;
    void append(const GateSeq &o);
    bool operator==(const GateSeq &o) const = default;
};

/// Reversed sequence of inverted gates.
GateSeq inverse(const GateSeq &seq);

/// Default BCH term bound: 2 + deg(b) * deg(generator).
int default_bch_bound(const NOPoly &generator, const NOPoly &b);

/// U b U^dagger for the unitary U of `g`. For ExpPoly gates the BCH series of
/// exp(A) b exp(-A), A = i * strength * generator, is summed until a term
/// vanishes; NonTerminatingSeries if that takes more than `max_terms` terms
/// (0 selects the default bound).
NOPoly heisenberg_conjugate(const Gate &g, const NOPoly &b, int max_terms = 0);

/// Leading `order` factors (2..4) of the Zassenhaus product for
/// exp(it(a + b)). When [a, b] = 0 exactly two factors are returned.
GateSeq zassenhaus_split(const NOPoly &a, const NOPoly &b, double t, int order);

}  // namespace cvexact
