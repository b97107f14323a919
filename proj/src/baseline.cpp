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

#include "cvexact/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cvexact/errors.hpp"

namespace cvexact {

TargetGate target_from_term(const NOPoly &term, double strength) {
    Monomial mono;
    Complex c;
    if (!term.single_term(&mono, &c)) {
        throw Ineligible("term " + to_string(term) + " is not a single monomial");
    }
    if (std::abs(c.imag()) > 1e-12) {
        throw Ineligible("term " + to_string(term) + " has a complex coefficient");
    }
    TargetGate t;
    for (const auto &f : mono.factors()) {
        if (f.x && f.p) {
            throw Ineligible("term " + to_string(term) +
                             " mixes X and P on one mode; not covered by the exact method");
        }
        t.exponents[f.mode] = {f.x ? f.x : f.p, f.x ? Basis::Position : Basis::Momentum};
    }
    t.strength = strength * c.real();
    return t;
}

namespace {

// Compiles each exp(i s_j H_j) once and lays the pieces out on a shared
// register: target modes keep their indices, every piece's ancillas are
// renumbered from `n_modes` so consecutive pieces reuse the same registers.
class PieceSet {
   public:
    PieceSet(const std::vector<std::pair<NOPoly, double>> &pieces, const CompileOptions &opts) {
        std::vector<GateSeq> raw;
        for (const auto &[h, s] : pieces) {
            TargetGate t = target_from_term(h, s);
            raw.push_back(compile(t, opts).seq);
            n_modes_ = std::max(n_modes_, t.n_modes());
        }
        for (auto &seq : raw) {
            std::vector<std::uint32_t> map(seq.total_modes());
            for (std::uint32_t m = 0; m < map.size(); ++m) map[m] = m;
            for (std::size_t r = 0; r < seq.ancilla_modes.size(); ++r) {
                map[seq.ancilla_modes[r]] = n_modes_ + static_cast<std::uint32_t>(r);
            }
            n_ancillas_ = std::max(n_ancillas_, seq.ancilla_modes.size());
            std::vector<Gate> gates;
            for (const auto &g : seq.gates) gates.push_back(g.renamed(map));
            pieces_.push_back(std::move(gates));
        }
    }

    GateSeq repeat(std::size_t times) const {
        GateSeq out;
        out.n_target_modes = n_modes_;
        for (std::size_t r = 0; r < n_ancillas_; ++r) {
            out.ancilla_modes.push_back(n_modes_ + static_cast<std::uint32_t>(r));
        }
        std::size_t per = 0;
        for (const auto &p : pieces_) per += p.size();
        out.gates.reserve(per * times);
        for (std::size_t i = 0; i < times; ++i) {
            for (const auto &p : pieces_) out.gates.insert(out.gates.end(), p.begin(), p.end());
        }
        return out;
    }

   private:
    std::uint32_t n_modes_ = 0;
    std::size_t n_ancillas_ = 0;
    std::vector<std::vector<Gate>> pieces_;
};

}  // namespace

GateSeq trotter_suzuki(const std::vector<NOPoly> &terms, double t, int K, const CompileOptions &opts) {
    if (K < 1) throw std::invalid_argument("trotter_suzuki: K must be >= 1");
    std::vector<std::pair<NOPoly, double>> pieces;
    for (const auto &h : terms) pieces.emplace_back(h, t / K);
    return PieceSet(pieces, opts).repeat(static_cast<std::size_t>(K));
}

GateSeq commutator_approx(const NOPoly &a, const NOPoly &b, double t2, int K, const CompileOptions &opts) {
    if (K < 1) throw std::invalid_argument("commutator_approx: K must be >= 1");
    if (t2 < 0) throw std::invalid_argument("commutator_approx: t2 must be non-negative");
    const double d = std::sqrt(t2) / K;
    PieceSet group({{b, d}, {a, d}, {b, -d}, {a, -d}}, opts);
    return group.repeat(static_cast<std::size_t>(K) * static_cast<std::size_t>(K));
}

CommutatorEstimate estimate_single_commutator(double s, double epsilon) {
    if (!(epsilon > 0)) throw std::invalid_argument("estimate: epsilon must be positive");
    CommutatorEstimate e;
    const double k = std::ceil(kCommutatorKappa * s * s / epsilon);
    e.K = std::max<long long>(1, std::isfinite(k) ? static_cast<long long>(k) : 1);
    e.repeats = static_cast<double>(e.K) * static_cast<double>(e.K);
    e.gates = 4 * e.repeats;
    e.levels = 1;
    std::ostringstream os;
    os << "exp(s[A,B]) ~ (e^{idB} e^{idA} e^{-idB} e^{-idA})^{K^2}, d = sqrt(s)/K; error ~ kappa s^2/K "
          "with kappa = "
       << kCommutatorKappa << "; K = max(1, ceil(kappa s^2 / eps)); gates = 4 K^2";
    e.model = os.str();
    return e;
}

CommutatorEstimate estimate_commutator_count(const TargetGate &target, double epsilon) {
    const double s = 2.0 / 3.0 * std::abs(target.strength);
    CommutatorEstimate e = estimate_single_commutator(s, epsilon);
    const int modes = static_cast<int>(target.exponents.size());
    e.levels = std::max(1, modes - 1);
    e.gates = std::pow(4 * e.repeats, e.levels);
    std::ostringstream os;
    os << "levels = max(1, modes - 1) = " << e.levels
       << " nested group commutators; each level approximates exp(s[A,B]) with s = (2/3)|t| "
          "(the X^2P + PX^2 = (2/3)[X^3, P^2] rewrite); per level K = max(1, ceil(kappa s^2 / eps)), "
          "kappa = "
       << kCommutatorKappa
       << ", 4 K^2 gates; nesting replaces every gate of a level by a full circuit of the next, so "
          "gates = (4 K^2)^levels; Fourier gates are not counted";
    e.model = os.str();
    return e;
}

}  // namespace cvexact
