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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "cvexact/errors.hpp"
#include "cvexact/verifier.hpp"

namespace cvexact {

namespace {

constexpr Basis kBases[] = {Basis::Position, Basis::Momentum};

}  // namespace

HeisenbergMap HeisenbergMap::identity(std::uint32_t modes) {
    HeisenbergMap m;
    m.modes = modes;
    for (std::uint32_t j = 0; j < modes; ++j) {
        for (auto b : kBases) m.images[{j, b}] = NOPoly::generator({j, b});
    }
    return m;
}

// For U = G_1 G_2 ... G_n, U^dagger q U = phi_{G_1}(q) with every generator
// replaced by its image under G_2 ... G_n. Walking right to left keeps each
// step to a handful of products of the running images.
HeisenbergMap heisenberg_action(const GateSeq &seq, std::uint32_t modes, std::size_t term_budget) {
    for (const auto &g : seq.gates) {
        for (auto m : g.modes()) modes = std::max(modes, m + 1);
    }
    HeisenbergMap map = HeisenbergMap::identity(modes);
    GeneratorMap current(map.images.begin(), map.images.end());
    for (auto it = seq.gates.rbegin(); it != seq.gates.rend(); ++it) {
        const Gate inv = it->inverse();
        std::vector<std::pair<QuadLabel, NOPoly>> updates;
        for (auto m : it->modes()) {
            for (auto b : kBases) {
                QuadLabel q{m, b};
                NOPoly local = heisenberg_conjugate(inv, NOPoly::generator(q));
                updates.emplace_back(q, substitute(local, current));
            }
        }
        for (auto &[q, img] : updates) current[q] = std::move(img);
        if (term_budget) {
            std::size_t terms = 0;
            for (const auto &[q, img] : current) terms += img.size();
            if (terms > term_budget) {
                throw VerificationBudgetExceeded("Heisenberg images reached " + std::to_string(terms) +
                                                 " terms (budget " + std::to_string(term_budget) + ")");
            }
        }
    }
    map.images = std::map<QuadLabel, NOPoly>(current.begin(), current.end());
    return map;
}

HeisenbergMap gate_action(const Gate &g, std::uint32_t modes) {
    for (auto m : g.modes()) modes = std::max(modes, m + 1);
    HeisenbergMap map = HeisenbergMap::identity(modes);
    const Gate inv = g.inverse();
    for (auto &[q, img] : map.images) img = heisenberg_conjugate(inv, img);
    return map;
}

double action_residual(const HeisenbergMap &a, const HeisenbergMap &b) {
    const std::uint32_t modes = std::max(a.modes, b.modes);
    double r = 0.0;
    for (std::uint32_t j = 0; j < modes; ++j) {
        for (auto basis : kBases) {
            QuadLabel q{j, basis};
            NOPoly self = NOPoly::generator(q);
            auto ia = a.images.find(q);
            auto ib = b.images.find(q);
            const NOPoly &pa = ia == a.images.end() ? self : ia->second;
            const NOPoly &pb = ib == b.images.end() ? self : ib->second;
            r = std::max(r, max_coeff_diff(pa, pb));
        }
    }
    return r;
}

double verify_symbolic(const GateSeq &seq, const TargetGate &target, std::size_t term_budget) {
    return verify_identity(seq, target.as_gate(), term_budget);
}

double verify_identity(const GateSeq &seq, const Gate &lhs, std::size_t term_budget) {
    HeisenbergMap circuit = heisenberg_action(seq, seq.total_modes(), term_budget);
    HeisenbergMap direct = gate_action(lhs, circuit.modes);
    return action_residual(circuit, direct);
}

namespace {

std::string kernel_key(const Gate &g) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", g.strength());
    return to_string(g.generator()) + " @ " + buf;
}

}  // namespace

Certificate certify_lowering(const TargetGate &target, const CompileOptions &opts) {
    const EligibilityVerdict v = check_eligibility(target);
    if (!v.eligible) throw Ineligible(v.reason);
    Certificate cert;
    std::set<std::string> seen;
    std::vector<Kernel> pending{MonoKernel{target.hamiltonian().terms().begin()->first, target.strength}};
    while (!pending.empty()) {
        Kernel k = std::move(pending.back());
        pending.pop_back();
        if (std::holds_alternative<FourierKernel>(k)) continue;
        const Gate lhs = kernel_gate(k);
        if (!seen.insert(kernel_key(lhs)).second) continue;
        Expansion e = expand_once(k, opts);
        cert.residual = std::max(cert.residual, verify_identity(e.seq, lhs));
        ++cert.identities;
        for (auto &child : e.kernels) pending.push_back(std::move(child));
    }
    return cert;
}

double canonical_commutator_defect(const HeisenbergMap &map) {
    double r = 0.0;
    for (std::uint32_t j = 0; j < map.modes; ++j) {
        for (std::uint32_t k = 0; k < map.modes; ++k) {
            const NOPoly &xj = map.image({j, Basis::Position});
            const NOPoly &pj = map.image({j, Basis::Momentum});
            const NOPoly &xk = map.image({k, Basis::Position});
            const NOPoly &pk = map.image({k, Basis::Momentum});
            NOPoly expected = j == k ? NOPoly(Complex{0.0, 0.5}) : NOPoly();
            r = std::max(r, max_coeff_diff(commutator(xj, pk), expected));
            if (j < k) {
                r = std::max(r, commutator(xj, xk).max_abs_coeff());
                r = std::max(r, commutator(pj, pk).max_abs_coeff());
            }
        }
    }
    return r;
}

}  // namespace cvexact
