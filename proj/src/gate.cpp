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

#include "cvexact/gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvexact/errors.hpp"

namespace cvexact {

Gate Gate::fourier(std::uint32_t mode, int power, std::string provenance) {
    if (power != 1 && power != -1) throw std::invalid_argument("Fourier power must be +1 or -1");
    Gate g;
    g.kind_ = Kind::Fourier;
    g.mode_ = mode;
    g.power_ = power;
    g.provenance_ = std::move(provenance);
    return g;
}

Gate Gate::exp_poly(NOPoly generator, double strength, std::string provenance) {
    return exp_poly(std::make_shared<const NOPoly>(std::move(generator)), strength,
                    std::move(provenance));
}

Gate Gate::exp_poly(std::shared_ptr<const NOPoly> generator, double strength,
                    std::string provenance) {
    Gate g;
    g.kind_ = Kind::ExpPoly;
    g.generator_ = std::move(generator);
    g.strength_ = strength;
    g.provenance_ = std::move(provenance);
    return g;
}

Gate Gate::universal(UniversalKind kind, std::uint32_t mode_a, std::uint32_t mode_b,
                     double strength, std::string provenance) {
    NOPoly gen;
    switch (kind) {
        case UniversalKind::X1: gen = NOPoly::X(mode_a, 1); break;
        case UniversalKind::X2: gen = NOPoly::X(mode_a, 2); break;
        case UniversalKind::X3: gen = NOPoly::X(mode_a, 3); break;
        case UniversalKind::XX:
            if (mode_a == mode_b) throw std::invalid_argument("XX gate needs two distinct modes");
            gen = NOPoly::X(mode_a) * NOPoly::X(mode_b);
            break;
    }
    return exp_poly(std::move(gen), strength, std::move(provenance));
}

std::optional<UniversalKind> Gate::universal_kind() const {
    if (kind_ != Kind::ExpPoly) return std::nullopt;
    Monomial m;
    Complex c;
    if (!generator_->single_term(&m, &c)) return std::nullopt;
    if (std::abs(c - Complex{1.0}) > 1e-15) return std::nullopt;
    const auto &f = m.factors();
    if (f.size() == 1 && f[0].p == 0) {
        switch (f[0].x) {
            case 1: return UniversalKind::X1;
            case 2: return UniversalKind::X2;
            case 3: return UniversalKind::X3;
            default: return std::nullopt;
        }
    }
    if (f.size() == 2 && f[0].x == 1 && f[0].p == 0 && f[1].x == 1 && f[1].p == 0) {
        return UniversalKind::XX;
    }
    return std::nullopt;
}

std::vector<std::uint32_t> Gate::universal_modes() const {
    if (is_fourier()) return {mode_, mode_};
    auto ms = generator_->modes();
    std::vector<std::uint32_t> out(ms.begin(), ms.end());
    if (out.size() == 1) out.push_back(out[0]);
    return out;
}

std::set<std::uint32_t> Gate::modes() const {
    if (is_fourier()) return {mode_};
    return generator_->modes();
}

Gate Gate::inverse() const {
    Gate g = *this;
    if (is_fourier()) {
        g.power_ = -power_;
    } else {
        g.strength_ = -strength_;
    }
    return g;
}

Gate Gate::with_strength(double s) const {
    Gate g = *this;
    g.strength_ = s;
    return g;
}

bool Gate::same_generator(const Gate &o) const {
    if (kind_ != o.kind_) return false;
    if (is_fourier()) return mode_ == o.mode_;
    return generator_ == o.generator_ || *generator_ == *o.generator_;
}

Gate Gate::renamed(const std::vector<std::uint32_t> &mode_map) const {
    auto map_mode = [&](std::uint32_t m) { return m < mode_map.size() ? mode_map[m] : m; };
    Gate g = *this;
    if (is_fourier()) {
        g.mode_ = map_mode(mode_);
        return g;
    }
    bool changed = false;
    for (auto m : generator_->modes()) changed |= map_mode(m) != m;
    if (!changed) return g;
    NOPoly gen;
    for (const auto &[mono, c] : generator_->terms()) {
        std::vector<ModePower> f = mono.factors();
        for (auto &mp : f) mp.mode = map_mode(mp.mode);
        gen.add_term(Monomial(std::move(f)), c);
    }
    g.generator_ = std::make_shared<const NOPoly>(std::move(gen));
    return g;
}

bool Gate::operator==(const Gate &o) const {
    if (kind_ != o.kind_) return false;
    if (is_fourier()) return mode_ == o.mode_ && power_ == o.power_;
    return strength_ == o.strength_ && same_generator(o);
}

std::uint32_t GateSeq::total_modes() const {
    return n_target_modes + static_cast<std::uint32_t>(ancilla_modes.size());
}

void GateSeq::append(const GateSeq &o) {
    gates.insert(gates.end(), o.gates.begin(), o.gates.end());
    n_target_modes = std::max(n_target_modes, o.n_target_modes);
    for (auto a : o.ancilla_modes) {
        if (std::find(ancilla_modes.begin(), ancilla_modes.end(), a) == ancilla_modes.end()) {
            ancilla_modes.push_back(a);
        }
    }
}

GateSeq inverse(const GateSeq &seq) {
    GateSeq out = seq;
    out.gates.clear();
    out.gates.reserve(seq.gates.size());
    for (auto it = seq.gates.rbegin(); it != seq.gates.rend(); ++it) out.gates.push_back(it->inverse());
    return out;
}

int default_bch_bound(const NOPoly &generator, const NOPoly &b) {
    return 2 + b.degree() * generator.degree();
}

NOPoly heisenberg_conjugate(const Gate &g, const NOPoly &b, int max_terms) {
    if (g.is_fourier()) {
        const std::uint32_t m = g.fourier_mode();
        const double sign = g.fourier_power() > 0 ? 1.0 : -1.0;
        GeneratorMap images;
        images[{m, Basis::Position}] = sign * NOPoly::P(m);
        images[{m, Basis::Momentum}] = -sign * NOPoly::X(m);
        return substitute(b, images);
    }
    if (g.strength() == 0.0) return b;
    const NOPoly a = Complex{0.0, g.strength()} * g.generator();
    const int bound = max_terms > 0 ? max_terms : default_bch_bound(g.generator(), b);
    NOPoly sum = b;
    NOPoly term = b;
    for (int k = 1;; ++k) {
        term = commutator(a, term) * Complex{1.0 / k};
        if (term.is_zero()) return sum;
        if (k >= bound) {
            throw NonTerminatingSeries("BCH series for generator " + to_string(g.generator()) +
                                       " did not terminate within " + std::to_string(bound) +
                                       " terms");
        }
        sum += term;
    }
}

GateSeq zassenhaus_split(const NOPoly &a, const NOPoly &b, double t, int order) {
    if (order < 2) throw std::invalid_argument("zassenhaus_split: order must be >= 2");
    if (order > 4) throw std::invalid_argument("zassenhaus_split: only orders up to 4 are tabulated");
    GateSeq seq;
    std::uint32_t modes = 0;
    for (auto m : (a + b).modes()) modes = std::max(modes, m + 1);
    seq.n_target_modes = modes;
    seq.gates.push_back(Gate::exp_poly(a, t, "zassenhaus"));
    seq.gates.push_back(Gate::exp_poly(b, t, "zassenhaus"));
    const NOPoly ab = commutator(a, b);
    if (ab.is_zero()) return seq;
    if (order >= 3) {
        // exp((t^2/2)[a,b]) = exp(i (t^2/2) (-i[a,b]))
        seq.gates.push_back(Gate::exp_poly(Complex{0.0, -1.0} * ab, t * t / 2.0, "zassenhaus"));
    }
    if (order >= 4) {
        NOPoly c = 2.0 * commutator(b, ab) + commutator(a, ab);
        seq.gates.push_back(Gate::exp_poly(std::move(c), -t * t * t / 6.0, "zassenhaus"));
    }
    return seq;
}

}  // namespace cvexact
