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

#include "cvexact/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cvexact {

namespace {

const Complex kMinusHalfI{0.0, -0.5};

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct SingleTerm {
    std::uint16_t x;
    std::uint16_t p;
    Complex c;
};

// (X^a P^b)(X^c P^d) = sum_k k! C(b,k) C(c,k) (-i/2)^k X^{a+c-k} P^{b+d-k}
std::vector<SingleTerm> mode_product(const ModePower &l, const ModePower &r) {
    std::vector<SingleTerm> out;
    int kmax = std::min<int>(l.p, r.x);
    Complex ck = 1.0;
    double fact = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            ck *= kMinusHalfI;
            fact *= k;
        }
        double w = fact * binom(l.p, k) * binom(r.x, k);
        out.push_back({static_cast<std::uint16_t>(l.x + r.x - k),
                       static_cast<std::uint16_t>(l.p + r.p - k), w * ck});
    }
    return out;
}

// Running sum per monomial plus the sum of |contribution|, so that exact
// cancellations can be told apart from genuinely small coefficients.
using Accumulator = std::map<Monomial, std::pair<Complex, double>>;

void accumulate(Accumulator &acc, Monomial m, Complex c) {
    auto &[sum, mass] = acc[std::move(m)];
    sum += c;
    mass += std::abs(c);
}

void multiply_monomials(const Monomial &a, const Monomial &b, Complex coeff, Accumulator &acc) {
    // Merge by mode; shared modes contribute a list of alternatives.
    std::vector<ModePower> fixed;
    std::vector<std::pair<std::uint32_t, std::vector<SingleTerm>>> branching;
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].mode < fb[j].mode)) {
            fixed.push_back(fa[i++]);
        } else if (i == fa.size() || fb[j].mode < fa[i].mode) {
            fixed.push_back(fb[j++]);
        } else {
            if (fa[i].p == 0 || fb[j].x == 0) {
                fixed.push_back({fa[i].mode, static_cast<std::uint16_t>(fa[i].x + fb[j].x),
                                 static_cast<std::uint16_t>(fa[i].p + fb[j].p)});
            } else {
                branching.emplace_back(fa[i].mode, mode_product(fa[i], fb[j]));
            }
            ++i;
            ++j;
        }
    }
    if (branching.empty()) {
        std::sort(fixed.begin(), fixed.end());
        accumulate(acc, Monomial(std::move(fixed)), coeff);
        return;
    }
    std::vector<std::size_t> idx(branching.size(), 0);
    while (true) {
        std::vector<ModePower> f = fixed;
        Complex c = coeff;
        for (std::size_t k = 0; k < branching.size(); ++k) {
            const auto &t = branching[k].second[idx[k]];
            c *= t.c;
            if (t.x || t.p) f.push_back({branching[k].first, t.x, t.p});
        }
        std::sort(f.begin(), f.end());
        accumulate(acc, Monomial(std::move(f)), c);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == branching[k].second.size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) break;
    }
}

}  // namespace

std::string to_string(const QuadLabel &q) {
    return (q.basis == Basis::Position ? "X" : "P") + std::to_string(q.mode);
}

Monomial::Monomial(std::initializer_list<ModePower> factors)
    : Monomial(std::vector<ModePower>(factors)) {}

Monomial::Monomial(std::vector<ModePower> factors) : factors_(std::move(factors)) {
    std::erase_if(factors_, [](const ModePower &f) { return f.x == 0 && f.p == 0; });
    std::sort(factors_.begin(), factors_.end());
    for (std::size_t i = 1; i < factors_.size(); ++i) {
        if (factors_[i].mode == factors_[i - 1].mode) {
            throw std::invalid_argument("Monomial: duplicate mode " +
                                        std::to_string(factors_[i].mode));
        }
    }
}

int Monomial::degree() const {
    int d = 0;
    for (const auto &f : factors_) d += f.x + f.p;
    return d;
}

ModePower Monomial::on_mode(std::uint32_t mode) const {
    for (const auto &f : factors_) {
        if (f.mode == mode) return f;
    }
    return {mode, 0, 0};
}

std::string to_string(const Monomial &m) {
    if (m.is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto &f : m.factors()) {
        auto put = [&](char q, int e) {
            if (e == 0) return;
            if (!first) os << ' ';
            first = false;
            os << q << '[' << f.mode << ']';
            if (e > 1) os << '^' << e;
        };
        put('X', f.x);
        put('P', f.p);
    }
    return os.str();
}

NOPoly::NOPoly(Complex constant) {
    if (constant != Complex{}) terms_[Monomial{}] = constant;
}

NOPoly NOPoly::X(std::uint32_t mode, int power) {
    return term(Monomial{{mode, static_cast<std::uint16_t>(power), 0}});
}

NOPoly NOPoly::P(std::uint32_t mode, int power) {
    return term(Monomial{{mode, 0, static_cast<std::uint16_t>(power)}});
}

NOPoly NOPoly::generator(QuadLabel q, int power) {
    return q.basis == Basis::Position ? X(q.mode, power) : P(q.mode, power);
}

NOPoly NOPoly::term(const Monomial &m, Complex c) {
    NOPoly p;
    p.add_term(m, c);
    return p;
}

int NOPoly::degree() const {
    int d = 0;
    for (const auto &[m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Complex NOPoly::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex{} : it->second;
}

double NOPoly::max_abs_coeff() const {
    double r = 0.0;
    for (const auto &[m, c] : terms_) r = std::max(r, std::abs(c));
    return r;
}

std::set<std::uint32_t> NOPoly::modes() const {
    std::set<std::uint32_t> out;
    for (const auto &[m, c] : terms_) {
        for (const auto &f : m.factors()) out.insert(f.mode);
    }
    return out;
}

bool NOPoly::single_term(Monomial *mono, Complex *coeff) const {
    if (terms_.size() != 1) return false;
    if (mono) *mono = terms_.begin()->first;
    if (coeff) *coeff = terms_.begin()->second;
    return true;
}

bool NOPoly::cancelled(Complex sum, double mass) {
    return std::abs(sum) <= kDefaultPrune * mass;
}

void NOPoly::add_term(const Monomial &m, Complex c) {
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    const double mass = std::abs(it->second) + std::abs(c);
    it->second += c;
    if (cancelled(it->second, mass)) terms_.erase(it);
}

NOPoly &NOPoly::prune(double threshold) {
    std::erase_if(terms_, [threshold](const auto &kv) { return std::abs(kv.second) < threshold; });
    return *this;
}

NOPoly &NOPoly::operator+=(const NOPoly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

NOPoly &NOPoly::operator-=(const NOPoly &o) {
    for (const auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
}

NOPoly &NOPoly::operator*=(Complex s) {
    if (s == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, c] : terms_) c *= s;
    return *this;
}

NOPoly operator*(const NOPoly &a, const NOPoly &b) { return poly_mul(a, b); }

NOPoly poly_mul(const NOPoly &a, const NOPoly &b) {
    Accumulator acc;
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) multiply_monomials(ma, mb, ca * cb, acc);
    }
    NOPoly out;
    for (const auto &[m, sc] : acc) {
        if (!NOPoly::cancelled(sc.first, sc.second)) out.add_term(m, sc.first);
    }
    return out;
}

NOPoly commutator(const NOPoly &a, const NOPoly &b) { return poly_mul(a, b) - poly_mul(b, a); }

NOPoly power(const NOPoly &a, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    NOPoly result(1.0);
    NOPoly base = a;
    while (k > 0) {
        if (k & 1) result = poly_mul(result, base);
        k >>= 1;
        if (k) base = poly_mul(base, base);
    }
    return result;
}

NOPoly NOPoly::adjoint() const {
    NOPoly out;
    for (const auto &[m, c] : terms_) {
        NOPoly prod(std::conj(c));
        for (const auto &f : m.factors()) {
            prod = poly_mul(prod, poly_mul(P(f.mode, f.p), X(f.mode, f.x)));
        }
        out += prod;
    }
    return out;
}

double max_coeff_diff(const NOPoly &a, const NOPoly &b) {
    double r = 0.0;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            r = std::max(r, std::abs(ia->second));
            ++ia;
        } else if (ia == a.terms().end() || ib->first < ia->first) {
            r = std::max(r, std::abs(ib->second));
            ++ib;
        } else {
            r = std::max(r, std::abs(ia->second - ib->second));
            ++ia;
            ++ib;
        }
    }
    return r;
}

NOPoly substitute(const NOPoly &p, const GeneratorMap &images) {
    std::map<std::pair<QuadLabel, int>, NOPoly> cache;
    auto image_power = [&](QuadLabel q, int e) -> const NOPoly & {
        auto key = std::make_pair(q, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto img = images.find(q);
        NOPoly value = img == images.end() ? NOPoly::generator(q, e) : power(img->second, e);
        return cache.emplace(key, std::move(value)).first->second;
    };
    NOPoly out;
    for (const auto &[m, c] : p.terms()) {
        NOPoly prod(c);
        for (const auto &f : m.factors()) {
            if (f.x) prod = poly_mul(prod, image_power({f.mode, Basis::Position}, f.x));
            if (f.p) prod = poly_mul(prod, image_power({f.mode, Basis::Momentum}, f.p));
        }
        out += prod;
    }
    return out;
}

NOPoly annihilation(std::uint32_t mode) {
    return NOPoly::X(mode) + Complex{0.0, 1.0} * NOPoly::P(mode);
}

NOPoly creation(std::uint32_t mode) {
    return NOPoly::X(mode) - Complex{0.0, 1.0} * NOPoly::P(mode);
}

std::string to_string(const NOPoly &p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.real();
        if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
        os << ')';
        if (!m.is_identity()) os << ' ' << to_string(m);
    }
    return os.str();
}

}  // namespace cvexact
