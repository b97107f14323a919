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

#include "cvexact/decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "cvexact/errors.hpp"

namespace cvexact {

namespace {

struct FactorInfo {
    std::uint32_t mode;
    int power;
    Basis basis;
};

std::vector<FactorInfo> factors_of(const Monomial &m) {
    std::vector<FactorInfo> out;
    for (const auto &f : m.factors()) {
        if (f.x && f.p) {
            throw Ineligible("mode " + std::to_string(f.mode) +
                             " carries both position and momentum factors; mixed X/P products "
                             "are not covered by the exact method");
        }
        out.push_back({f.mode, f.x ? f.x : f.p, f.x ? Basis::Position : Basis::Momentum});
    }
    return out;
}

bool divisible_by_2_or_3(int n) { return n % 2 == 0 || n % 3 == 0; }

EligibilityVerdict eligible(RouteKind r, std::string label = {}) {
    return {true, r, std::move(label), {}};
}

EligibilityVerdict rejected(std::string reason) {
    return {false, RouteKind::UniversalPrimitive, {}, std::move(reason)};
}

EligibilityVerdict classify(const std::vector<FactorInfo> &f) {
    if (f.empty()) return eligible(RouteKind::UniversalPrimitive, "identity");
    if (f.size() == 1) {
        const int n = f[0].power;
        if (n <= 3) return eligible(RouteKind::UniversalPrimitive, "x" + std::to_string(n));
        if (n % 2 == 0) return eligible(RouteKind::SingleEven, "single-even");
        if (n % 3 == 0) return eligible(RouteKind::SingleOdd3, "single-odd3");
        return rejected("single-mode power " + std::to_string(n) +
                        " is not divisible by 2 or 3 (divisibility restriction)");
    }
    std::vector<int> powers;
    for (const auto &x : f) powers.push_back(x.power);
    std::sort(powers.begin(), powers.end());
    if (f.size() == 2) {
        if (powers[0] == 1 && powers[1] == 1) return eligible(RouteKind::UniversalPrimitive, "xx");
        if (powers[0] == 1 && powers[1] == 2) return eligible(RouteKind::SpecialIdentity, "px2");
        if (powers[0] == 1) return eligible(RouteKind::SpecialIdentity, "pxn");
        if (powers[0] == 2 && powers[1] == 2) {
            return eligible(RouteKind::SpecialIdentity, "twosquares");
        }
    }
    if (f.size() == 3 && powers == std::vector<int>{1, 1, 2}) {
        return eligible(RouteKind::SpecialIdentity, "ppxn");
    }
    const int N = static_cast<int>(f.size());
    const auto non_unit = std::count_if(powers.begin(), powers.end(), [](int p) { return p != 1; });
    if (non_unit > 1) {
        return rejected("single-exponent restriction: at most one mode may carry an exponent other than 1 (found " +
                        std::to_string(non_unit) + ") and no dedicated identity applies");
    }
    if (!divisible_by_2_or_3(N)) {
        return rejected("divisibility restriction: number of factors N=" + std::to_string(N) +
                        " must be divisible by 2 or 3");
    }
    for (int p : powers) {
        if (!divisible_by_2_or_3(N * p)) {
            return rejected("divisibility restriction: N*n=" + std::to_string(N * p) +
                            " must be divisible by 2 or 3");
        }
    }
    return eligible(RouteKind::GeneralMultiMode, "linear-combination");
}

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Monomial x_power(std::uint32_t mode, int n) {
    return Monomial{{mode, static_cast<std::uint16_t>(n), 0}};
}

Monomial make_mono(std::initializer_list<std::tuple<std::uint32_t, int, Basis>> parts) {
    std::vector<ModePower> f;
    for (auto [m, n, b] : parts) {
        if (n == 0) continue;
        auto e = static_cast<std::uint16_t>(n);
        f.push_back(b == Basis::Position ? ModePower{m, e, 0} : ModePower{m, 0, e});
    }
    return Monomial(std::move(f));
}

constexpr Basis kX = Basis::Position;
constexpr Basis kP = Basis::Momentum;

// Lowers kernels to universal gates, allocating ancillas as identities need them.
class Lowering {
   public:
    Lowering(std::uint32_t first_free_mode, const CompileOptions &opts)
        : next_mode_(first_free_mode), opts_(opts) {}

    void lower(const Kernel &k, int depth, std::vector<Gate> &out) {
        if (children_ && depth > 0) {
            children_->push_back(k);
            out.push_back(kernel_gate(k));
            return;
        }
        std::visit([&](const auto &kk) { lower_impl(kk, depth, out); }, k);
    }

    /// Stops after the first identity application, collecting its kernels.
    void stop_after_one_level(std::vector<Kernel> *children) { children_ = children; }

    const std::vector<std::uint32_t> &ancillas() const { return ancillas_; }
    const std::vector<TraceEntry> &trace() const { return trace_; }
    int max_depth() const { return max_depth_; }

   private:
    std::uint32_t fresh() {
        ancillas_.push_back(next_mode_);
        return next_mode_++;
    }

    void note(const std::string &label, int depth) {
        trace_.push_back({label, depth});
        max_depth_ = std::max(max_depth_, depth);
    }

    Gate prim(UniversalKind kind, std::uint32_t a, std::uint32_t b, double s,
              const std::string &label) {
        auto key = std::make_tuple(static_cast<int>(kind), a, b);
        auto it = interned_.find(key);
        if (it == interned_.end()) {
            auto g = Gate::universal(kind, a, b, 1.0);
            it = interned_.emplace(key, g.generator_ptr()).first;
        }
        return Gate::exp_poly(it->second, s, label);
    }

    void run_identity(const std::string &label, const std::vector<Kernel> &ks, int depth,
                      std::vector<Gate> &out) {
        note(label, depth);
        for (const auto &k : ks) lower(k, depth + 1, out);
    }

    // Appends the reversed inverse of whatever `body` emits.
    template <class Body>
    void inverted(Body body, std::vector<Gate> &out) {
        std::vector<Gate> tmp;
        body(tmp);
        for (auto it = tmp.rbegin(); it != tmp.rend(); ++it) out.push_back(it->inverse());
    }

    // Emits F^p on each listed mode, the body, then the matching inverses.
    template <class Body>
    void fourier_wrapped(const std::vector<std::pair<std::uint32_t, int>> &wraps, Body body,
                         std::vector<Gate> &out) {
        for (auto [m, p] : wraps) out.push_back(Gate::fourier(m, p, "fourier-wrap"));
        body(out);
        for (auto it = wraps.rbegin(); it != wraps.rend(); ++it) {
            out.push_back(Gate::fourier(it->first, -it->second, "fourier-wrap"));
        }
    }

    void lower_impl(const FourierKernel &k, int, std::vector<Gate> &out) {
        out.push_back(Gate::fourier(k.mode, k.power, "fourier"));
    }

    void lower_impl(const PolyPowKernel &k, int depth, std::vector<Gate> &out) {
        if (std::abs(k.strength) < kZeroStrength) return;
        if (k.summands.size() == 1) {
            auto [m, n] = k.summands[0];
            lower(MonoKernel{x_power(m, n * k.power), k.strength}, depth, out);
            return;
        }
        run_identity("arbpoly", identity_poly_power(k.summands, k.power, k.strength), depth, out);
    }

    void lower_impl(const MonoKernel &k, int depth, std::vector<Gate> &out) {
        if (std::abs(k.strength) < kZeroStrength) return;
        auto f = factors_of(k.mono);
        if (f.empty()) return;  // global phase
        EligibilityVerdict v = classify(f);
        if (!v.eligible) throw Ineligible(to_string(k.mono) + ": " + v.reason);
        const double s = k.strength;

        // P^n = F X^n F^dagger; X = F^dagger P F.
        std::vector<std::pair<std::uint32_t, int>> to_x;
        for (const auto &x : f) {
            if (x.basis == kP) to_x.emplace_back(x.mode, 1);
        }

        switch (v.route) {
            case RouteKind::UniversalPrimitive: {
                fourier_wrapped(to_x, [&](std::vector<Gate> &o) {
                    if (f.size() == 1) {
                        auto kind = static_cast<UniversalKind>(f[0].power - 1);
                        o.push_back(prim(kind, f[0].mode, f[0].mode, s, "primitive"));
                    } else {
                        o.push_back(prim(UniversalKind::XX, f[0].mode, f[1].mode, s, "primitive"));
                    }
                }, out);
                return;
            }
            case RouteKind::SingleEven: {
                fourier_wrapped(to_x, [&](std::vector<Gate> &o) {
                    const std::uint32_t anc = fresh();
                    run_identity("single-even",
                                 identity_single_even(f[0].mode, anc, f[0].power, s, opts_.even_shift), depth, o);
                }, out);
                return;
            }
            case RouteKind::SingleOdd3: {
                fourier_wrapped(to_x, [&](std::vector<Gate> &o) {
                    const std::uint32_t a1 = fresh();
                    const std::uint32_t a2 = fresh();
                    run_identity("single-odd3",
                                 identity_single_odd3(f[0].mode, a1, a2, f[0].power, s), depth, o);
                }, out);
                return;
            }
            case RouteKind::GeneralMultiMode: {
                fourier_wrapped(to_x, [&](std::vector<Gate> &o) {
                    TargetGate t;
                    for (const auto &x : f) t.exponents[x.mode] = {x.power, kX};
                    t.strength = s;
                    std::vector<Kernel> ks;
                    for (const auto &term : expand_general_d(t)) {
                        double c = boost::rational_cast<double>(term.coefficient);
                        ks.push_back(PolyPowKernel{term.summands, static_cast<int>(f.size()), c * s});
                    }
                    run_identity("linear-combination", ks, depth, o);
                }, out);
                return;
            }
            case RouteKind::SpecialIdentity:
                break;
        }

        if (v.label == "twosquares") {
            fourier_wrapped(to_x, [&](std::vector<Gate> &o) {
                run_identity("twosquares", identity_x2x2(f[0].mode, f[1].mode, s), depth, o);
            }, out);
            return;
        }

        // Remaining identities want unit factors in momentum and the power
        // factor in position.
        std::vector<std::pair<std::uint32_t, int>> wraps;
        std::vector<std::uint32_t> units;
        FactorInfo pow_factor{};
        for (const auto &x : f) {
            if (x.power == 1) {
                units.push_back(x.mode);
                if (x.basis == kX) wraps.emplace_back(x.mode, -1);
            } else {
                pow_factor = x;
                if (x.basis == kP) wraps.emplace_back(x.mode, 1);
            }
        }
        auto body = [&](std::vector<Gate> &o) {
            const double mag = std::abs(s);
            auto positive = [&](std::vector<Gate> &oo) {
                if (v.label == "px2") {
                    const double t = opts_.param_split;
                    const double alpha = std::sqrt(mag / (3.0 * t));
                    run_identity("px2", identity_px2(pow_factor.mode, units[0], alpha, t), depth, oo);
                } else if (v.label == "pxn") {
                    run_identity("pxn",
                                 identity_px_n(pow_factor.mode, units[0], pow_factor.power,
                                               std::sqrt(mag / 2.0)),
                                 depth, oo);
                } else {
                    run_identity("ppxn",
                                 identity_pp_xn(pow_factor.mode, units[0], units[1],
                                                pow_factor.power, std::sqrt(mag / 2.0)),
                                 depth, oo);
                }
            };
            if (s > 0) {
                positive(o);
            } else {
                inverted(positive, o);
            }
        };
        fourier_wrapped(wraps, body, out);
    }

    std::uint32_t next_mode_;
    CompileOptions opts_;
    std::vector<Kernel> *children_ = nullptr;
    std::vector<std::uint32_t> ancillas_;
    std::vector<TraceEntry> trace_;
    int max_depth_ = 0;
    std::map<std::tuple<int, std::uint32_t, std::uint32_t>, std::shared_ptr<const NOPoly>> interned_;
};

std::uint32_t first_free(std::initializer_list<std::uint32_t> modes) {
    std::uint32_t m = 0;
    for (auto x : modes) m = std::max(m, x + 1);
    return m;
}

GateSeq run_lowering(const Kernel &k, std::uint32_t n_modes, const CompileOptions &opts,
                     Lowering *keep = nullptr) {
    Lowering low(n_modes, opts);
    GateSeq seq;
    seq.n_target_modes = n_modes;
    low.lower(k, 0, seq.gates);
    seq.ancilla_modes = low.ancillas();
    if (keep) *keep = low;
    return opts.run_optimizer ? optimize(seq) : seq;
}

}  // namespace

std::string route_name(const EligibilityVerdict &v) {
    switch (v.route) {
        case RouteKind::UniversalPrimitive: return "UniversalPrimitive";
        case RouteKind::SingleEven: return "SingleEven";
        case RouteKind::SingleOdd3: return "SingleOdd3";
        case RouteKind::GeneralMultiMode: return "GeneralMultiMode";
        case RouteKind::SpecialIdentity: return "SpecialIdentity(" + v.label + ")";
    }
    return "?";
}

EligibilityVerdict check_eligibility(const TargetGate &target) {
    for (const auto &[m, f] : target.exponents) {
        if (f.power < 1) return rejected("exponents must be positive integers");
    }
    return classify(factors_of(target.hamiltonian().terms().begin()->first));
}

std::vector<std::vector<Rational>> pascal_matrix(int N) {
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(N - 1),
                                         std::vector<Rational>(static_cast<std::size_t>(N)));
    for (int r = 1; r <= N - 1; ++r) {
        for (int i = 0; i < N; ++i) a[r - 1][i] = Rational(binomial(r, i));
    }
    return a;
}

CoeffSolution solve_pascal_coeffs(int N) {
    if (N < 2) throw std::invalid_argument("solve_pascal_coeffs: N must be >= 2");
    if (N > 20) throw std::invalid_argument("solve_pascal_coeffs: N! overflows 64-bit rationals");
    CoeffSolution sol;
    sol.N = N;
    sol.coeffs.resize(static_cast<std::size_t>(N));
    const Rational cN(1, factorial(N));
    for (int k = 0; k < N; ++k) sol.coeffs[static_cast<std::size_t>(N - k - 1)] = (k % 2 ? -cN : cN);
    // A applied to (c_N, ..., c_1).
    for (const auto &row : pascal_matrix(N)) {
        Rational acc = 0;
        for (int i = 0; i < N; ++i) acc += row[i] * sol.c(N - i);
        if (acc != Rational(0)) throw std::logic_error("Pascal solution check failed");
    }
    return sol;
}

std::vector<PolyTerm> expand_general_d(const TargetGate &target) {
    std::vector<std::pair<std::uint32_t, int>> items;
    for (const auto &[m, f] : target.exponents) items.emplace_back(m, f.power);
    const int N = static_cast<int>(items.size());
    if (N < 2) throw std::invalid_argument("expand_general_d: needs at least two modes");
    const CoeffSolution sol = solve_pascal_coeffs(N);
    std::vector<PolyTerm> out;
    for (int k = N; k >= 1; --k) {
        // k-subsets of {0..N-1}, lexicographic.
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            PolyTerm term{sol.c(k), {}};
            for (int i : idx) term.summands.push_back(items[static_cast<std::size_t>(i)]);
            out.push_back(std::move(term));
            int i = k - 1;
            while (i >= 0 && idx[i] == N - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

Gate kernel_gate(const Kernel &k, const std::string &provenance) {
    struct Visitor {
        const std::string &prov;
        Gate operator()(const MonoKernel &m) const {
            return Gate::exp_poly(NOPoly::term(m.mono), m.strength, prov);
        }
        Gate operator()(const PolyPowKernel &p) const {
            NOPoly sum;
            for (auto [mode, n] : p.summands) sum += NOPoly::X(mode, n);
            return Gate::exp_poly(power(sum, p.power), p.strength, prov);
        }
        Gate operator()(const FourierKernel &f) const { return Gate::fourier(f.mode, f.power, prov); }
    };
    return std::visit(Visitor{provenance}, k);
}

GateSeq kernels_to_seq(const std::vector<Kernel> &ks, std::uint32_t n_modes,
                       const std::string &provenance) {
    GateSeq seq;
    seq.n_target_modes = n_modes;
    for (const auto &k : ks) seq.gates.push_back(kernel_gate(k, provenance));
    return seq;
}

std::vector<Kernel> identity_px2(std::uint32_t j, std::uint32_t k, double alpha, double t) {
    const Monomial xx = make_mono({{j, 1, kX}, {k, 1, kX}});
    const Monomial p3 = make_mono({{k, 3, kP}});
    return {
        MonoKernel{xx, 2 * alpha}, MonoKernel{p3, t},   MonoKernel{xx, -alpha},
        MonoKernel{p3, -t},        MonoKernel{xx, -2 * alpha}, MonoKernel{p3, t},
        MonoKernel{xx, alpha},     MonoKernel{p3, -t},
        MonoKernel{x_power(j, 3), 0.75 * alpha * alpha * alpha * t},
    };
}

std::vector<Kernel> identity_px_n(std::uint32_t j, std::uint32_t k, int N, double alpha) {
    if (N < 2) throw std::invalid_argument("identity_px_n: N must be >= 2");
    const Monomial couple = make_mono({{j, N - 2, kX}, {k, 1, kX}});
    const Monomial squeeze = make_mono({{j, 2, kX}, {k, 2, kP}});
    return {
        MonoKernel{couple, 2 * alpha},
        MonoKernel{squeeze, -alpha},
        MonoKernel{couple, -2 * alpha},
        MonoKernel{squeeze, alpha},
        MonoKernel{x_power(j, 2 * (N - 1)), alpha * alpha * alpha},
    };
}

std::vector<Kernel> identity_pp_xn(std::uint32_t j, std::uint32_t k, std::uint32_t l, int n,
                                   double alpha) {
    if (n < 2) throw std::invalid_argument("identity_pp_xn: n must be >= 2");
    const Monomial couple = make_mono({{j, n - 2, kX}, {k, 1, kX}, {l, 1, kP}});
    const Monomial squeeze = make_mono({{j, 2, kX}, {k, 2, kP}});
    return {
        MonoKernel{couple, 2 * alpha},
        MonoKernel{squeeze, -alpha},
        MonoKernel{couple, -2 * alpha},
        MonoKernel{squeeze, alpha},
        MonoKernel{make_mono({{j, 2 * (n - 1), kX}, {l, 2, kP}}), alpha * alpha * alpha},
    };
}

std::vector<Kernel> identity_x2x2(std::uint32_t j, std::uint32_t k, double t) {
    const Monomial shift = make_mono({{j, 1, kP}, {k, 1, kX}});
    return {
        MonoKernel{shift, 2.0},
        MonoKernel{x_power(j, 4), t / 12},
        MonoKernel{shift, -4.0},
        MonoKernel{x_power(j, 4), t / 12},
        MonoKernel{shift, 2.0},
        MonoKernel{x_power(j, 4), -t / 6},
        MonoKernel{x_power(k, 4), -t / 6},
    };
}

std::vector<Kernel> identity_single_even(std::uint32_t k, std::uint32_t j, int N, double t,
                                         double shift) {
    if (N < 2 || N % 2) throw std::invalid_argument("identity_single_even: N must be even");
    if (shift == 0.0) throw std::invalid_argument("identity_single_even: shift must be nonzero");
    const int h = N / 2;
    // exp(i c P_j Y) X_j exp(-i c P_j Y) = X_j + (c/2) Y, so the squeezer on j
    // needs strength 4t/c^2 to leave t Y^2 behind.
    const double tq = 4.0 * t / (shift * shift);
    const Monomial conj = make_mono({{j, 1, kP}, {k, h, kX}});
    return {
        MonoKernel{conj, shift},
        MonoKernel{x_power(j, 2), tq},
        MonoKernel{conj, -shift},
        MonoKernel{x_power(j, 2), -tq},
        MonoKernel{make_mono({{j, 1, kX}, {k, h, kX}}), -tq * shift},
    };
}

std::vector<Kernel> identity_single_odd3(std::uint32_t k, std::uint32_t j, std::uint32_t l, int N,
                                         double t) {
    if (N < 3 || N % 2 == 0 || N % 3) {
        throw std::invalid_argument("identity_single_odd3: N must be an odd multiple of 3");
    }
    const double a = t / 2;
    const int third = N / 3;
    return {
        PolyPowKernel{{{j, 1}, {k, third}}, 3, 2 * a},
        PolyPowKernel{{{l, 1}, {j, 2}, {k, third}}, 2, -3 * a},
        MonoKernel{x_power(j, 3), -2 * a},
        MonoKernel{x_power(j, 4), 3 * a},
        MonoKernel{x_power(k, 2 * third), 3 * a},
        MonoKernel{make_mono({{j, 1, kX}, {k, 2 * third, kX}}), -6 * a},
        MonoKernel{make_mono({{j, 2, kX}, {l, 1, kX}}), 6 * a},
        MonoKernel{make_mono({{k, third, kX}, {l, 1, kX}}), 6 * a},
        MonoKernel{x_power(l, 2), 3 * a},
    };
}

std::vector<Kernel> identity_poly_power(const Summands &summands, int N, double t) {
    auto central = std::find_if(summands.begin(), summands.end(),
                                [](const auto &s) { return s.second == 1; });
    if (central == summands.end()) {
        throw NoUnitCentralMode("polynomial power needs a summand with exponent one");
    }
    const std::uint32_t c = central->first;
    std::vector<std::pair<std::uint32_t, int>> others;
    for (auto it = summands.begin(); it != summands.end(); ++it) {
        if (it != central) others.push_back(*it);
    }
    std::vector<Kernel> out;
    for (auto it = others.rbegin(); it != others.rend(); ++it) {
        out.push_back(MonoKernel{make_mono({{c, 1, kP}, {it->first, it->second, kX}}), 2.0});
    }
    out.push_back(MonoKernel{x_power(c, N), t});
    for (const auto &o : others) {
        out.push_back(MonoKernel{make_mono({{c, 1, kP}, {o.first, o.second, kX}}), -2.0});
    }
    return out;
}

GateSeq decompose_poly_power(const Summands &summands, int N, double t, const CompileOptions &opts) {
    std::uint32_t n = 0;
    for (auto [m, p] : summands) n = std::max(n, m + 1);
    // Surface NoUnitCentralMode before any lowering.
    (void)identity_poly_power(summands, N, t);
    return run_lowering(PolyPowKernel{summands, N, t}, n, opts);
}

GateSeq decompose_px2(std::uint32_t j, std::uint32_t k, double s, const CompileOptions &opts) {
    return run_lowering(MonoKernel{make_mono({{k, 1, kP}, {j, 2, kX}}), s}, first_free({j, k}), opts);
}

GateSeq decompose_px_n(std::uint32_t j, std::uint32_t k, int N, double s, const CompileOptions &opts) {
    if (N < 2) throw std::invalid_argument("decompose_px_n: N must be >= 2");
    return run_lowering(MonoKernel{make_mono({{k, 1, kP}, {j, N, kX}}), s}, first_free({j, k}), opts);
}

GateSeq decompose_pp_xn(std::uint32_t j, std::uint32_t k, std::uint32_t l, int n, double s,
                        const CompileOptions &opts) {
    if (n < 2) throw std::invalid_argument("decompose_pp_xn: n must be >= 2");
    return run_lowering(MonoKernel{make_mono({{k, 1, kP}, {l, 1, kP}, {j, n, kX}}), s},
                        first_free({j, k, l}), opts);
}

GateSeq decompose_x2x2(std::uint32_t j, std::uint32_t k, double t, const CompileOptions &opts) {
    return run_lowering(MonoKernel{make_mono({{j, 2, kX}, {k, 2, kX}}), t}, first_free({j, k}), opts);
}

GateSeq decompose_single_even(std::uint32_t k, int N, double t, const CompileOptions &opts) {
    if (N < 4 || N % 2) throw std::invalid_argument("decompose_single_even: N must be even and >= 4");
    return run_lowering(MonoKernel{x_power(k, N), t}, k + 1, opts);
}

GateSeq decompose_single_odd3(std::uint32_t k, int N, double t, const CompileOptions &opts) {
    if (N < 9 || N % 2 == 0 || N % 3) {
        throw std::invalid_argument("decompose_single_odd3: N must be an odd multiple of 3, >= 9");
    }
    return run_lowering(MonoKernel{x_power(k, N), t}, k + 1, opts);
}

std::uint32_t kernel_mode_bound(const Kernel &k) {
    std::uint32_t bound = 0;
    for (auto m : kernel_gate(k).modes()) bound = std::max(bound, m + 1);
    return bound;
}

Expansion expand_once(const Kernel &k, const CompileOptions &opts) {
    Expansion e;
    Lowering low(kernel_mode_bound(k), opts);
    low.stop_after_one_level(&e.kernels);
    low.lower(k, 0, e.seq.gates);
    e.seq.n_target_modes = kernel_mode_bound(k);
    e.seq.ancilla_modes = low.ancillas();
    return e;
}

Compiled compile(const TargetGate &target, const CompileOptions &opts) {
    const EligibilityVerdict v = check_eligibility(target);
    if (!v.eligible) throw Ineligible(v.reason);
    Lowering low(target.n_modes(), opts);
    GateSeq seq;
    seq.n_target_modes = target.n_modes();
    low.lower(MonoKernel{target.hamiltonian().terms().begin()->first, target.strength}, 0, seq.gates);
    seq.ancilla_modes = low.ancillas();

    Compiled out;
    out.report.route = route_name(v);
    out.report.recursion_trace = low.trace();
    out.report.max_depth = low.max_depth();
    out.report.n_gates_preopt = count_gates(seq, true);
    out.seq = opts.run_optimizer ? optimize(seq) : std::move(seq);
    out.report.n_gates_total = count_gates(out.seq, false);
    out.report.n_gates_nonfourier = count_gates(out.seq, true);
    out.report.n_ancillas = out.seq.ancilla_modes.size();
    return out;
}

}  // namespace cvexact
