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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cvexact/baseline.hpp"
#include "cvexact/circuit_tools.hpp"
#include "cvexact/decomposer.hpp"
#include "cvexact/dsl.hpp"
#include "cvexact/verifier.hpp"
#include "test_util.hpp"

namespace cvexact {
namespace {

using testing::E;
using testing::P;
using testing::seq_of;
using testing::X;
using testing::xs;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << " [fail: " << what << "]";
        }
    }
};

// Runs `body`, then checks its wall time against `limit` seconds.
bool criterion(int id, const char *name, double limit, const std::function<void(Outcome &)> &body) {
    Outcome o;
    const auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception &e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    o.require(t < limit, "runtime " + std::to_string(t) + " s over " + std::to_string(limit) + " s");
    std::printf("criterion %d %-28s %s  (%.2f s)%s\n", id, name, o.pass ? "PASS" : "FAIL", t, o.detail.str().c_str());
    std::fflush(stdout);
    return o.pass;
}

std::size_t nonfourier(const TargetGate &t) { return count_gates(compile(t).seq, true); }

void exact_counts(Outcome &o) {
    const std::vector<std::pair<TargetGate, std::size_t>> cases = {
        {xs({{0, 1}, {1, 1}, {2, 1}}, 1.0), 17},
        {xs({{0, 4}}, 1.0), 29},
        {xs({{0, 2}, {1, 2}}, 1.0), 119},
    };
    for (const auto &[t, want] : cases) {
        const auto start = Clock::now();
        const std::size_t n = nonfourier(t);
        const double dt = seconds_since(start);
        o.detail << " " << t.describe() << "=" << n;
        o.require(n == want, t.describe() + " expected " + std::to_string(want));
        o.require(dt < 1.0, t.describe() + " slower than 1 s");
    }
}

void reported_counts(Outcome &o) {
    const std::vector<std::pair<TargetGate, double>> cases = {
        {xs({{0, 1}, {1, 3}}, 1.0), 125},
        {xs({{0, 2}, {1, 1}, {2, 1}}, 1.0), 281},
        {xs({{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 1.0), 440},
    };
    for (const auto &[t, reference] : cases) {
        const auto start = Clock::now();
        const double n = static_cast<double>(nonfourier(t));
        const double dt = seconds_since(start);
        o.detail << " " << t.describe() << "=" << n << " (reference " << reference << ")";
        o.require(n <= 4 * reference && n >= reference / 4, t.describe() + " outside 4x of reference");
        o.require(dt < 5.0, t.describe() + " slower than 5 s");
    }
}

void identity_suite(Outcome &o) {
    using testing::kernels_of;
    double worst = 0.0;
    int checked = 0;
    auto check = [&](const GateSeq &rhs, const Gate &lhs, const std::string &label) {
        const double r = verify_identity(rhs, lhs);
        worst = std::max(worst, r);
        ++checked;
        o.require(r < 1e-9, label + " residual " + std::to_string(r));
    };
    const std::uint32_t j = 0, k = 1, l = 2;

    // Literal right-hand sides.
    {
        const double a = 1, t = 1;
        check(seq_of({E(X(j) * X(k), 2 * a), E(P(k, 3), t), E(X(j) * X(k), -a), E(P(k, 3), -t),
                      E(X(j) * X(k), -2 * a), E(P(k, 3), t), E(X(j) * X(k), a), E(P(k, 3), -t),
                      E(X(j, 3), a * a * a * t * 0.75)}),
              E(P(k) * X(j, 2), 3 * a * a * t), "px2");
    }
    for (int N = 2; N <= 5; ++N) {
        const double a = 0.7;
        check(seq_of({E(X(j, N - 2) * X(k), 2 * a), E(X(j, 2) * P(k, 2), -a), E(X(j, N - 2) * X(k), -2 * a),
                      E(X(j, 2) * P(k, 2), a), E(X(j, 2 * (N - 1)), a * a * a)}),
              E(P(k) * X(j, N), 2 * a * a), "pxn N=" + std::to_string(N));
    }
    for (int n = 2; n <= 3; ++n) {
        const double a = 0.7;
        check(seq_of({E(X(j, n - 2) * X(k) * P(l), 2 * a), E(X(j, 2) * P(k, 2), -a),
                      E(X(j, n - 2) * X(k) * P(l), -2 * a), E(X(j, 2) * P(k, 2), a),
                      E(X(j, 2 * (n - 1)) * P(l, 2), a * a * a)}),
              E(P(k) * P(l) * X(j, n), 2 * a * a), "ppxn n=" + std::to_string(n));
    }
    {
        const double a = 0.3;
        check(seq_of({E(P(j) * X(k), 2), E(X(j, 4), a / 12), E(P(j) * X(k), -4), E(X(j, 4), a / 12),
                      E(P(j) * X(k), 2), E(X(j, 4), -a / 6), E(X(k, 4), -a / 6)}),
              E(X(j, 2) * X(k, 2), a), "two squares");
    }
    for (int N : {4, 6, 8}) {
        // Mode k = 0 is the target, j = 1 the ancilla.
        const double a = 0.3;
        const int h = N / 2;
        check(seq_of({E(P(1) * X(0, h), 2), E(X(1, 2), a), E(P(1) * X(0, h), -2), E(X(1, 2), -a),
                      E(X(1) * X(0, h), -2 * a)}),
              E(X(0, N), a), "single even N=" + std::to_string(N));
    }
    {
        // Target mode 0, ancillas 1 and 2.
        const double a = 0.3;
        check(seq_of({E(power(X(1) + X(0, 3), 3), 2 * a), E(power(X(2) + X(1, 2) + X(0, 3), 2), -3 * a),
                      E(X(1, 3), -2 * a), E(X(1, 4), 3 * a), E(X(0, 6), 3 * a), E(X(1) * X(0, 6), -6 * a),
                      E(X(1, 2) * X(2), 6 * a), E(X(0, 3) * X(2), 6 * a), E(X(2, 2), 3 * a)}),
              E(X(0, 9), 2 * a), "single odd N=9");
    }
    {
        // Three-mode product as a combination of cubes, and the sandwiches producing those cubes.
        const double t = 0.8, a = 0.3;
        check(seq_of({E(power(X(j) + X(k) + X(l), 3), t / 6), E(power(X(j) + X(k), 3), -t / 6),
                      E(power(X(j) + X(l), 3), -t / 6), E(power(X(k) + X(l), 3), -t / 6), E(X(j, 3), t / 6),
                      E(X(k, 3), t / 6), E(X(l, 3), t / 6)}),
              E(X(j) * X(k) * X(l), t), "three-mode combination");
        check(seq_of({E(P(j) * X(k), 2), E(X(j, 3), a), E(P(j) * X(k), -2)}), E(power(X(j) + X(k), 3), a),
              "pair cube sandwich");
        check(seq_of({E(P(j) * X(l), 2), E(power(X(j) + X(k), 3), a), E(P(j) * X(l), -2)}),
              E(power(X(j) + X(k) + X(l), 3), a), "triple cube sandwich");
        check(seq_of({E(P(k) * X(j, 2), 2), E(X(k, 2), a), E(P(k) * X(j, 2), -2)}),
              E(power(X(j, 2) + X(k), 2), a), "square sandwich");
        check(seq_of({E(P(j) * X(k, 3), 2), E(X(j, 3), a), E(P(j) * X(k, 3), -2)}),
              E(power(X(j) + X(k, 3), 3), a), "cubed-conjugator sandwich");
        check(seq_of({E(P(l) * X(k, 3), 2), E(P(l) * X(j, 2), 2), E(X(l, 2), -3 * a), E(P(l) * X(j, 2), -2),
                      E(P(l) * X(k, 3), -2)}),
              E(power(X(l) + X(j, 2) + X(k, 3), 2), -3 * a), "nested square sandwich");
    }

    // The library's builders and full lowerings of the same identities.
    check(kernels_of(identity_px2(0, 1, 0.5, 0.4), 2), E(P(1) * X(0, 2), 0.3), "builder px2");
    for (int N = 2; N <= 5; ++N) {
        check(kernels_of(identity_px_n(0, 1, N, 0.6), 2), E(P(1) * X(0, N), 0.72), "builder pxn");
        check(decompose_px_n(0, 1, N, 0.72), E(P(1) * X(0, N), 0.72), "lowered pxn");
    }
    for (int n = 2; n <= 3; ++n) {
        check(kernels_of(identity_pp_xn(0, 1, 2, n, 0.6), 3), E(P(1) * P(2) * X(0, n), 0.72), "builder ppxn");
        check(decompose_pp_xn(0, 1, 2, n, 0.72), E(P(1) * P(2) * X(0, n), 0.72), "lowered ppxn");
    }
    check(kernels_of(identity_x2x2(0, 1, 0.7), 2), E(X(0, 2) * X(1, 2), 0.7), "builder two squares");
    check(decompose_x2x2(0, 1, 0.7), E(X(0, 2) * X(1, 2), 0.7), "lowered two squares");
    for (int N : {4, 6, 8}) {
        check(kernels_of(identity_single_even(0, 1, N, 0.3), 1), E(X(0, N), 0.3), "builder single even");
        check(decompose_single_even(0, N, 0.3), E(X(0, N), 0.3), "lowered single even");
    }
    check(kernels_of(identity_single_odd3(0, 1, 2, 9, 0.2), 1), E(X(0, 9), 0.2), "builder single odd");
    const Certificate odd = certify_lowering(xs({{0, 9}}, 0.2));
    worst = std::max(worst, odd.residual);
    checked += static_cast<int>(odd.identities);
    o.require(odd.residual < 1e-9, "lowered single odd");
    o.detail << " identities=" << checked << " worst residual=" << worst;
}

void numeric_cross_check(Outcome &o) {
    const std::vector<TargetGate> corpus = {xs({{0, 4}}, 0.05), xs({{0, 1}, {1, 1}, {2, 1}}, 0.02),
                                            xs({{0, 2}, {1, 2}}, 0.05)};
    for (const auto &t : corpus) {
        const GateSeq s = compile(t).seq;
        FockContext ctx;
        ctx.subspace = 5;
        double previous = -1.0;
        for (int D : {16, 24, 32}) {
            ctx.cutoff = D;
            const NumericResult r = verify_numeric(s, t, ctx);
            if (D == 24) {
                char buf[160];
                std::snprintf(buf, sizeof buf, " %s: D=24 error %.3g phase %.3g;", t.describe().c_str(),
                              r.subspace_error, r.phase_offset);
                o.detail << buf;
                o.require(r.subspace_error < 1e-5, t.describe() + " error at D=24");
                o.require(std::abs(r.phase_offset) < 1e-4, t.describe() + " phase at D=24");
            }
            if (previous >= 0) {
                o.require(r.subspace_error <= 2 * previous, t.describe() + " error grew at D=" + std::to_string(D));
            }
            previous = r.subspace_error;
        }
    }
}

void coefficient_solver(Outcome &o) {
    for (int N = 2; N <= 6; ++N) {
        const CoeffSolution sol = solve_pascal_coeffs(N);
        for (const auto &[e, c] : testing::brute_force_expansion(N, sol.coeffs)) {
            bool all_ones = true;
            for (int v : e) all_ones &= v == 1;
            o.require(c == (all_ones ? Rational(1) : Rational(0)), "expansion N=" + std::to_string(N));
        }
    }
    for (int N = 2; N <= 8; ++N) {
        const CoeffSolution sol = solve_pascal_coeffs(N);
        const auto a = pascal_matrix(N);
        for (const auto &row : a) {
            Rational dot(0);
            // Columns act on (c_N, ..., c_1).
            for (int col = 0; col < N; ++col) dot += row[static_cast<std::size_t>(col)] * sol.c(N - col);
            o.require(dot == Rational(0), "A c != 0 for N=" + std::to_string(N));
        }
    }
}

void baseline_scaling(Outcome &o) {
    const int D = 40;
    const testing::Mat x = testing::xmat(D);
    const testing::Mat p = testing::pmat(D);
    const testing::Mat a = x * x * x, b = p * p;
    const testing::Mat h = Complex{0, -1} * (a * b - b * a);
    const double t2 = 0.01;
    const testing::Mat exact = testing::expi(h, t2);
    std::vector<double> lk, le;
    for (int K : {5, 10, 20, 40}) {
        const CMatrix u = circuit_unitary(commutator_approx(X(0, 3), P(0, 2), t2, K), 1, D);
        const double err = subspace_distance(u, exact, 1, D, 8);
        lk.push_back(std::log(K));
        le.push_back(std::log(err));
        o.detail << " K=" << K << ":" << err;
    }
    const double n = static_cast<double>(lk.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lk.size(); ++i) {
        mx += lk[i] / n;
        my += le[i] / n;
    }
    double num = 0, den = 0;
    for (std::size_t i = 0; i < lk.size(); ++i) {
        num += (lk[i] - mx) * (le[i] - my);
        den += (lk[i] - mx) * (lk[i] - mx);
    }
    const double slope = num / den;
    o.detail << " slope=" << slope;
    o.require(std::abs(slope + 1.0) <= 0.3, "slope");
    const CommutatorEstimate e = estimate_single_commutator(2.0 / 3.0, 1e-3);
    o.detail << " repeats=" << e.repeats;
    o.require(e.repeats >= 1e4 && e.repeats <= 1e6, "repeat estimate not within 10x of 1e5");
}

void eligibility(Outcome &o) {
    auto verdict = [](const std::string &spec) { return check_eligibility(parse_target(spec)); };
    for (const std::string spec : {"t=1 X[0]^5", "t=1 X[0]^2 X[1]^2 X[2]^2"}) {
        const EligibilityVerdict v = verdict(spec);
        o.require(!v.eligible, spec + " accepted");
        o.require(v.reason.find("restriction") != std::string::npos, spec + " reason names no restriction");
    }
    o.require(!verdict("t=1 X[0]^7").eligible, "X^7 accepted");
    std::vector<std::string> accepted = {"t=1 X[0]^6", "t=1 X[0]^9", "t=1 X[0] X[1]^3"};
    for (int n = 1; n <= 4; ++n) accepted.push_back(preset_spec("montecarlo:" + std::to_string(n)));
    for (const auto &spec : accepted) o.require(verdict(spec).eligible, spec + " rejected");
}

}  // namespace
}  // namespace cvexact

int main() {
    using namespace cvexact;
    int failed = 0;
    failed += !criterion(1, "exact gate counts", 3.0, exact_counts);
    failed += !criterion(2, "reported gate counts", 15.0, reported_counts);
    failed += !criterion(3, "symbolic identity suite", 30.0, identity_suite);
    failed += !criterion(4, "numeric cross-check", 120.0, numeric_cross_check);
    failed += !criterion(5, "coefficient solver", 10.0, coefficient_solver);
    failed += !criterion(6, "baseline scaling", 180.0, baseline_scaling);
    failed += !criterion(7, "eligibility contract", 1.0, eligibility);
    std::printf("%d of 7 criteria passed\n", 7 - failed);
    return failed == 0 ? 0 : 1;
}
