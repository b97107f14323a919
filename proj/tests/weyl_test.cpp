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

#include <gtest/gtest.h>

#include <random>

#include "cvexact/errors.hpp"
#include "cvexact/gate.hpp"
#include "cvexact/verifier.hpp"
#include "test_util.hpp"

using namespace cvexact;
using namespace cvexact::testing;

namespace {

const Complex kI{0.0, 1.0};

Monomial xp(std::uint32_t mode, int x, int p) {
    return Monomial{{mode, static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(p)}};
}

// Lowest `d` block of U B U^dagger - C, for single-mode matrices.
double conj_block_error(const Mat &u, const Mat &b, const Mat &c, int d) {
    Mat diff = u * b * u.adjoint() - c;
    return diff.topLeftCorner(d, d).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(weyl, normal_order_preserved) {
    NOPoly r = poly_mul(X(0), P(0));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r.coefficient(xp(0, 1, 1)), Complex(1.0));
}

TEST(weyl, reorder_px) {
    NOPoly r = poly_mul(P(0), X(0));
    EXPECT_EQ(r.coefficient(xp(0, 1, 1)), Complex(1.0));
    EXPECT_NEAR(std::abs(r.coefficient(Monomial{}) - Complex(0.0, -0.5)), 0.0, 1e-15);
    EXPECT_EQ(r.size(), 2u);
    FockOracle oracle(1);
    EXPECT_LT(oracle.product_defect(P(0), X(0), r, 25), 1e-12);
}

TEST(weyl, commutator_examples) {
    EXPECT_EQ(commutator(X(0), P(0)), NOPoly(Complex{0.0, 0.5}));
    EXPECT_TRUE(commutator(X(0), X(1)).is_zero());
    // (2/3)[X^3, P^2] = i (X^2 P + P X^2), with X^2 P + P X^2 = 2 X^2 P - i X.
    NOPoly lhs = commutator(X(0, 3), P(0, 2)) * (2.0 / 3.0);
    NOPoly sym = X(0, 2) * P(0) * 2.0 - kI * X(0);
    EXPECT_LT(max_coeff_diff(sym, poly_mul(X(0, 2), P(0)) + poly_mul(P(0), X(0, 2))), 1e-14);
    EXPECT_LT(max_coeff_diff(lhs, kI * sym), 1e-14);
}

TEST(weyl, commutator_matches_brute_force_reordering) {
    FockOracle oracle(1);
    NOPoly ab = poly_mul(X(0, 3), P(0, 2));
    NOPoly ba = poly_mul(P(0, 2), X(0, 3));
    EXPECT_LT(oracle.product_defect(X(0, 3), P(0, 2), ab, 12), 1e-10);
    EXPECT_LT(oracle.product_defect(P(0, 2), X(0, 3), ba, 12), 1e-10);
    EXPECT_LT(max_coeff_diff(commutator(X(0, 3), P(0, 2)), ab - ba), 1e-14);
}

TEST(weyl, random_products_match_fock_oracle) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(0, 4);
    std::uniform_int_distribution<int> nmodes(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto modes = static_cast<std::uint32_t>(nmodes(rng));
        NOPoly a = random_poly(rng, modes, deg(rng), 1);
        NOPoly b = random_poly(rng, modes, deg(rng), 1);
        FockOracle oracle(modes);
        const int levels = modes == 1 ? 10 : modes == 2 ? 5 : 3;
        EXPECT_LT(oracle.product_defect(a, b, poly_mul(a, b), levels), 1e-9)
            << to_string(a) << " * " << to_string(b);
    }
}

TEST(weyl, jacobi_identity) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        NOPoly a = random_poly(rng, 2, 4, 3);
        NOPoly b = random_poly(rng, 2, 4, 3);
        NOPoly c = random_poly(rng, 2, 4, 3);
        NOPoly j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                   commutator(c, commutator(a, b));
        EXPECT_LT(j.max_abs_coeff(), 1e-10);
    }
}

TEST(weyl, adjoint_and_ladder) {
    NOPoly a = annihilation(0);
    NOPoly ad = creation(0);
    EXPECT_LT(max_coeff_diff(commutator(a, ad), NOPoly(1.0)), 1e-15);
    EXPECT_LT(max_coeff_diff(a.adjoint(), ad), 1e-15);
    // (X P)^dagger = P X = X P - i/2.
    EXPECT_LT(max_coeff_diff(poly_mul(X(0), P(0)).adjoint(), poly_mul(P(0), X(0))), 1e-15);
}

TEST(weyl, substitute_is_homomorphism) {
    GeneratorMap images;
    images[{0, Basis::Position}] = X(0) + X(1);
    images[{0, Basis::Momentum}] = P(0);
    images[{1, Basis::Position}] = X(1);
    images[{1, Basis::Momentum}] = P(1) - P(0);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        NOPoly a = random_poly(rng, 2, 3, 2);
        NOPoly b = random_poly(rng, 2, 3, 2);
        EXPECT_LT(max_coeff_diff(substitute(poly_mul(a, b), images),
                                 poly_mul(substitute(a, images), substitute(b, images))),
                  1e-10);
    }
}

TEST(heisenberg, fourier_convention) {
    EXPECT_EQ(heisenberg_conjugate(Gate::fourier(0, -1), X(0)), -P(0));
    EXPECT_EQ(heisenberg_conjugate(Gate::fourier(0, 1), X(0)), P(0));
    EXPECT_EQ(heisenberg_conjugate(Gate::fourier(0, 1), P(0)), -X(0));
    // Numeric: F X F^dagger = P with F = exp(i pi/2 (X^2 + P^2)).
    const int d = 30;
    Mat f = expi(xmat(d) * xmat(d) + pmat(d) * pmat(d), M_PI / 2);
    EXPECT_LT(conj_block_error(f, xmat(d), pmat(d), 10), 1e-8);
}

TEST(heisenberg, bch_examples_against_fock_matrices) {
    const int d = 30;
    Mat x = xmat(d), p = pmat(d);

    const double t2 = 0.1;
    NOPoly r1 = heisenberg_conjugate(E(X(0, 2), t2), P(0));
    EXPECT_LT(max_coeff_diff(r1, P(0) - X(0) * t2), 1e-15);
    EXPECT_LT(conj_block_error(expi(x * x, t2), p, p - t2 * x, 10), 1e-8);

    // Cubic generators leak out of a 30-level space quickly; keep t small.
    const double t3 = 0.01;
    NOPoly r2 = heisenberg_conjugate(E(X(0, 3), t3), P(0));
    EXPECT_LT(max_coeff_diff(r2, P(0) - X(0, 2) * (1.5 * t3)), 1e-15);
    EXPECT_LT(conj_block_error(expi(x * x * x, t3), p, p - 1.5 * t3 * x * x, 10), 1e-8);
}

TEST(heisenberg, two_mode_shift_against_fock_matrices) {
    NOPoly r = heisenberg_conjugate(E(P(0) * X(1), 2.0), X(0));
    EXPECT_LT(max_coeff_diff(r, X(0) + X(1)), 1e-15);
    // exp(2i P0 X1) is block diagonal in the eigenbasis of the truncated X1:
    // U X0 U^dagger = sum_k exp(2i x_k P0) X0 exp(-2i x_k P0) (x) |v_k><v_k|.
    const int d0 = 60, d1 = 40, low = 4;
    Eigen::SelfAdjointEigenSolver<Mat> x1(xmat(d1));
    Mat x0 = xmat(d0), p0 = pmat(d0);
    double worst = 0;
    std::vector<Mat> blocks;
    for (int k = 0; k < d1; ++k) {
        Mat u = expi(p0, 2.0 * x1.eigenvalues()(k));
        blocks.push_back(u * x0 * u.adjoint());
    }
    Mat x1m = xmat(d1);
    for (int a = 0; a < low; ++a)
        for (int b = 0; b < low; ++b)
            for (int c = 0; c < low; ++c)
                for (int e = 0; e < low; ++e) {
                    Complex v = 0;
                    for (int k = 0; k < d1; ++k) {
                        v += blocks[k](a, c) * x1.eigenvectors()(b, k) * std::conj(x1.eigenvectors()(e, k));
                    }
                    Complex want = (b == e ? x0(a, c) : Complex{}) + (a == c ? x1m(b, e) : Complex{});
                    worst = std::max(worst, std::abs(v - want));
                }
    EXPECT_LT(worst, 1e-8);
}

TEST(heisenberg, fourier_is_automorphism) {
    std::mt19937 rng(5);
    for (int power : {1, -1}) {
        Gate f = Gate::fourier(0, power);
        for (int trial = 0; trial < 20; ++trial) {
            NOPoly a = random_poly(rng, 2, 3, 3);
            NOPoly b = random_poly(rng, 2, 3, 3);
            EXPECT_LT(max_coeff_diff(heisenberg_conjugate(f, poly_mul(a, b)),
                                     poly_mul(heisenberg_conjugate(f, a), heisenberg_conjugate(f, b))),
                      1e-12);
        }
    }
}

TEST(heisenberg, inverse_round_trip) {
    std::mt19937 rng(9);
    const std::vector<Gate> gates = {E(X(0, 3), 0.7), E(X(0) * X(1), -1.3), E(P(0) * X(1, 2), 0.4),
                                     E(P(1, 2), 0.9), Gate::fourier(1, 1)};
    for (const auto &g : gates) {
        for (int trial = 0; trial < 10; ++trial) {
            NOPoly b = random_poly(rng, 2, 3, 3);
            NOPoly back = heisenberg_conjugate(g.inverse(), heisenberg_conjugate(g, b));
            EXPECT_LT(max_coeff_diff(back, b), 1e-10);
        }
    }
}

TEST(heisenberg, non_terminating_series_is_an_error) {
    // exp(i X^2 P^2) acting on X does not terminate.
    EXPECT_THROW(heisenberg_conjugate(E(X(0, 2) * P(0, 2), 0.5), X(0), 8), NonTerminatingSeries);
}

TEST(zassenhaus, commuting_terms_split_exactly) {
    GateSeq s = zassenhaus_split(X(0), X(1), 1.0, 4);
    ASSERT_EQ(s.gates.size(), 2u);
    EXPECT_LT(verify_identity(s, E(X(0) + X(1), 1.0)), 1e-14);
}

TEST(zassenhaus, third_factor) {
    const double t = 0.3;
    GateSeq s = zassenhaus_split(X(0, 2), P(0), t, 3);
    ASSERT_EQ(s.gates.size(), 3u);
    const Gate &g = s.gates[2];
    NOPoly exponent = g.generator() * Complex{0.0, g.strength()};
    EXPECT_LT(max_coeff_diff(exponent, commutator(X(0, 2), P(0)) * (t * t / 2)), 1e-14);
    // Higher terms are central here, so the product has the exact action.
    EXPECT_LT(verify_identity(s, E(X(0, 2) + P(0), t)), 1e-12);
}

TEST(zassenhaus, fourth_factor) {
    const double t = 0.2;
    NOPoly a = X(0, 3), b = P(0, 2);
    GateSeq s = zassenhaus_split(a, b, t, 4);
    ASSERT_EQ(s.gates.size(), 4u);
    const Gate &g = s.gates[3];
    NOPoly exponent = g.generator() * Complex{0.0, g.strength()};
    NOPoly ab = commutator(a, b);
    NOPoly want = (commutator(b, ab) * 2.0 + commutator(a, ab)) * Complex{0.0, -t * t * t / 6};
    EXPECT_LT(max_coeff_diff(exponent, want), 1e-12);
}
