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

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "cvexact/errors.hpp"
#include "cvexact/verifier.hpp"

namespace cvexact {

CMatrix ladder(int cutoff) {
    CMatrix a = CMatrix::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

CMatrix position_matrix(int cutoff) {
    CMatrix a = ladder(cutoff);
    return (a.adjoint() + a) / 2.0;
}

CMatrix momentum_matrix(int cutoff) {
    CMatrix a = ladder(cutoff);
    return Complex{0.0, 0.5} * (a.adjoint() - a);
}

FockMatrices fock_matrices(std::uint32_t modes, const FockContext &ctx) {
    FockMatrices f;
    f.x.assign(modes, position_matrix(ctx.cutoff));
    f.p.assign(modes, momentum_matrix(ctx.cutoff));
    return f;
}

CMatrix expi_hermitian(const CMatrix &h, double s) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    Eigen::VectorXcd phases =
        (Complex{0.0, s} * es.eigenvalues().cast<Complex>()).array().exp().matrix();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix single_mode_matrix(const NOPoly &p, int cutoff) {
    if (p.modes().size() > 1) throw std::invalid_argument("single_mode_matrix: polynomial spans several modes");
    const CMatrix x = position_matrix(cutoff);
    const CMatrix q = momentum_matrix(cutoff);
    CMatrix out = CMatrix::Zero(cutoff, cutoff);
    for (const auto &[mono, c] : p.terms()) {
        CMatrix term = CMatrix::Identity(cutoff, cutoff);
        for (const auto &f : mono.factors()) {
            for (int i = 0; i < f.x; ++i) term = term * x;
            for (int i = 0; i < f.p; ++i) term = term * q;
        }
        out += c * term;
    }
    return out;
}

namespace {

// Eigenbasis of a truncated quadrature; powers share it.
struct QuadEigen {
    CMatrix vectors;          // columns are eigenvectors in the Fock basis
    Eigen::VectorXd values;
};

QuadEigen quad_eigen(const CMatrix &q) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(q);
    return {es.eigenvectors(), es.eigenvalues()};
}

// Columns of `psi` are states on `modes` modes, mode k having stride D^k.
class StateBlock {
   public:
    StateBlock(int cutoff, std::uint32_t modes, std::size_t dim, Eigen::Index cols)
        : d_(cutoff), modes_(modes), dim_(dim), psi_(CMatrix::Zero(static_cast<Eigen::Index>(dim), cols)) {}

    CMatrix &psi() { return psi_; }

    std::size_t stride(std::uint32_t mode) const {
        std::size_t s = 1;
        for (std::uint32_t k = 0; k < mode; ++k) s *= static_cast<std::size_t>(d_);
        return s;
    }

    // psi <- (M acting on `mode`) psi.
    void apply(std::uint32_t mode, const CMatrix &m) {
        const std::size_t s = stride(mode);
        const Eigen::Index D = d_;
        const std::size_t total = dim_ * static_cast<std::size_t>(psi_.cols());
        Complex *data = psi_.data();
        if (s == 1) {
            Eigen::Map<CMatrix> view(data, D, static_cast<Eigen::Index>(total / D));
            view = m * view;
            return;
        }
        const CMatrix mt = m.transpose();
        const std::size_t block = s * static_cast<std::size_t>(D);
        for (std::size_t o = 0; o < total; o += block) {
            Eigen::Map<CMatrix> view(data + o, static_cast<Eigen::Index>(s), D);
            view = view * mt;
        }
    }

    // Multiplies entry (idx, c) by phase(levels of the listed modes).
    template <class PhaseFn>
    void diagonal(const std::vector<std::uint32_t> &modes, PhaseFn phase) {
        std::vector<std::size_t> strides;
        for (auto m : modes) strides.push_back(stride(m));
        std::vector<int> lv(modes.size());
        for (std::size_t idx = 0; idx < dim_; ++idx) {
            for (std::size_t i = 0; i < modes.size(); ++i) {
                lv[i] = static_cast<int>((idx / strides[i]) % static_cast<std::size_t>(d_));
            }
            const Complex ph = phase(lv);
            psi_.row(static_cast<Eigen::Index>(idx)) *= ph;
        }
    }

   private:
    int d_;
    std::uint32_t modes_;
    std::size_t dim_;
    CMatrix psi_;
};

// Pure-power factor of a generator monomial.
struct PowFactor {
    std::uint32_t mode;
    int power;
    Basis basis;
};

std::vector<PowFactor> pow_factors(const Monomial &mono) {
    std::vector<PowFactor> fs;
    for (const auto &f : mono.factors()) {
        if (f.x && f.p) {
            throw std::invalid_argument("mixed X/P factor on one mode in " + to_string(mono));
        }
        fs.push_back({f.mode, f.x ? f.x : f.p, f.x ? Basis::Position : Basis::Momentum});
    }
    return fs;
}

// Applies gates to a StateBlock held in the eigenbasis of the truncated X
// matrix on every mode, where X-type gates are diagonal.
class Propagator {
   public:
    explicit Propagator(int cutoff)
        : xe_(quad_eigen(position_matrix(cutoff))), pe_(quad_eigen(momentum_matrix(cutoff))) {
        to_x_ = xe_.vectors.adjoint();
        from_x_ = xe_.vectors;
        x_to_p_ = pe_.vectors.adjoint() * xe_.vectors;
        p_to_x_ = x_to_p_.adjoint();
        Eigen::VectorXcd fphase(cutoff);
        for (int n = 0; n < cutoff; ++n) fphase(n) = std::polar(1.0, std::numbers::pi / 2 * (n + 0.5));
        fourier_ = to_x_ * fphase.asDiagonal() * from_x_;
        fourier_dag_ = fourier_.adjoint();
    }

    void enter(StateBlock &st, std::uint32_t modes) const {
        for (std::uint32_t k = 0; k < modes; ++k) st.apply(k, to_x_);
    }
    void leave(StateBlock &st, std::uint32_t modes) const {
        for (std::uint32_t k = 0; k < modes; ++k) st.apply(k, from_x_);
    }

    // exp(i s prod_k Q_k^{n_k}).
    void monomial(StateBlock &st, const std::vector<PowFactor> &fs, double s) const {
        if (fs.empty()) return;
        std::vector<std::uint32_t> ms;
        std::vector<const Eigen::VectorXd *> vals;
        std::vector<int> pows;
        for (const auto &f : fs) {
            if (f.basis == Basis::Momentum) st.apply(f.mode, x_to_p_);
            ms.push_back(f.mode);
            vals.push_back(f.basis == Basis::Momentum ? &pe_.values : &xe_.values);
            pows.push_back(f.power);
        }
        st.diagonal(ms, [&](const std::vector<int> &lv) {
            double v = 1.0;
            for (std::size_t i = 0; i < lv.size(); ++i) v *= std::pow((*vals[i])(lv[i]), pows[i]);
            return std::polar(1.0, s * v);
        });
        for (const auto &f : fs) {
            if (f.basis == Basis::Momentum) st.apply(f.mode, p_to_x_);
        }
    }

    void gate(StateBlock &st, const Gate &g) const {
        if (g.is_fourier()) {
            st.apply(g.fourier_mode(), g.fourier_power() > 0 ? fourier_ : fourier_dag_);
            return;
        }
        // Terms of a multi-term generator need not commute.
        if (g.generator().size() > 1) {
            throw std::invalid_argument("numeric check supports single-term generators only, got " +
                                        to_string(g.generator()));
        }
        for (const auto &[mono, c] : g.generator().terms()) {
            if (std::abs(c.imag()) > 1e-12) {
                throw std::invalid_argument("numeric check: generator with complex coefficient");
            }
            monomial(st, pow_factors(mono), g.strength() * c.real());
        }
    }

    // Operator-product order: the last gate acts first.
    void circuit(StateBlock &st, const GateSeq &seq) const {
        for (auto it = seq.gates.rbegin(); it != seq.gates.rend(); ++it) gate(st, *it);
    }

   private:
    QuadEigen xe_, pe_;
    CMatrix to_x_, from_x_, x_to_p_, p_to_x_, fourier_, fourier_dag_;
};

std::uint32_t circuit_modes(const GateSeq &seq, std::uint32_t modes) {
    modes = std::max(modes, seq.total_modes());
    for (const auto &g : seq.gates) {
        for (auto m : g.modes()) modes = std::max(modes, m + 1);
    }
    return std::max<std::uint32_t>(modes, 1);
}

std::size_t checked_dimension(std::uint32_t modes, int cutoff, std::size_t limit) {
    std::size_t dim = 1;
    for (std::uint32_t k = 0; k < modes; ++k) {
        dim *= static_cast<std::size_t>(cutoff);
        if (dim > limit) {
            throw DimensionTooLarge("Fock space of " + std::to_string(modes) + " modes at cutoff " +
                                    std::to_string(cutoff) + " exceeds " + std::to_string(limit));
        }
    }
    return dim;
}

// Indices whose level on mode k is below levels(k).
template <class Levels>
std::vector<std::size_t> block_indices(std::uint32_t modes, int cutoff, std::size_t dim, Levels levels) {
    std::vector<std::size_t> out;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t r = idx;
        bool inside = true;
        for (std::uint32_t k = 0; k < modes && inside; ++k) {
            inside = static_cast<int>(r % static_cast<std::size_t>(cutoff)) < levels(k);
            r /= static_cast<std::size_t>(cutoff);
        }
        if (inside) out.push_back(idx);
    }
    return out;
}

double aligned_distance(const CMatrix &a, const CMatrix &b, double *phase) {
    const Complex overlap = (b.adjoint() * a).trace();
    const double phi = std::abs(overlap) > 0 ? std::arg(overlap) : 0.0;
    if (phase) *phase = phi;
    Eigen::JacobiSVD<CMatrix> svd(a - std::polar(1.0, phi) * b);
    return svd.singularValues()(0);
}

}  // namespace

CMatrix hamiltonian_matrix(const NOPoly &h, std::uint32_t modes, int cutoff) {
    const std::size_t dim = checked_dimension(modes, cutoff, 1u << 24);
    const CMatrix x = position_matrix(cutoff);
    const CMatrix p = momentum_matrix(cutoff);
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &[mono, c] : h.terms()) {
        // Mode 0 has stride 1, so it is the rightmost Kronecker factor.
        CMatrix term = CMatrix::Identity(1, 1);
        for (std::uint32_t k = 0; k < modes; ++k) {
            CMatrix local = CMatrix::Identity(cutoff, cutoff);
            for (const auto &f : mono.factors()) {
                if (f.mode != k) continue;
                for (int i = 0; i < f.x; ++i) local = local * x;
                for (int i = 0; i < f.p; ++i) local = local * p;
            }
            CMatrix next(term.rows() * cutoff, term.cols() * cutoff);
            for (Eigen::Index r = 0; r < local.rows(); ++r) {
                for (Eigen::Index q = 0; q < local.cols(); ++q) {
                    next.block(r * term.rows(), q * term.cols(), term.rows(), term.cols()) = local(r, q) * term;
                }
            }
            term = std::move(next);
        }
        for (const auto &f : mono.factors()) {
            if (f.mode >= modes) throw std::invalid_argument("hamiltonian_matrix: mode out of range");
        }
        out += c * term;
    }
    return out;
}

CMatrix circuit_unitary(const GateSeq &seq, std::uint32_t modes, int cutoff) {
    modes = circuit_modes(seq, modes);
    const std::size_t dim = checked_dimension(modes, cutoff, 1u << 14);
    const Propagator prop(cutoff);
    StateBlock st(cutoff, modes, dim, static_cast<Eigen::Index>(dim));
    st.psi().setIdentity();
    prop.enter(st, modes);
    prop.circuit(st, seq);
    prop.leave(st, modes);
    return st.psi();
}

double subspace_distance(const CMatrix &a, const CMatrix &b, std::uint32_t modes, int cutoff,
                         int subspace, double *phase) {
    const std::size_t dim = static_cast<std::size_t>(a.rows());
    const auto idx = block_indices(modes, cutoff, dim, [&](std::uint32_t) { return subspace; });
    const auto n = static_cast<Eigen::Index>(idx.size());
    CMatrix pa(n, n), pb(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            pa(r, c) = a(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
            pb(r, c) = b(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
        }
    }
    return aligned_distance(pa, pb, phase);
}

NumericResult verify_numeric(const GateSeq &seq, const TargetGate &target, const FockContext &ctx) {
    const int D = ctx.cutoff;
    const int d = ctx.subspace;
    if (d < 1 || d >= D) throw std::invalid_argument("verify_numeric: need 1 <= subspace < cutoff");
    if (ctx.ancilla_levels < 1 || ctx.ancilla_levels >= D) {
        throw std::invalid_argument("verify_numeric: need 1 <= ancilla_levels < cutoff");
    }
    const std::uint32_t modes = circuit_modes(seq, target.n_modes());
    const std::size_t dim = checked_dimension(modes, D, ctx.max_dimension);
    const std::uint32_t n_target = target.n_modes();
    const auto sub_index = block_indices(modes, D, dim, [&](std::uint32_t k) {
        return k < n_target ? d : ctx.ancilla_levels;
    });
    const auto sub = static_cast<Eigen::Index>(sub_index.size());
    const Propagator prop(D);

    auto run = [&](auto &&body) {
        StateBlock st(D, modes, dim, sub);
        for (Eigen::Index c = 0; c < sub; ++c) st.psi()(static_cast<Eigen::Index>(sub_index[c]), c) = 1.0;
        prop.enter(st, modes);
        body(st);
        prop.leave(st, modes);
        CMatrix out(sub, sub);
        for (Eigen::Index r = 0; r < sub; ++r) {
            out.row(r) = st.psi().row(static_cast<Eigen::Index>(sub_index[r]));
        }
        return out;
    };
    const CMatrix uc = run([&](StateBlock &st) { prop.circuit(st, seq); });
    std::vector<PowFactor> tf;
    for (const auto &[m, f] : target.exponents) tf.push_back({m, f.power, f.basis});
    const CMatrix ut = run([&](StateBlock &st) { prop.monomial(st, tf, target.strength); });

    NumericResult res;
    res.subspace_error = aligned_distance(uc, ut, &res.phase_offset);
    return res;
}

}  // namespace cvexact
