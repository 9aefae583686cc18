// spinalg: all-real (decomplexified) Liouville-von Neumann evolution for one
// qudit and for two coupled qudits, in generalized Bloch coordinates over the
// Hermitian basis. A complex eigendecomposition propagator serves as the
// exact reference for cross-checks.
//
// Conventions: Greek indices run over the whole basis 0..n (Unit included),
// Latin over the traceless elements 1..n. One qudit:
//   rho = R_a C_a / ((2S+1) sqrt(S(S+1)/3)),  R_0 = 1,  H = h_b C_b / 2,
//   dR_l/dt = e_ijl h_i R_j.
// Two qudits: Tr(rho C_a x C_b) = sqrt(S1(S1+1)/3) sqrt(S2(S2+1)/3) R_ab with
// R_00 = 1 and H = h_ab C_a x C_b / 2. In the mixed-correlation equations the
// coupling coefficients h always carry (first-qudit index, second-qudit
// index), in both halves; this matches the exact propagator.
#pragma once

#include "matrix.hpp"
#include "spin_basis.hpp"
#include "structure_constants.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinalg {

/// sqrt(S(S+1)/3), the trace scale between rho and R.
inline double bloch_scale(HalfInt spin) {
    const int t = spin.twice();
    return std::sqrt(t * (t + 2) / 12.0);
}

struct BlochState1 {
    HalfInt spin;
    Eigen::VectorXd r; // size n+1, r(0) = 1
};

struct BlochState2 {
    HalfInt spin1, spin2;
    Eigen::MatrixXd r; // (n1+1) x (n2+1), r(0,0) = 1
};

/// R_a = Tr(rho C_a) / sqrt(S(S+1)/3). Requires Tr rho = 1 (to 1e-9) and a
/// matching dimension.
inline BlochState1 density_to_bloch(const ComplexMatrix& rho, const BasisSet& basis) {
    if (rho.rows() != basis.dim() || rho.cols() != basis.dim())
        throw std::invalid_argument("density_to_bloch: dimension mismatch");
    if (std::abs(rho.trace() - std::complex<double>(1.0)) > 1e-9)
        throw std::invalid_argument("density_to_bloch: trace of rho is not 1");
    const double scale = bloch_scale(basis.spin());
    BlochState1 state{basis.spin(), Eigen::VectorXd::Zero(basis.size())};
    for (int a = 0; a < basis.size(); ++a)
        state.r(a) = (rho * basis.matrix(a)).trace().real() / scale;
    return state;
}

/// rho = R_a C_a / ((2S+1) sqrt(S(S+1)/3)); Hermitian with unit trace for
/// any real R with R_0 = 1. Positivity is not enforced.
inline ComplexMatrix bloch_to_density(const BlochState1& state, const BasisSet& basis) {
    if (state.spin != basis.spin() || state.r.size() != basis.size())
        throw std::invalid_argument("bloch_to_density: state does not match the basis");
    const double factor = 1.0 / (basis.dim() * bloch_scale(basis.spin()));
    ComplexMatrix rho = ComplexMatrix::Zero(basis.dim(), basis.dim());
    for (int a = 0; a < basis.size(); ++a) rho += (factor * state.r(a)) * basis.matrix(a);
    return rho;
}

/// R_ab = Tr(rho C_a x C_b) / (sqrt(S1(S1+1)/3) sqrt(S2(S2+1)/3)).
inline BlochState2 density_to_bloch2(const ComplexMatrix& rho, const BasisSet& b1,
                                     const BasisSet& b2) {
    if (rho.rows() != b1.dim() * b2.dim() || rho.cols() != rho.rows())
        throw std::invalid_argument("density_to_bloch2: dimension mismatch");
    if (std::abs(rho.trace() - std::complex<double>(1.0)) > 1e-9)
        throw std::invalid_argument("density_to_bloch2: trace of rho is not 1");
    const double scale = bloch_scale(b1.spin()) * bloch_scale(b2.spin());
    BlochState2 state{b1.spin(), b2.spin(), Eigen::MatrixXd::Zero(b1.size(), b2.size())};
    for (int a = 0; a < b1.size(); ++a)
        for (int b = 0; b < b2.size(); ++b)
            state.r(a, b) = (rho * kron(b1.matrix(a), b2.matrix(b))).trace().real() / scale;
    return state;
}

inline ComplexMatrix bloch_to_density2(const BlochState2& state, const BasisSet& b1,
                                       const BasisSet& b2) {
    if (state.spin1 != b1.spin() || state.spin2 != b2.spin() ||
        state.r.rows() != b1.size() || state.r.cols() != b2.size())
        throw std::invalid_argument("bloch_to_density2: state does not match the bases");
    const double factor =
        1.0 / (b1.dim() * b2.dim() * bloch_scale(b1.spin()) * bloch_scale(b2.spin()));
    const int dim = b1.dim() * b2.dim();
    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (int a = 0; a < b1.size(); ++a)
        for (int b = 0; b < b2.size(); ++b)
            if (state.r(a, b) != 0.0)
                rho += (factor * state.r(a, b)) * kron(b1.matrix(a), b2.matrix(b));
    return rho;
}

/// dR_l = sum_ij e_ijl h_i R_j over traceless indices; component 0 is 0.
inline Eigen::VectorXd deriv_one_qudit(const Eigen::VectorXd& r, const Eigen::VectorXd& h,
                                       const StructureTables& tables) {
    const int d = tables.spin().twice() + 1;
    if (r.size() != d * d)
        throw std::invalid_argument("deriv_one_qudit: state size does not match the tables' spin");
    if (h.size() != r.size())
        throw std::invalid_argument("deriv_one_qudit: h and R sizes differ");
    Eigen::VectorXd dr = Eigen::VectorXd::Zero(r.size());
    // One stored sorted triple contributes all six signed permutations.
    for (const auto& [t, v] : tables.e_table()) {
        dr(t.k) += v * (h(t.i) * r(t.j) - h(t.j) * r(t.i));
        dr(t.j) += v * (h(t.k) * r(t.i) - h(t.i) * r(t.k));
        dr(t.i) += v * (h(t.j) * r(t.k) - h(t.k) * r(t.j));
    }
    return dr;
}

/// Precomputed contraction kernel for the two-qudit equations. Builds dense
/// per-index g slices once so repeated derivative evaluations stay cheap.
class TwoQuditKernel {
public:
    TwoQuditKernel(const StructureTables& t1, const StructureTables& t2)
        : t1_(&t1), t2_(&t2), f1_(bloch_scale(t1.spin())), f2_(bloch_scale(t2.spin())) {
        const auto count = [](HalfInt s) {
            const int d = s.twice() + 1;
            return d * d - 1;
        };
        n1_ = count(t1.spin());
        n2_ = count(t2.spin());
        g1_ = dense_g(*t1_, n1_);
        g2_ = dense_g(*t2_, n2_);
    }

    int n1() const { return n1_; }
    int n2() const { return n2_; }

    /// d/dt of the full (n1+1) x (n2+1) coefficient matrix; row/col 0 of the
    /// result is the marginal dynamics, entry (0,0) is identically zero.
    Eigen::MatrixXd deriv(const Eigen::MatrixXd& r, const Eigen::MatrixXd& h) const {
        if (r.rows() != n1_ + 1 || r.cols() != n2_ + 1 || h.rows() != r.rows() ||
            h.cols() != r.cols())
            throw std::invalid_argument("TwoQuditKernel: R or h shape mismatch");
        Eigen::MatrixXd dr = Eigen::MatrixXd::Zero(n1_ + 1, n2_ + 1);
        const auto hL = h.bottomRightCorner(n1_, n2_);
        const auto rL = r.bottomRightCorner(n1_, n2_);

        // dR_m0 = f2 * e1_pim (h_p0 R_i0 + h_pl R_il)
        {
            Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n1_ + 1, n1_ + 1);
            u.bottomRightCorner(n1_, n1_) =
                h.col(0).tail(n1_) * r.col(0).tail(n1_).transpose() + hL * rL.transpose();
            Eigen::VectorXd acc = Eigen::VectorXd::Zero(n1_ + 1);
            contract_e(*t1_, u, acc);
            dr.col(0).tail(n1_) = f2_ * acc.tail(n1_);
        }
        // dR_0m = f1 * e2_pim (h_0p R_0i + h_lp R_li)
        {
            Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n2_ + 1, n2_ + 1);
            u.bottomRightCorner(n2_, n2_) =
                h.row(0).tail(n2_).transpose() * r.row(0).tail(n2_) + hL.transpose() * rL;
            Eigen::VectorXd acc = Eigen::VectorXd::Zero(n2_ + 1);
            contract_e(*t2_, u, acc);
            dr.row(0).tail(n2_) = f1_ * acc.tail(n2_).transpose();
        }
        // dR_mn += e1_pim [ f2 (h_pn R_i0 + h_p0 R_in) + g2_rln h_pr R_il ]
        for (int n = 1; n <= n2_; ++n) {
            Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n1_ + 1, n1_ + 1);
            u.bottomRightCorner(n1_, n1_) =
                f2_ * (h.col(n).tail(n1_) * r.col(0).tail(n1_).transpose() +
                       h.col(0).tail(n1_) * r.col(n).tail(n1_).transpose()) +
                hL * g2_[n] * rL.transpose();
            Eigen::VectorXd acc = Eigen::VectorXd::Zero(n1_ + 1);
            contract_e(*t1_, u, acc);
            dr.col(n).tail(n1_) += acc.tail(n1_);
        }
        // dR_mn += e2_pin [ f1 (h_mp R_0i + h_0p R_mi) + g1_rlm h_rp R_li ]
        for (int m = 1; m <= n1_; ++m) {
            Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n2_ + 1, n2_ + 1);
            u.bottomRightCorner(n2_, n2_) =
                f1_ * (h.row(m).tail(n2_).transpose() * r.row(0).tail(n2_) +
                       h.row(0).tail(n2_).transpose() * r.row(m).tail(n2_)) +
                hL.transpose() * g1_[m] * rL;
            Eigen::VectorXd acc = Eigen::VectorXd::Zero(n2_ + 1);
            contract_e(*t2_, u, acc);
            dr.row(m).tail(n2_) += acc.tail(n2_).transpose();
        }
        return dr;
    }

private:
    static std::vector<Eigen::MatrixXd> dense_g(const StructureTables& t, int n) {
        std::vector<Eigen::MatrixXd> slices(n + 1, Eigen::MatrixXd::Zero(n, n));
        for (const auto& [key, value] : t.g_table()) {
            const int idx[3] = {key.i, key.j, key.k};
            // distribute the symmetric value over distinct permutations
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    if (b == a) continue;
                    const int c = 3 - a - b;
                    slices[idx[c]](idx[a] - 1, idx[b] - 1) = value;
                }
        }
        return slices;
    }

    static void contract_e(const StructureTables& tables, const Eigen::MatrixXd& u,
                           Eigen::VectorXd& dst) {
        for (const auto& [t, v] : tables.e_table()) {
            dst(t.k) += v * (u(t.i, t.j) - u(t.j, t.i));
            dst(t.j) += v * (u(t.k, t.i) - u(t.i, t.k));
            dst(t.i) += v * (u(t.j, t.k) - u(t.k, t.j));
        }
    }

    const StructureTables* t1_;
    const StructureTables* t2_;
    int n1_ = 0, n2_ = 0;
    double f1_ = 0.0, f2_ = 0.0;
    std::vector<Eigen::MatrixXd> g1_, g2_;
};

/// One-shot evaluation of the two-qudit derivative.
inline Eigen::MatrixXd deriv_two_qudit(const Eigen::MatrixXd& r, const Eigen::MatrixXd& h,
                                       const StructureTables& t1, const StructureTables& t2) {
    return TwoQuditKernel(t1, t2).deriv(r, h);
}

/// Length of the generalized Bloch vector: the Euclidean norm of every
/// component except the leading (Unit) one. Works on flattened two-qudit
/// states as well, where index 0 is R_00.
inline double bloch_length(const Eigen::VectorXd& flat_state) {
    return flat_state.tail(flat_state.size() - 1).norm();
}

/// Row-major flattening used for two-qudit states on the wire and in the
/// integrator.
inline Eigen::VectorXd flatten_row_major(const Eigen::MatrixXd& m) {
    Eigen::VectorXd out(m.size());
    Eigen::Index idx = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) out(idx++) = m(r, c);
    return out;
}

inline Eigen::MatrixXd unflatten_row_major(const Eigen::VectorXd& v, int rows, int cols) {
    if (v.size() != static_cast<Eigen::Index>(rows) * cols)
        throw std::invalid_argument("unflatten_row_major: size mismatch");
    Eigen::MatrixXd out(rows, cols);
    Eigen::Index idx = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out(r, c) = v(idx++);
    return out;
}

struct Trajectory {
    double dt = 0.0;
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;
    std::vector<double> bloch_lengths;
};

/// Classical fixed-step fourth-order Runge-Kutta on a flattened state.
/// Records steps+1 snapshots including the initial one, with the Bloch
/// length at each. Throws if the state stops being finite.
template <typename DerivFn>
Trajectory integrate(const Eigen::VectorXd& state0, double dt, int steps, DerivFn&& deriv) {
    if (dt <= 0.0) throw std::invalid_argument("integrate: dt must be positive");
    if (steps < 1) throw std::invalid_argument("integrate: steps must be >= 1");
    Trajectory out;
    out.dt = dt;
    out.times.reserve(steps + 1);
    out.states.reserve(steps + 1);
    out.bloch_lengths.reserve(steps + 1);
    Eigen::VectorXd y = state0;
    const auto record = [&](int step) {
        out.times.push_back(step * dt);
        out.states.push_back(y);
        out.bloch_lengths.push_back(bloch_length(y));
    };
    record(0);
    for (int step = 1; step <= steps; ++step) {
        const Eigen::VectorXd k1 = deriv(y);
        const Eigen::VectorXd k2 = deriv(y + (0.5 * dt) * k1);
        const Eigen::VectorXd k3 = deriv(y + (0.5 * dt) * k2);
        const Eigen::VectorXd k4 = deriv(y + dt * k3);
        y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!y.allFinite())
            throw std::runtime_error("integrate: state became non-finite at step " +
                                     std::to_string(step));
        record(step);
    }
    return out;
}

/// h_b = 2 Tr(H C_b) / c. Every basis element, Unit included, has squared
/// norm c, so the same scale applies throughout.
inline Eigen::VectorXd decompose_hamiltonian(const ComplexMatrix& h, const BasisSet& basis) {
    if (h.rows() != basis.dim() || h.cols() != basis.dim())
        throw std::invalid_argument("decompose_hamiltonian: dimension mismatch");
    if (!is_hermitian(h, 1e-9))
        throw std::invalid_argument("decompose_hamiltonian: matrix is not Hermitian");
    Eigen::VectorXd coeffs(basis.size());
    for (int b = 0; b < basis.size(); ++b)
        coeffs(b) = 2.0 * (h * basis.matrix(b)).trace().real() / basis.norm_constant();
    return coeffs;
}

inline Eigen::MatrixXd decompose_hamiltonian2(const ComplexMatrix& h, const BasisSet& b1,
                                              const BasisSet& b2) {
    if (h.rows() != b1.dim() * b2.dim() || h.cols() != h.rows())
        throw std::invalid_argument("decompose_hamiltonian2: dimension mismatch");
    if (!is_hermitian(h, 1e-9))
        throw std::invalid_argument("decompose_hamiltonian2: matrix is not Hermitian");
    const double norm2 = b1.norm_constant() * b2.norm_constant();
    Eigen::MatrixXd coeffs(b1.size(), b2.size());
    for (int a = 0; a < b1.size(); ++a)
        for (int b = 0; b < b2.size(); ++b)
            coeffs(a, b) = 2.0 * (h * kron(b1.matrix(a), b2.matrix(b))).trace().real() / norm2;
    return coeffs;
}

/// H = h_b C_b / 2.
inline ComplexMatrix hamiltonian_from_coeffs(const Eigen::VectorXd& coeffs, const BasisSet& basis) {
    ComplexMatrix h = ComplexMatrix::Zero(basis.dim(), basis.dim());
    for (int b = 0; b < basis.size(); ++b)
        if (coeffs(b) != 0.0) h += (0.5 * coeffs(b)) * basis.matrix(b);
    return h;
}

/// H = h_ab C_a x C_b / 2.
inline ComplexMatrix hamiltonian_from_coeffs2(const Eigen::MatrixXd& coeffs, const BasisSet& b1,
                                              const BasisSet& b2) {
    const int dim = b1.dim() * b2.dim();
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (int a = 0; a < b1.size(); ++a)
        for (int b = 0; b < b2.size(); ++b)
            if (coeffs(a, b) != 0.0)
                h += (0.5 * coeffs(a, b)) * kron(b1.matrix(a), b2.matrix(b));
    return h;
}

/// Exact unitary propagation rho(t) = U rho0 U+ with U = exp(-iHt) from the
/// Hermitian eigendecomposition of H. The reference for every real-form
/// trajectory.
inline ComplexMatrix oracle_evolve(const ComplexMatrix& rho0, const ComplexMatrix& h, double t) {
    if (!is_hermitian(h, 1e-9))
        throw std::invalid_argument("oracle_evolve: Hamiltonian is not Hermitian");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("oracle_evolve: eigendecomposition failed");
    const auto& vecs = solver.eigenvectors();
    Eigen::VectorXcd phases(solver.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(std::complex<double>(0.0, -solver.eigenvalues()(i) * t));
    const ComplexMatrix u = vecs * phases.asDiagonal() * vecs.adjoint();
    return u * rho0 * u.adjoint();
}

} // namespace spinalg
