// spinalg: dense complex matrix helpers on top of Eigen.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace spinalg {

using ComplexMatrix = Eigen::MatrixXcd;

inline bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b + b * a;
}

/// Frobenius inner product Tr(a b).
inline std::complex<double> trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("trace_product: dimension mismatch");
    return (a * b).trace();
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace spinalg
