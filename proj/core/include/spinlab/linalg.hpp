#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

namespace spinlab {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using SparseC = Eigen::SparseMatrix<std::complex<double>>;

template <class A, class B>
Eigen::Matrix<typename A::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(const Eigen::MatrixBase<A>& a,
                                                                        const Eigen::MatrixBase<B>& b) {
    return Eigen::kroneckerProduct(a.derived(), b.derived()).eval();
}

inline SparseC kron(const SparseC& a, const SparseC& b) {
    SparseC out = Eigen::kroneckerProduct(a, b);
    return out;
}

inline SparseC sparse_identity(Eigen::Index n) {
    SparseC id(n, n);
    id.setIdentity();
    return id;
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const SparseC& m) {
    double best = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (SparseC::InnerIterator it(m, k); it; ++it)
            best = std::max(best, std::abs(it.value()));
    return best;
}

}  // namespace spinlab
