#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "spinlab/linalg.hpp"
#include "spinlab/multivector.hpp"

namespace spinlab {

using Rng = std::mt19937_64;

/// Sparse random element with small rational coefficients p/q, |p| <= 9, 1 <= q <= 4.
inline Multivector<Rational> random_rational(const Signature& sig, Rng& rng, double density = 0.5) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    Multivector<Rational> out(sig);
    for (Mask m = 0; m < sig.blade_count(); ++m)
        if (keep(rng)) {
            Rational c(num(rng), den(rng));
            c.canonicalize();
            out.add_term(m, c);
        }
    return out;
}

/// Random element restricted to one parity (0 even, 1 odd).
inline Multivector<Rational> random_homogeneous(const Signature& sig, int parity, Rng& rng) {
    const auto x = random_rational(sig, rng, 0.6);
    return parity ? x.odd_part() : x.even_part();
}

inline Multivector<Complex> random_complex(const Signature& sig, Rng& rng) {
    std::normal_distribution<double> normal;
    Multivector<Complex> out(sig);
    for (Mask m = 0; m < sig.blade_count(); ++m)
        out.add_term(m, Complex(normal(rng), normal(rng)));
    return out;
}

inline Eigen::VectorXd random_unit_vector(int n, Rng& rng) {
    std::normal_distribution<double> normal;
    Eigen::VectorXd v(n);
    do {
        for (int i = 0; i < n; ++i)
            v(i) = normal(rng);
    } while (v.norm() < 1e-3);
    return v / v.norm();
}

/// Product of `count` random unit vectors in Cl(n,0).
inline Multivector<double> random_versor(int n, int count, Rng& rng) {
    const Signature sig(n, 0);
    Multivector<double> out = Multivector<double>::one(sig);
    for (int i = 0; i < count; ++i) {
        const Eigen::VectorXd v = random_unit_vector(n, rng);
        out = out * Multivector<double>::vector(sig, std::vector<double>(v.data(), v.data() + n));
    }
    return out;
}

/// Haar-like orthogonal matrix from a QR factorization, forced into SO(n).
inline Eigen::MatrixXd random_rotation(int n, Rng& rng) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = normal(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    if (q.determinant() < 0)
        q.col(0) = -q.col(0);
    return q;
}

inline CMatrix random_unitary(Eigen::Index n, Rng& rng) {
    std::normal_distribution<double> normal;
    CMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            a(i, j) = Complex(normal(rng), normal(rng));
    Eigen::HouseholderQR<CMatrix> qr(a);
    return qr.householderQ() * CMatrix::Identity(n, n);
}

}  // namespace spinlab
