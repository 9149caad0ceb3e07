#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/exact_linalg.hpp"
#include "spinlab/multivector.hpp"

namespace spinlab {

using RealMV = Multivector<double>;

inline constexpr int kMaxInverseSolveDimension = 10;

namespace detail {

template <CliffordScalar S>
double tolerance_for(double tol) {
    return ScalarTraits<S>::exact ? 0.0 : tol;
}

template <CliffordScalar S>
bool is_zero_within(const S& v, double tol) {
    if constexpr (ScalarTraits<S>::exact)
        return ScalarTraits<S>::is_zero(v);
    else
        return ScalarTraits<S>::magnitude(v) <= tol;
}

template <CliffordScalar S>
Multivector<S> clean(const Multivector<S>& x, double tol) {
    if constexpr (ScalarTraits<S>::exact)
        return x;
    else
        return x.pruned(tol);
}

}  // namespace detail

/// x^{-1}: conj(x)/N(x) when N(x) is a nonzero scalar, otherwise a solve of
/// the left-multiplication system x y = 1. Empty when x is not invertible.
template <CliffordScalar S>
std::optional<Multivector<S>> inverse(const Multivector<S>& x, double tol = 1e-12) {
    const Signature& sig = x.signature();
    const double eps = detail::tolerance_for<S>(tol) * std::max(1.0, x.max_abs_coefficient());
    const Multivector<S> xbar = conjugation(x);
    const Multivector<S> norm = detail::clean(x * xbar, eps * std::max(1.0, x.max_abs_coefficient()));
    if (norm.is_scalar() && !detail::is_zero_within(norm.scalar_part(), eps)) {
        const S inv = ScalarTraits<S>::from_int(1) / norm.scalar_part();
        Multivector<S> candidate = xbar * inv;
        // conj(x) x can differ from x conj(x) outside the Clifford group.
        const Multivector<S> check = detail::clean(candidate * x - Multivector<S>::one(sig), eps);
        if (check.is_zero())
            return candidate;
    }
    if (sig.n() > kMaxInverseSolveDimension)
        throw std::invalid_argument("inverse: linear solve limited to n <= 10");
    const std::size_t count = sig.blade_count();
    DenseRows<S> a(count, std::vector<S>(count, ScalarTraits<S>::from_int(0)));
    for (Mask j = 0; j < count; ++j) {
        const Multivector<S> col = x * Multivector<S>::blade(sig, j);
        for (const auto& [m, c] : col.terms())
            a[m][j] = c;
    }
    std::vector<S> rhs(count, ScalarTraits<S>::from_int(0));
    rhs[0] = ScalarTraits<S>::from_int(1);
    const auto sol = solve(a, rhs, ScalarTraits<S>::exact ? 0.0 : 1e-10);
    if (!sol)
        return std::nullopt;
    Multivector<S> out(sig);
    for (Mask m = 0; m < count; ++m)
        out.add_term(m, (*sol)[m]);
    return out;
}

/// Ad~_x(v) = alpha(x) v x^{-1} given a precomputed inverse.
template <CliffordScalar S>
Multivector<S> twisted_adjoint(const Multivector<S>& x, const Multivector<S>& x_inverse, const Multivector<S>& v) {
    return grade_involution(x) * v * x_inverse;
}

struct GroupCheck {
    bool member = false;
    std::string reason;
};

/// x in Gamma iff x is invertible and alpha(x) e_i x^{-1} has grade 1 for every i.
template <CliffordScalar S>
GroupCheck clifford_group_check(const Multivector<S>& x, double tol = 1e-10) {
    const auto inv = inverse(x);
    if (!inv)
        return {false, "not invertible"};
    const Signature& sig = x.signature();
    const double eps = detail::tolerance_for<S>(tol);
    for (int i = 0; i < sig.n(); ++i) {
        const auto image = twisted_adjoint(x, *inv, Multivector<S>::basis_vector(sig, i));
        const auto stray = detail::clean(image - image.grade_part(1), eps);
        if (!stray.is_zero())
            return {false, "twisted adjoint of e" + std::to_string(i) + " leaves the vector space"};
    }
    return {true, ""};
}

template <CliffordScalar S>
bool in_clifford_group(const Multivector<S>& x, double tol = 1e-10) {
    return clifford_group_check(x, tol).member;
}

/// Matrix of Ad~_x on the basis e_0..e_{n-1}; throws if x is not in Gamma.
template <CliffordScalar S>
Eigen::MatrixXd twisted_adjoint_matrix(const Multivector<S>& x, double tol = 1e-10) {
    const GroupCheck check = clifford_group_check(x, tol);
    if (!check.member)
        throw std::invalid_argument("twisted_adjoint_matrix: not in the Clifford group (" + check.reason + ")");
    const auto inv = *inverse(x);
    const Signature& sig = x.signature();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(sig.n(), sig.n());
    for (int i = 0; i < sig.n(); ++i) {
        const auto image = twisted_adjoint(x, inv, Multivector<S>::basis_vector(sig, i));
        for (int j = 0; j < sig.n(); ++j)
            out(j, i) = ScalarTraits<S>::to_complex(image.coefficient(Mask{1} << j)).real();
    }
    return out;
}

enum class Membership { none, pin, spin };
std::string to_string(Membership m);

/// Pin = N^{-1}(1) in Gamma; Spin = Pin in the even subalgebra.
template <CliffordScalar S>
Membership pin_spin_membership(const Multivector<S>& x, double tol = 1e-10) {
    if (x.is_zero() || !in_clifford_group(x, tol))
        return Membership::none;
    const double eps = detail::tolerance_for<S>(tol);
    const auto norm = detail::clean(spinor_norm(x), eps);
    if (!norm.is_scalar() || !detail::is_zero_within(S(norm.scalar_part() - ScalarTraits<S>::from_int(1)), eps))
        return Membership::none;
    return detail::clean(x.odd_part(), eps).is_zero() ? Membership::spin : Membership::pin;
}

/// exp(2 pi t e_i e_j) = cos(2 pi t) + sin(2 pi t) e_i e_j in Cl(n,0).
RealMV bivector_exp(double t, int i, int j, const Signature& sig);

/// Rotation by `angle` in the (i, j) plane, taking e_i towards e_j.
Eigen::MatrixXd plane_rotation(int n, int i, int j, double angle);

struct Lift {
    RealMV versor;
    std::vector<Eigen::VectorXd> reflections;  // unit vectors u_1..u_m, versor = u_1 ... u_m
    bool pin_only = false;                      // det R = -1: the result lies in Pin \ Spin
};

/// Factor R into Householder reflections and multiply the reflecting vectors.
/// The sign is fixed so that the scalar coefficient is >= 0; when it vanishes,
/// the first nonzero coefficient in ascending mask order is made positive.
Lift lift_rotation(const Eigen::MatrixXd& r);

/// Ad~ of a unit vector u: v - 2 <u, v> u.
Eigen::MatrixXd reflection_matrix(const Eigen::VectorXd& u);

/// Sign choice of `lift_rotation`.
RealMV canonical_sign(RealMV x, double tol = 1e-12);

double coefficient_distance(const RealMV& a, const RealMV& b);

struct DoubleCoverTrace {
    int n = 0;
    int steps = 0;
    RealMV start;
    RealMV end;                     // tracked lift at t = 1/2
    Eigen::MatrixXd end_rotation;   // Ad~ of the endpoint
    double distance_to_minus_one = 0;
    double rotation_deviation = 0;  // max |R(1/2) - I|
};

/// Follow lift_rotation along t -> Ad~(c(t)), t in [0, 1/2], picking at each step
/// the lift closer to the previous one.
DoubleCoverTrace double_cover_demo(int n, int steps);

}  // namespace spinlab
