#include <gtest/gtest.h>

#include <numbers>

#include "spinlab/random.hpp"
#include "spinlab/spin_group.hpp"

using namespace spinlab;
using Q = Multivector<Rational>;

namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(CliffordGroup, Membership) {
    const Signature c3(3, 0);
    EXPECT_TRUE(in_clifford_group(Q::scalar(c3, Rational(5))));
    EXPECT_TRUE(in_clifford_group(Q::basis_vector(c3, 0)));
    EXPECT_FALSE(in_clifford_group(Q(c3)));
    // 1 + e0 e1 e2 is a zero divisor: the volume element of Cl(3,0) squares to +1.
    const Q x = Q::one(c3) + Q::blade(c3, 7);
    EXPECT_FALSE(in_clifford_group(x));
    EXPECT_FALSE(clifford_group_check(x).reason.empty());
    // 1 + e0 e1 is a scaled rotor.
    EXPECT_TRUE(in_clifford_group(Q::one(c3) + Q::blade(c3, 3)));
    // 1 + e0 in Cl(0,1) is a zero divisor.
    EXPECT_FALSE(in_clifford_group(Q::one(Signature(0, 1)) + Q::basis_vector(Signature(0, 1), 0)));
}

TEST(Inverse, ExactAndFastPath) {
    const Signature sig(1, 2);
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const Q x = random_rational(sig, rng, 0.9);
        const auto inv = inverse(x);
        if (!inv)
            continue;
        EXPECT_EQ(x * *inv, Q::one(sig));
        EXPECT_EQ(*inv * x, Q::one(sig));
    }
    EXPECT_FALSE(inverse(Q(sig)).has_value());
}

TEST(TwistedAdjoint, Examples) {
    const Signature c2(2, 0);
    Eigen::MatrixXd reflect(2, 2);
    reflect << -1, 0, 0, 1;
    EXPECT_EQ(max_diff(twisted_adjoint_matrix(Q::basis_vector(c2, 0)), reflect), 0.0);
    EXPECT_EQ(max_diff(twisted_adjoint_matrix(Q::one(c2)), Eigen::MatrixXd::Identity(2, 2)), 0.0);

    const Signature c3(3, 0);
    Eigen::MatrixXd half_turn = Eigen::MatrixXd::Identity(3, 3);
    half_turn(0, 0) = half_turn(1, 1) = -1;
    EXPECT_EQ(max_diff(twisted_adjoint_matrix(Q::blade(c3, 3)), half_turn), 0.0);
    EXPECT_THROW(twisted_adjoint_matrix(Q::one(c3) + Q::blade(c3, 7)), std::invalid_argument);
}

TEST(TwistedAdjoint, HomomorphismIntoOrthogonalGroup) {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + t % 5;
        const RealMV x = random_versor(n, 1 + t % 3, rng), y = random_versor(n, 1 + t % 4, rng);
        const Eigen::MatrixXd ax = twisted_adjoint_matrix(x), ay = twisted_adjoint_matrix(y);
        EXPECT_LE(max_diff(twisted_adjoint_matrix(x * y), ax * ay), 1e-10);
        EXPECT_LE(max_diff(ax.transpose() * ax, Eigen::MatrixXd::Identity(n, n)), 1e-10);
        // Odd versors reverse orientation.
        EXPECT_NEAR(ax.determinant(), (1 + t % 3) % 2 ? -1.0 : 1.0, 1e-10);
    }
}

TEST(PinSpin, Membership) {
    const Signature c3(3, 0);
    EXPECT_EQ(pin_spin_membership(Q::basis_vector(c3, 0)), Membership::pin);
    EXPECT_EQ(pin_spin_membership(Q::basis_vector(c3, 0) * Q::basis_vector(c3, 2)), Membership::spin);
    EXPECT_EQ(pin_spin_membership(Q::scalar(c3, Rational(2)) * Q::basis_vector(c3, 0)), Membership::none);
    EXPECT_EQ(pin_spin_membership(Q(c3)), Membership::none);
    EXPECT_EQ(to_string(Membership::spin), "spin");
}

TEST(PinSpin, KernelOnScalarsIsPlusMinusOne) {
    for (int n = 1; n <= 5; ++n) {
        const Signature sig(n, 0);
        for (int v = -4; v <= 4; ++v) {
            const Membership m = pin_spin_membership(Q::scalar(sig, Rational(v)));
            EXPECT_EQ(m == Membership::spin, v == 1 || v == -1) << v;
            if (v == 1 || v == -1)
                EXPECT_EQ(max_diff(twisted_adjoint_matrix(Q::scalar(sig, Rational(v))), Eigen::MatrixXd::Identity(n, n)),
                          0.0);
        }
    }
}

TEST(BivectorExp, Examples) {
    const Signature c3(3, 0);
    const RealMV end = bivector_exp(0.5, 0, 1, c3);
    EXPECT_LE(coefficient_distance(end, RealMV::scalar(c3, -1.0)), 1e-15);
    const RealMV quarter = bivector_exp(0.25, 0, 1, c3);
    EXPECT_LE(coefficient_distance(quarter, RealMV::blade(c3, 3)), 1e-15);
    EXPECT_THROW(bivector_exp(0.1, 1, 1, c3), std::invalid_argument);
    EXPECT_THROW(bivector_exp(0.1, 0, 3, c3), std::invalid_argument);
}

TEST(BivectorExp, RotatesByTwiceTheAngle) {
    const Signature c4(4, 0);
    for (double t : {0.0, 0.05, 0.125, 0.3, 0.5}) {
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 3}, std::pair{2, 0}}) {
            const Eigen::MatrixXd r = twisted_adjoint_matrix(bivector_exp(t, i, j, c4));
            EXPECT_LE(max_diff(r, plane_rotation(4, i, j, 4 * kPi * t)), 1e-12) << t << " " << i << j;
        }
    }
}

TEST(LiftRotation, IdentityAndPlaneRotations) {
    const Lift id = lift_rotation(Eigen::MatrixXd::Identity(3, 3));
    EXPECT_LE(coefficient_distance(id.versor, RealMV::one(Signature(3, 0))), 1e-14);
    EXPECT_FALSE(id.pin_only);

    const Signature c3(3, 0);
    for (double theta : {0.3, 1.0, 2.5, -1.2}) {
        const Lift l = lift_rotation(plane_rotation(3, 0, 2, theta));
        const RealMV expected = bivector_exp(theta / (4 * kPi), 0, 2, c3);
        const double d = std::min(coefficient_distance(l.versor, expected), coefficient_distance(l.versor, -expected));
        EXPECT_LE(d, 1e-12) << theta;
    }
}

TEST(LiftRotation, RoundTripOnRandomRotations) {
    Rng rng(9);
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < 100; ++t) {
            const Eigen::MatrixXd r = random_rotation(n, rng);
            const Lift l = lift_rotation(r);
            EXPECT_LE(max_diff(twisted_adjoint_matrix(l.versor), r), 1e-9);
            EXPECT_EQ(pin_spin_membership(l.versor, 1e-9), Membership::spin);
            EXPECT_LE(l.reflections.size(), static_cast<std::size_t>(n));
            EXPECT_GE(l.versor.scalar_part(), -1e-15);
        }
}

TEST(LiftRotation, ReflectionsGivePinElements) {
    Rng rng(15);
    Eigen::MatrixXd r = random_rotation(4, rng);
    r.col(2) = -r.col(2);
    const Lift l = lift_rotation(r);
    EXPECT_TRUE(l.pin_only);
    EXPECT_EQ(pin_spin_membership(l.versor, 1e-9), Membership::pin);
    EXPECT_LE(max_diff(twisted_adjoint_matrix(l.versor), r), 1e-9);
}

TEST(LiftRotation, RejectsBadInput) {
    EXPECT_THROW(lift_rotation(Eigen::MatrixXd::Ones(2, 3)), std::invalid_argument);
    EXPECT_THROW(lift_rotation(2.0 * Eigen::MatrixXd::Identity(3, 3)), std::invalid_argument);
    EXPECT_THROW(lift_rotation(Eigen::MatrixXd::Identity(17, 17)), std::invalid_argument);
}

TEST(LiftRotation, CanonicalSign) {
    const Signature c3(3, 0);
    const RealMV x = -RealMV::one(c3) + RealMV::blade(c3, 3);
    EXPECT_GT(canonical_sign(x).scalar_part(), 0);
    const RealMV y = -RealMV::blade(c3, 3) + RealMV::blade(c3, 5);
    EXPECT_GT(canonical_sign(y).coefficient(3), 0);
}

TEST(DoubleCover, FullTurnEndsAtMinusOne) {
    for (int n = 2; n <= 5; ++n) {
        const DoubleCoverTrace trace = double_cover_demo(n, 64);
        EXPECT_LE(trace.distance_to_minus_one, 1e-10) << n;
        EXPECT_LE(trace.rotation_deviation, 1e-10) << n;
        EXPECT_LE(coefficient_distance(trace.start, RealMV::one(Signature(n, 0))), 1e-14);
    }
    EXPECT_THROW(double_cover_demo(1, 64), std::invalid_argument);
    EXPECT_THROW(double_cover_demo(3, 1), std::invalid_argument);
}
