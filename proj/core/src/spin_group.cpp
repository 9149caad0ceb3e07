#include "spinlab/spin_group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinlab {

std::string to_string(Membership m) {
    switch (m) {
    case Membership::none: return "none";
    case Membership::pin: return "pin";
    case Membership::spin: return "spin";
    }
    return "?";
}

RealMV bivector_exp(double t, int i, int j, const Signature& sig) {
    if (i == j)
        throw std::invalid_argument("bivector_exp: indices must differ");
    if (i < 0 || j < 0 || i >= sig.n() || j >= sig.n())
        throw std::invalid_argument("bivector_exp: index out of range");
    const double angle = 2.0 * std::numbers::pi * t;
    const RealMV plane = RealMV::basis_vector(sig, i) * RealMV::basis_vector(sig, j);
    return RealMV::scalar(sig, std::cos(angle)) + std::sin(angle) * plane;
}

Eigen::MatrixXd plane_rotation(int n, int i, int j, double angle) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
    r(i, i) = std::cos(angle);
    r(j, j) = std::cos(angle);
    r(j, i) = std::sin(angle);
    r(i, j) = -std::sin(angle);
    return r;
}

Eigen::MatrixXd reflection_matrix(const Eigen::VectorXd& u) {
    return Eigen::MatrixXd::Identity(u.size(), u.size()) - 2.0 * u * u.transpose();
}

RealMV canonical_sign(RealMV x, double tol) {
    const double s = x.scalar_part();
    if (std::abs(s) > tol)
        return s > 0 ? x : -x;
    for (const auto& [m, c] : x.terms())
        if (std::abs(c) > tol)
            return c > 0 ? x : -x;
    return x;
}

double coefficient_distance(const RealMV& a, const RealMV& b) {
    const RealMV d = a - b;
    double sum = 0.0;
    for (const auto& [m, c] : d.terms())
        sum += c * c;
    return std::sqrt(sum);
}

Lift lift_rotation(const Eigen::MatrixXd& r) {
    const Eigen::Index n = r.rows();
    if (n != r.cols() || n < 1)
        throw std::invalid_argument("lift_rotation: matrix must be square");
    if (n > kDefaultMaxDimension)
        throw std::invalid_argument("lift_rotation: dimension exceeds cap");
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    if ((r.transpose() * r - id).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("lift_rotation: matrix is not orthogonal");
    const double det = r.determinant();

    Lift out;
    out.pin_only = det < 0;
    Eigen::MatrixXd m = r;
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::VectorXd diff = m.col(j) - id.col(j);
        const double len = diff.norm();
        if (len < 1e-12)
            continue;
        const Eigen::VectorXd u = diff / len;
        m = reflection_matrix(u) * m;
        out.reflections.push_back(u);
    }
    const Signature sig(static_cast<int>(n), 0);
    RealMV x = RealMV::one(sig);
    for (const auto& u : out.reflections)
        x = x * RealMV::vector(sig, std::vector<double>(u.data(), u.data() + n));
    out.versor = canonical_sign(x.pruned(1e-15));
    return out;
}

DoubleCoverTrace double_cover_demo(int n, int steps) {
    if (n < 2)
        throw std::invalid_argument("double_cover_demo needs n >= 2");
    if (steps < 2)
        throw std::invalid_argument("double_cover_demo needs at least 2 steps");
    const Signature sig(n, 0);
    DoubleCoverTrace out;
    out.n = n;
    out.steps = steps;
    RealMV previous = lift_rotation(Eigen::MatrixXd::Identity(n, n)).versor;
    out.start = previous;
    for (int s = 1; s <= steps; ++s) {
        const double t = 0.5 * s / steps;
        const Eigen::MatrixXd rot = twisted_adjoint_matrix(bivector_exp(t, 0, 1, sig));
        const RealMV lift = lift_rotation(rot).versor;
        previous = coefficient_distance(lift, previous) <= coefficient_distance(-lift, previous) ? lift : -lift;
    }
    out.end = previous;
    out.end_rotation = twisted_adjoint_matrix(previous);
    out.distance_to_minus_one = coefficient_distance(previous, -RealMV::one(sig));
    out.rotation_deviation = (out.end_rotation - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace spinlab
