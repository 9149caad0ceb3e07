#include "spinlab/dirac_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace spinlab {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

SparseC to_sparse(const CMatrix& m) {
    SparseC out = m.sparseView();
    out.makeCompressed();
    return out;
}

SparseC diagonal(const std::vector<Complex>& d) {
    SparseC out(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    std::vector<Eigen::Triplet<Complex>> t;
    for (std::size_t i = 0; i < d.size(); ++i)
        t.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), d[i]);
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

long ipow(long base, int e) {
    long out = 1;
    for (int i = 0; i < e; ++i)
        out *= base;
    return out;
}

int wrap(int x, int L) { return ((x % L) + L) % L; }

// Links transport from x to x + mu, so pulling psi(x + mu) back to x uses the
// inverse: T+_mu psi(x) = conj(U_mu(x)) psi(x + mu). With this reading a total
// holonomy exp(2 pi i q) is a line bundle of degree q.
SparseC covariant_shift(const GaugeField& g, int axis) {
    const int L = g.L;
    std::vector<Eigen::Triplet<Complex>> t;
    for (int x = 0; x < L; ++x)
        for (int y = 0; y < L; ++y) {
            const int xn = axis == 0 ? wrap(x + 1, L) : x, yn = axis == 1 ? wrap(y + 1, L) : y;
            t.emplace_back(x * L + y, xn * L + yn, std::conj(g.link(axis, x, y)));
        }
    SparseC out(L * L, L * L);
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

CMatrix two_dim_chirality() { return chirality(pauli_generators(2)); }

void require_dense_size(Eigen::Index rows) {
    if (rows > kMaxDenseRows)
        throw std::invalid_argument("operator has " + std::to_string(rows) + " rows; dense eigensolves are capped at " +
                                    std::to_string(kMaxDenseRows));
}

}  // namespace

std::string to_string(Scheme s) { return s == Scheme::central ? "fd" : "spectral"; }

Scheme scheme_from_string(const std::string& name) {
    if (name == "fd" || name == "central")
        return Scheme::central;
    if (name == "spectral")
        return Scheme::spectral;
    throw std::invalid_argument("unknown derivative scheme: " + name);
}

std::string to_string(Kernel k) {
    switch (k) {
    case Kernel::naive: return "naive";
    case Kernel::wilson: return "wilson";
    case Kernel::overlap: return "overlap";
    }
    return "?";
}

Kernel kernel_from_string(const std::string& name) {
    for (Kernel k : {Kernel::naive, Kernel::wilson, Kernel::overlap})
        if (to_string(k) == name)
            return k;
    throw std::invalid_argument("unknown kernel: " + name);
}

TorusGrid::TorusGrid(int dims, int points) : m(dims), L(points) {
    if (dims < 1)
        throw std::invalid_argument("torus dimension must be at least 1");
    if (points < 4 || points % 2)
        throw std::invalid_argument("grid size L must be even and at least 4");
    if (dims > 6 || ipow(points, dims) > (1L << 24))
        throw std::invalid_argument("grid too large");
}

long TorusGrid::sites() const { return ipow(L, m); }

long TorusGrid::index(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != m)
        throw std::invalid_argument("coordinate has wrong dimension");
    long out = 0;
    for (int a = 0; a < m; ++a)
        out = out * L + wrap(x[a], L);
    return out;
}

std::vector<int> TorusGrid::coords(long index) const {
    std::vector<int> x(m);
    for (int a = m - 1; a >= 0; --a) {
        x[a] = static_cast<int>(index % L);
        index /= L;
    }
    return x;
}

Eigen::MatrixXd derivative_matrix(int L, Scheme scheme) {
    if (L < 2)
        throw std::invalid_argument("derivative_matrix needs L >= 2");
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(L, L);
    if (scheme == Scheme::central) {
        for (int i = 0; i < L; ++i) {
            d(i, wrap(i + 1, L)) += L / 2.0;
            d(i, wrap(i - 1, L)) -= L / 2.0;
        }
        return d;
    }
    if (L % 2)
        throw std::invalid_argument("spectral derivative needs even L");
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            if (i == j)
                continue;
            const int diff = i - j;
            const double sign = (diff % 2) ? -1.0 : 1.0;
            d(i, j) = kPi * sign / std::tan(kPi * diff / L);
        }
    return d;
}

SparseC axis_derivative(const TorusGrid& grid, int axis, Scheme scheme) {
    if (axis < 0 || axis >= grid.m)
        throw std::invalid_argument("axis out of range");
    const SparseC d1 = to_sparse(derivative_matrix(grid.L, scheme).cast<Complex>());
    return kron(kron(sparse_identity(ipow(grid.L, axis)), d1), sparse_identity(ipow(grid.L, grid.m - axis - 1)));
}

SparseC matched_laplacian(const TorusGrid& grid, Scheme scheme) {
    SparseC out(grid.sites(), grid.sites());
    for (int a = 0; a < grid.m; ++a) {
        const SparseC d = axis_derivative(grid, a, scheme);
        out += SparseC(d * d);
    }
    return out;
}

LatticeOperator build_flat_dirac(const TorusGrid& grid, const MatrixRep& rep, Scheme scheme) {
    if (rep.n != grid.m)
        throw std::invalid_argument("representation dimension does not match the torus dimension");
    LatticeOperator out;
    out.kind = "flat-dirac";
    out.scheme = scheme;
    out.spinor_dim = static_cast<int>(rep.dim());
    out.matrix = SparseC(grid.sites() * rep.dim(), grid.sites() * rep.dim());
    for (int j = 0; j < grid.m; ++j)
        out.matrix += kron(axis_derivative(grid, j, scheme), to_sparse(rep.generators[j]));
    out.matrix.prune(Complex{0.0, 0.0});
    return out;
}

double dirac_square_residual(const LatticeOperator& d, const TorusGrid& grid) {
    const SparseC sq = d.matrix * d.matrix;
    const SparseC lap = kron(matched_laplacian(grid, d.scheme), sparse_identity(d.spinor_dim));
    return max_abs(SparseC(sq + lap));
}

ChiralityResiduals chirality_splitting(const LatticeOperator& d, const TorusGrid& grid, const CMatrix& omega) {
    if (grid.m % 2)
        throw std::invalid_argument("chirality splitting needs even m");
    if (omega.rows() != d.spinor_dim)
        throw std::invalid_argument("chirality matrix has wrong size");
    const CMatrix id = CMatrix::Identity(omega.rows(), omega.cols());
    const SparseC sites = sparse_identity(grid.sites());
    const SparseC plus = kron(sites, to_sparse(0.5 * (id + omega)));
    const SparseC minus = kron(sites, to_sparse(0.5 * (id - omega)));
    ChiralityResiduals out;
    out.plus = max_abs(SparseC(plus * d.matrix * plus));
    out.minus = max_abs(SparseC(minus * d.matrix * minus));
    out.completeness = max_abs(SparseC(plus + minus - kron(sites, sparse_identity(omega.rows()))));
    return out;
}

CauchyRiemann cauchy_riemann_blocks(const LatticeOperator& d, const TorusGrid& grid, const MatrixRep& rep) {
    if (grid.m != 2 || d.spinor_dim != 2 || rep.n != 2)
        throw std::invalid_argument("Cauchy-Riemann blocks need m = 2");
    const CMatrix omega = chirality(rep);
    const int plus = omega(0, 0).real() > 0 ? 0 : 1, minus = 1 - plus;
    const Complex mu = rep.generators[0](minus, plus);
    std::vector<Eigen::Triplet<Complex>> t0, t1;
    CauchyRiemann out;
    for (int k = 0; k < d.matrix.outerSize(); ++k)
        for (SparseC::InnerIterator it(d.matrix, k); it; ++it) {
            const auto r = it.row(), c = it.col();
            const int a = static_cast<int>(r % 2), b = static_cast<int>(c % 2);
            if (a == minus && b == plus)
                t0.emplace_back(r / 2, c / 2, it.value() / mu);
            else if (a == plus && b == minus)
                t1.emplace_back(r / 2, c / 2, it.value() * mu);
            else
                out.off_block = std::max(out.off_block, std::abs(it.value()));
        }
    out.d0 = SparseC(grid.sites(), grid.sites());
    out.d1 = SparseC(grid.sites(), grid.sites());
    out.d0.setFromTriplets(t0.begin(), t0.end());
    out.d1.setFromTriplets(t1.begin(), t1.end());
    return out;
}

Complex GaugeField::link(int axis, int x, int y) const {
    if (axis < 0 || axis > 1)
        throw std::invalid_argument("axis must be 0 or 1");
    return u[axis][static_cast<std::size_t>(wrap(x, L) * L + wrap(y, L))];
}

GaugeField uniform_flux(int L, int q) {
    if (L < 4 || L % 2)
        throw std::invalid_argument("grid size L must be even and at least 4");
    GaugeField g;
    g.L = L;
    g.q = q;
    const double l2 = static_cast<double>(L) * L;
    for (auto& links : g.u)
        links.assign(static_cast<std::size_t>(L) * L, Complex{1.0, 0.0});
    for (int x = 0; x < L; ++x)
        for (int y = 0; y < L; ++y) {
            g.u[0][x * L + y] = std::polar(1.0, -2.0 * kPi * q * y / l2);
            if (y == L - 1)
                g.u[1][x * L + y] = std::polar(1.0, 2.0 * kPi * q * x / L);
        }
    return g;
}

Complex plaquette(const GaugeField& g, int x, int y) {
    return g.link(0, x, y) * g.link(1, x + 1, y) * std::conj(g.link(0, x, y + 1)) * std::conj(g.link(1, x, y));
}

GaugeField gauge_transform(const GaugeField& g, const std::vector<double>& theta) {
    const int L = g.L;
    if (static_cast<int>(theta.size()) != L * L)
        throw std::invalid_argument("gauge transform needs one angle per site");
    GaugeField out = g;
    for (int x = 0; x < L; ++x)
        for (int y = 0; y < L; ++y) {
            const double here = theta[x * L + y];
            out.u[0][x * L + y] *= std::polar(1.0, here - theta[wrap(x + 1, L) * L + y]);
            out.u[1][x * L + y] *= std::polar(1.0, here - theta[x * L + wrap(y + 1, L)]);
        }
    return out;
}

namespace {

// Wilson operator in lattice units: sum g_mu (T+ - T-)/2 + sum (2 - T+ - T-)/2.
SparseC wilson_lattice_units(const GaugeField& gauge) {
    const MatrixRep rep = pauli_generators(2);
    const long sites = static_cast<long>(gauge.L) * gauge.L;
    SparseC out(2 * sites, 2 * sites);
    const SparseC id_sites = sparse_identity(sites);
    for (int mu = 0; mu < 2; ++mu) {
        const SparseC fwd = covariant_shift(gauge, mu);
        const SparseC bwd = fwd.adjoint();
        const SparseC gamma = to_sparse(CMatrix(-kI * rep.generators[mu]));
        out += kron(SparseC(0.5 * (fwd - bwd)), gamma);
        out += kron(SparseC(id_sites - 0.5 * (fwd + bwd)), sparse_identity(2));
    }
    return out;
}

CMatrix gamma5(long sites) { return kron(CMatrix(CMatrix::Identity(sites, sites)), two_dim_chirality()); }

struct SignFunction {
    CMatrix sign;
    double min_abs = 0;
    int positive = 0;
    int negative = 0;
};

SignFunction hermitian_sign(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
    const auto& lambda = eig.eigenvalues();
    SignFunction out;
    out.min_abs = lambda.cwiseAbs().minCoeff();
    Eigen::VectorXd s(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        s(i) = lambda(i) > 0 ? 1.0 : -1.0;
        (lambda(i) > 0 ? out.positive : out.negative)++;
    }
    out.sign = eig.eigenvectors() * s.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
    return out;
}

}  // namespace

CMatrix hermitian_wilson(const GaugeField& gauge, double wilson_mass) {
    const long sites = static_cast<long>(gauge.L) * gauge.L;
    require_dense_size(2 * sites);
    const CMatrix dw = CMatrix(wilson_lattice_units(gauge));
    const CMatrix h = gamma5(sites) * (dw - wilson_mass * CMatrix::Identity(2 * sites, 2 * sites));
    return 0.5 * (h + h.adjoint());
}

LatticeOperator build_twisted_dirac(const GaugeField& gauge, Kernel kernel, double wilson_mass) {
    const double h = 1.0 / gauge.L;
    const long sites = static_cast<long>(gauge.L) * gauge.L;
    LatticeOperator out;
    out.scheme = Scheme::central;
    out.spinor_dim = 2;
    out.kind = "twisted-" + to_string(kernel);
    switch (kernel) {
    case Kernel::naive: {
        const MatrixRep rep = pauli_generators(2);
        out.matrix = SparseC(2 * sites, 2 * sites);
        for (int mu = 0; mu < 2; ++mu) {
            const SparseC fwd = covariant_shift(gauge, mu);
            const SparseC bwd = fwd.adjoint();
            out.matrix += kron(SparseC((fwd - bwd) * Complex(0.5 / h)), to_sparse(rep.generators[mu]));
        }
        break;
    }
    case Kernel::wilson:
        out.matrix = wilson_lattice_units(gauge) * Complex(1.0 / h);
        break;
    case Kernel::overlap: {
        const SignFunction s = hermitian_sign(hermitian_wilson(gauge, wilson_mass));
        if (s.min_abs < 1e-8)
            throw std::runtime_error("overlap operator undefined: H_W has a near-zero eigenvalue");
        const CMatrix id = CMatrix::Identity(2 * sites, 2 * sites);
        out.matrix = to_sparse((wilson_mass / h) * (id + gamma5(sites) * s.sign));
        break;
    }
    }
    out.matrix.prune(Complex{0.0, 0.0});
    return out;
}

double ginsparg_wilson_residual(const LatticeOperator& overlap, int L, double wilson_mass) {
    const long sites = static_cast<long>(L) * L;
    const CMatrix d = CMatrix(overlap.matrix);
    const CMatrix g5 = gamma5(sites);
    const double h = 1.0 / L;
    return max_abs(CMatrix(g5 * d + d * g5 - (h / wilson_mass) * d * g5 * d));
}

Spectrum spectrum(const LatticeOperator& d, std::optional<int> count) {
    require_dense_size(d.rows());
    const CMatrix m = CMatrix(d.matrix);
    const double scale = std::max(1.0, max_abs(m));
    const double herm = max_abs(CMatrix(m - m.adjoint())), anti = max_abs(CMatrix(m + m.adjoint()));
    Spectrum out;
    if (herm <= 1e-10 * scale || anti <= 1e-10 * scale) {
        out.real = true;
        out.transform = herm <= 1e-10 * scale ? "D" : "iD";
        const CMatrix target = out.transform == "D" ? m : CMatrix(kI * m);
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(0.5 * (target + target.adjoint()), Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
            out.values.emplace_back(eig.eigenvalues()(i), 0.0);
    } else {
        out.transform = "general";
        Eigen::ComplexEigenSolver<CMatrix> eig(m, false);
        for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
            out.values.push_back(eig.eigenvalues()(i));
    }
    auto by_value = [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    };
    if (count && *count >= 0 && static_cast<std::size_t>(*count) < out.values.size()) {
        std::stable_sort(out.values.begin(), out.values.end(), by_value);
        std::stable_sort(out.values.begin(), out.values.end(),
                         [](const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); });
        out.values.resize(static_cast<std::size_t>(*count));
    }
    std::sort(out.values.begin(), out.values.end(), by_value);
    return out;
}

IndexResult spinc_index(int L, int q, double wilson_mass) {
    if (L < 4 || L % 2)
        throw std::invalid_argument("grid size L must be even and at least 4");
    if (4L * std::abs(q) > static_cast<long>(L) * L)
        throw std::invalid_argument("flux too dense for the lattice: need |q| <= L^2/4");
    const SignFunction s = hermitian_sign(hermitian_wilson(uniform_flux(L, q), wilson_mass));
    IndexResult out;
    out.min_abs_eigenvalue = s.min_abs;
    out.determinate = s.min_abs >= 1e-8;
    out.positive = s.positive;
    out.negative = s.negative;
    out.index = (s.negative - s.positive) / 2;
    return out;
}

double bochner_untwisted_residual(const TorusGrid& grid, Scheme scheme) {
    const MatrixRep rep = pauli_generators(grid.m);
    const LatticeOperator d = build_flat_dirac(grid, rep, scheme);
    SparseC rough(grid.sites(), grid.sites());
    for (int j = 0; j < grid.m; ++j) {
        const SparseC dj = axis_derivative(grid, j, scheme);
        rough -= SparseC(dj * dj);
    }
    const SparseC connection_laplacian = kron(rough, sparse_identity(rep.dim()));
    return max_abs(SparseC(d.matrix * d.matrix - connection_laplacian));
}

double bochner_twisted_residual(int L, const FluxMode& mode, int sections, std::uint64_t seed) {
    const TorusGrid grid(2, L);
    const MatrixRep rep = pauli_generators(2);
    const long sites = grid.sites();
    std::vector<Complex> a1(sites), a2(sites), f12(sites);
    for (long s = 0; s < sites; ++s) {
        const auto x = grid.coords(s);
        const double x1 = x[0] * grid.h(), x2 = x[1] * grid.h();
        const double phase = 2.0 * kPi * (mode.j * x1 + mode.k * x2);
        a1[s] = mode.amplitude * std::sin(phase);
        a2[s] = mode.amplitude * std::cos(phase);
        const double d1a2 = -2.0 * kPi * mode.j * mode.amplitude * std::sin(phase);
        const double d2a1 = 2.0 * kPi * mode.k * mode.amplitude * std::cos(phase);
        f12[s] = kI * (d1a2 - d2a1);
    }
    const SparseC nabla1 = axis_derivative(grid, 0, Scheme::spectral) + kI * diagonal(a1);
    const SparseC nabla2 = axis_derivative(grid, 1, Scheme::spectral) + kI * diagonal(a2);
    const SparseC dirac = kron(nabla1, to_sparse(rep.generators[0])) + kron(nabla2, to_sparse(rep.generators[1]));
    const SparseC rough = kron(SparseC(-(nabla1 * nabla1) - nabla2 * nabla2), sparse_identity(2));
    const SparseC curvature = kron(diagonal(f12), to_sparse(CMatrix(rep.generators[0] * rep.generators[1])));

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const int band = L / 4;
    double worst = 0.0;
    for (int n = 0; n < sections; ++n) {
        CVector psi = CVector::Zero(2 * sites);
        for (int k1 = -band; k1 <= band; ++k1)
            for (int k2 = -band; k2 <= band; ++k2) {
                const Complex c0(normal(rng), normal(rng)), c1(normal(rng), normal(rng));
                for (long s = 0; s < sites; ++s) {
                    const auto x = grid.coords(s);
                    const Complex wave = std::polar(1.0, 2.0 * kPi * (k1 * x[0] + k2 * x[1]) / L);
                    psi(2 * s) += c0 * wave;
                    psi(2 * s + 1) += c1 * wave;
                }
            }
        psi /= psi.cwiseAbs().maxCoeff();
        const CVector lhs = dirac * CVector(dirac * psi);
        const CVector rhs = rough * psi + curvature * psi;
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace spinlab
