#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinlab/linalg.hpp"
#include "spinlab/matrix_rep.hpp"

namespace spinlab {

inline constexpr long kMaxDenseRows = 4096;

/// Periodic derivative: central difference (S+ - S-)/2h, or the Fourier
/// spectral derivative on L equispaced points of the unit circle.
enum class Scheme { central, spectral };

std::string to_string(Scheme s);
/// Accepts "fd", "central" and "spectral".
Scheme scheme_from_string(const std::string& name);

/// Unit torus T^m sampled on L points per axis, h = 1/L. Sites are ordered
/// row-major with axis 0 slowest; spinor components vary fastest.
struct TorusGrid {
    int m = 1;
    int L = 4;

    TorusGrid(int dims, int points);

    double h() const { return 1.0 / L; }
    long sites() const;
    long index(const std::vector<int>& x) const;
    std::vector<int> coords(long index) const;
};

struct LatticeOperator {
    SparseC matrix;
    std::string kind;
    Scheme scheme = Scheme::central;
    int spinor_dim = 1;

    Eigen::Index rows() const { return matrix.rows(); }
};

/// One-dimensional periodic derivative on L points.
Eigen::MatrixXd derivative_matrix(int L, Scheme scheme);

/// D_j = I (x) d/dx (x) I acting on scalar grid functions.
SparseC axis_derivative(const TorusGrid& grid, int axis, Scheme scheme);

/// Delta_h = sum_j D_j^2 for the chosen first-derivative scheme. For central
/// differences this is the width-2 stencil, not the three-point Laplacian.
SparseC matched_laplacian(const TorusGrid& grid, Scheme scheme);

/// D = sum_j D_j (x) A_j.
LatticeOperator build_flat_dirac(const TorusGrid& grid, const MatrixRep& rep, Scheme scheme);

/// max |D^2 + Delta_h (x) I|.
double dirac_square_residual(const LatticeOperator& d, const TorusGrid& grid);

struct ChiralityResiduals {
    double plus = 0;          // max |P+ D P+|
    double minus = 0;         // max |P- D P-|
    double completeness = 0;  // max |P+ + P- - I|
};

/// Projectors P+- = (1 +- omega)/2 on every site.
ChiralityResiduals chirality_splitting(const LatticeOperator& d, const TorusGrid& grid, const CMatrix& omega);

/// For m = 2: D^0 maps S^0 to S^1 and D^1 maps back, with S^1 identified with
/// S^0 through A_1. Then D^0 = D_1 + i D_2 = 2 d/dzbar and D^1 = -2 d/dz.
struct CauchyRiemann {
    SparseC d0;
    SparseC d1;
    double off_block = 0;  // max |P+ D P+|, |P- D P-|
};
CauchyRiemann cauchy_riemann_blocks(const LatticeOperator& d, const TorusGrid& grid, const MatrixRep& rep);

/// U(1) links on an L x L torus; u[axis][x * L + y] sits on the edge from (x, y) in direction axis.
struct GaugeField {
    int L = 0;
    int q = 0;
    std::vector<Complex> u[2];

    Complex link(int axis, int x, int y) const;
};

/// Landau gauge with a twisted boundary column; every plaquette equals exp(2 pi i q / L^2).
GaugeField uniform_flux(int L, int q);

/// U(x) U(x+0) conj(U(x+1)) conj(U(x)) around the plaquette at (x, y).
Complex plaquette(const GaugeField& g, int x, int y);

/// U_mu(x) -> exp(i theta(x)) U_mu(x) exp(-i theta(x + mu)).
GaugeField gauge_transform(const GaugeField& g, const std::vector<double>& theta);

enum class Kernel { naive, wilson, overlap };
std::string to_string(Kernel k);
Kernel kernel_from_string(const std::string& name);

inline constexpr double kDefaultWilsonMass = 1.0;

/// Covariant lattice Dirac operator on T^2 (physical units, spacing h), with
/// T+_mu psi(x) = conj(U_mu(x)) psi(x + mu) and T-_mu = (T+_mu)^*.
/// naive:   sum_mu (T+_mu - T-_mu)/2h (x) A_mu
/// wilson:  sum_mu (T+_mu - T-_mu)/2h (x) g_mu + sum_mu (2 - T+_mu - T-_mu)/2h (x) I, g_mu = -i A_mu
/// overlap: (m0/h) (1 + g5 sign(H_W)), H_W = g5 (h D_W - m0), g5 = omega
LatticeOperator build_twisted_dirac(const GaugeField& gauge, Kernel kernel, double wilson_mass = kDefaultWilsonMass);

/// Hermitian Wilson kernel H_W in lattice units.
CMatrix hermitian_wilson(const GaugeField& gauge, double wilson_mass = kDefaultWilsonMass);

/// max |g5 D + D g5 - (h/m0) D g5 D| for the overlap operator.
double ginsparg_wilson_residual(const LatticeOperator& overlap, int L, double wilson_mass = kDefaultWilsonMass);

struct Spectrum {
    std::vector<Complex> values;  // real parts only when `real` is set
    bool real = false;
    std::string transform;  // "D", "iD", or "general"
};

/// Eigenvalues of D if hermitian, of iD if anti-hermitian, otherwise the full
/// complex spectrum. With `count`, the `count` eigenvalues closest to zero.
/// Sorted ascending by real then imaginary part.
Spectrum spectrum(const LatticeOperator& d, std::optional<int> count = std::nullopt);

struct IndexResult {
    int index = 0;
    bool determinate = true;
    double min_abs_eigenvalue = 0;
    int positive = 0;  // eigenvalues of H_W above zero
    int negative = 0;
};

/// Overlap index -1/2 tr sign(H_W) for the uniform flux q on an L x L torus.
IndexResult spinc_index(int L, int q, double wilson_mass = kDefaultWilsonMass);

/// max |D^2 - nabla* nabla| with nabla* nabla = -sum_j D_j^2 (x) I.
double bochner_untwisted_residual(const TorusGrid& grid, Scheme scheme = Scheme::spectral);

/// a_1 = A sin(2 pi (j x1 + k x2)), a_2 = A cos(2 pi (j x1 + k x2)).
struct FluxMode {
    int j = 2;
    int k = 1;
    double amplitude = 0.3;
};

/// max over band-limited sections of |(D_a^2 - nabla* nabla - R) psi|, with
/// spectral nabla_j = D_j + i a_j and R = 1/2 sum_jk A_j A_k F_jk built from the
/// analytic F_jk = i (d_j a_k - d_k a_j).
double bochner_twisted_residual(int L, const FluxMode& mode, int sections = 4, std::uint64_t seed = 0);

}  // namespace spinlab
