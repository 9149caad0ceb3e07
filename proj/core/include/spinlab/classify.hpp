#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/multivector.hpp"

namespace spinlab {

/// Division algebra (or sum of two copies) underlying a matrix algebra.
enum class Base { R, C, H, RR, CC, HH };

std::string to_string(Base b);
Base base_from_string(const std::string& name);

/// Normal form M_m(base) of a Clifford algebra. Not an isomorphism witness.
struct AlgebraType {
    Base base = Base::R;
    long matrix_size = 1;

    /// Real dimension of M_m(base).
    long real_dimension() const;
    bool is_direct_sum() const { return base == Base::RR || base == Base::CC || base == Base::HH; }
    /// Dimension of the centre over R.
    int center_dimension() const;
    std::string describe() const;

    friend bool operator==(const AlgebraType&, const AlgebraType&) = default;
};

/// eps = e_1 ... e_n for even n; throws for odd n.
Multivector<Rational> volume_element(const Signature& sig);

/// (-1)^{n(n-1)/2} (-1)^r.
int volume_square_sign(const Signature& sig);

/// Cl(r,s) by (1,1)-stripping, mod-8 periodicity, then the base table.
AlgebraType classify_real(int r, int s);

/// Cl_n (x) C: M_{2^k}(C) for n = 2k, M_{2^k}(C) + M_{2^k}(C) for n = 2k+1.
AlgebraType classify_complex(int n);

/// Radon-Hurwitz number rho(n) = 8 alpha + 2^beta, n = odd * 16^alpha * 2^beta.
int radon_rho(long n);

/// Dimension a_n of the irreducible real representations of Cl_n.
long radon_dimension(int n);

struct RadonFamily {
    long n = 0;
    int rho = 0;
    std::vector<Eigen::MatrixXd> matrices;  // rho - 1 real n x n matrices
};

/// rho(n)-1 anticommuting orthogonal complex structures on R^n.
RadonFamily hurwitz_radon_matrices(long n);

/// Real irreducible representation of Cl_d on R^{a_d}: d skew-orthogonal
/// matrices squaring to -I and pairwise anticommuting.
std::vector<Eigen::MatrixXd> real_clifford_generators(int d);

struct RadonCheck {
    double orthogonality = 0;     // max |A^T A - I|
    double square = 0;            // max |A^2 + I|
    double anticommutation = 0;   // max |A_i A_j + A_j A_i|
    bool passed(double tol) const { return orthogonality <= tol && square <= tol && anticommutation <= tol; }
};

RadonCheck check_radon_family(const RadonFamily& family);

}  // namespace spinlab
