#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinlab/linalg.hpp"
#include "spinlab/multivector.hpp"

namespace spinlab {

inline constexpr int kDefaultMaxRepDimension = 12;

/// For odd n the two inequivalent irreducibles differ by the sign of every generator.
enum class Variant { rho, rho_prime };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

/// n complex 2^k x 2^k matrices A_1..A_n with A_i A_j + A_j A_i = -2 delta_ij I.
struct MatrixRep {
    int n = 0;
    Variant variant = Variant::rho;
    std::vector<CMatrix> generators;

    int k() const { return n / 2; }
    Eigen::Index dim() const { return generators.empty() ? 1 : generators.front().rows(); }
};

/// A_{2l-1} = s3^(l-1) (x) i s1 (x) I^(k-l), A_{2l} = s3^(l-1) (x) i s2 (x) I^(k-l),
/// and for odd n, A_{2k+1} = -i s3^(k). rho_prime negates all of them.
MatrixRep pauli_generators(int n, Variant variant = Variant::rho, int max_n = kDefaultMaxRepDimension);

/// Faithful representation of the odd algebra: block-diagonal rho (+) rho'.
MatrixRep odd_direct_sum(int n);

/// Matrix of the blade e_{i1} ... e_{ik}; bit i of the mask is generator A_{i+1}.
CMatrix blade_matrix(Mask mask, const MatrixRep& rep);

/// Extension of e_i -> A_{i+1} to Cl(n,0), complex coefficients allowed.
template <CliffordScalar S>
CMatrix represent(const Multivector<S>& x, const MatrixRep& rep) {
    const Signature& sig = x.signature();
    if (sig.n() != rep.n || sig.s() != 0)
        throw std::invalid_argument("represent: element must live in Cl(n,0) with n = rep.n");
    CMatrix out = CMatrix::Zero(rep.dim(), rep.dim());
    for (const auto& [m, c] : x.terms())
        out += ScalarTraits<S>::to_complex(c) * blade_matrix(m, rep);
    return out;
}

/// omega = i^k A_1 ... A_2k for even n; i^{k+1} A_1 ... A_n for odd n (then +-I).
CMatrix volume_representation(const MatrixRep& rep);

/// Chirality omega for even n; throws for odd n.
CMatrix chirality(const MatrixRep& rep);

struct HalfSpinorProjectors {
    CMatrix plus;
    CMatrix minus;
};
HalfSpinorProjectors half_spinor_projectors(const MatrixRep& rep);

struct RelationResiduals {
    double clifford = 0;        // max |A_i A_j + A_j A_i + 2 delta_ij I|
    double skew_hermitian = 0;  // max |A_i^* + A_i|
    double unitary = 0;         // max |A_i^* A_i - I|
    bool passed(double tol) const { return clifford <= tol && skew_hermitian <= tol && unitary <= tol; }
};
RelationResiduals check_relations(const MatrixRep& rep);

struct FaithfulnessReport {
    double max_trace = 0;  // max |tr A_I| over nonempty I
    long rank = 0;         // rank of the trace Gram matrix of all 2^n products
    long expected = 0;     // 2^n
    bool faithful(double tol = 1e-9) const { return rank == expected && max_trace <= tol; }
};
FaithfulnessReport faithfulness_report(const MatrixRep& rep);
bool faithfulness_check(const MatrixRep& rep);

using ExactMV = Multivector<GaussianRational>;

struct Idempotents {
    int n = 0;
    std::vector<ExactMV> plus;   // p_l^+ = (1 + i e_{2l-1} e_{2l}) / 2
    std::vector<ExactMV> minus;  // p_l^- = (1 - i e_{2l-1} e_{2l}) / 2
    std::vector<std::vector<int>> signs;  // epsilon tuples, entries +-1
    std::vector<ExactMV> family;          // p^eps = prod_l p_l^{eps_l}
};

/// Exact over Q(i); throws for odd n.
Idempotents idempotents(int n);
ExactMV idempotent(int n, const std::vector<int>& eps);

/// Basis (reduced echelon form) of Cl_n^C p^eps.
std::vector<ExactMV> minimal_left_ideal(int n, const std::vector<int>& eps);

/// Exact test that every element of `vectors` lies in span(basis).
bool in_span(const std::vector<ExactMV>& basis, const std::vector<ExactMV>& vectors);

/// Cl_n^C = sum over eps of Cl_n^C p^eps, one ideal per sign tuple.
std::vector<std::vector<ExactMV>> decompose_left_regular(int n);

/// Fock model on Lambda C^k: e_{2l-1} -> a_l^+ - a_l, e_{2l} -> i (a_l^+ + a_l).
/// Basis vectors of Lambda C^k are indexed by masks over k bits.
MatrixRep fock_representation(int n);

/// Antilinear theta(v) = C conj(v) commuting with every generator, theta^2 = sign I.
struct StructuralMap {
    int n = 0;
    CMatrix matrix;
    int sign = 1;

    CVector apply(const CVector& v) const { return matrix * v.conjugate(); }
};
StructuralMap structural_map(int n);

/// Sign of theta^2 predicted by n mod 8: + for 0, 6 and - for 2, 4.
int structural_sign_expected(int n);

struct StructuralResiduals {
    double square = 0;       // max |C conj(C) - sign I|
    double commutation = 0;  // max |C conj(A_j) - A_j C|
};
StructuralResiduals check_structural_map(const StructuralMap& theta, const MatrixRep& rep);

struct Intertwiner {
    bool exists = false;
    bool unique = false;
    CMatrix matrix;  // U with U A_i = B_i U, unit Frobenius norm
    double residual = 0;
    double smallest_singular = 0;
    double second_singular = 0;
    std::string reason;
};

/// Null space of U |-> (U A_i - B_i U)_i through an SVD of the stacked system.
Intertwiner intertwiner(const MatrixRep& a, const MatrixRep& b);

}  // namespace spinlab
