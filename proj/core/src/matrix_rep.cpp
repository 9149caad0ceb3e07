#include "spinlab/matrix_rep.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "spinlab/exact_linalg.hpp"

namespace spinlab {

namespace {

const Complex I{0.0, 1.0};

CMatrix sigma(int which) {
    CMatrix s(2, 2);
    switch (which) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    default: s << 1, 0, 0, -1; break;
    }
    return s;
}

CMatrix tensor_power(const CMatrix& m, int count) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int i = 0; i < count; ++i)
        out = kron(out, m);
    return out;
}

void require_even(int n, const char* what) {
    if (n < 0 || n % 2)
        throw std::invalid_argument(std::string(what) + " needs an even, non-negative n");
}

std::vector<GaussianRational> coefficients(const ExactMV& x) {
    std::vector<GaussianRational> out(x.signature().blade_count());
    for (const auto& [m, c] : x.terms())
        out[m] = c;
    return out;
}

ExactMV from_coefficients(const Signature& sig, const std::vector<GaussianRational>& v) {
    ExactMV out(sig);
    for (std::size_t m = 0; m < v.size(); ++m)
        out.add_term(static_cast<Mask>(m), v[m]);
    return out;
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::rho ? "rho" : "rhoprime"; }

Variant variant_from_string(const std::string& name) {
    if (name == "rho")
        return Variant::rho;
    if (name == "rhoprime")
        return Variant::rho_prime;
    throw std::invalid_argument("unknown variant: " + name);
}

MatrixRep pauli_generators(int n, Variant variant, int max_n) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument("pauli_generators: n must lie in [1, " + std::to_string(max_n) + "]");
    MatrixRep rep;
    rep.n = n;
    rep.variant = n % 2 ? variant : Variant::rho;
    const int k = n / 2;
    const CMatrix s3 = sigma(3), id2 = CMatrix::Identity(2, 2);
    for (int l = 1; l <= k; ++l) {
        const CMatrix left = tensor_power(s3, l - 1), right = tensor_power(id2, k - l);
        rep.generators.push_back(kron(kron(left, CMatrix(I * sigma(1))), right));
        rep.generators.push_back(kron(kron(left, CMatrix(I * sigma(2))), right));
    }
    if (n % 2)
        rep.generators.push_back(-I * tensor_power(s3, k));
    if (rep.variant == Variant::rho_prime)
        for (auto& g : rep.generators)
            g = -g;
    return rep;
}

MatrixRep odd_direct_sum(int n) {
    if (n % 2 == 0)
        throw std::invalid_argument("odd_direct_sum needs odd n");
    const MatrixRep a = pauli_generators(n, Variant::rho), b = pauli_generators(n, Variant::rho_prime);
    MatrixRep out;
    out.n = n;
    const Eigen::Index d = a.dim();
    for (int j = 0; j < n; ++j) {
        CMatrix g = CMatrix::Zero(2 * d, 2 * d);
        g.topLeftCorner(d, d) = a.generators[j];
        g.bottomRightCorner(d, d) = b.generators[j];
        out.generators.push_back(std::move(g));
    }
    return out;
}

CMatrix blade_matrix(Mask mask, const MatrixRep& rep) {
    CMatrix out = CMatrix::Identity(rep.dim(), rep.dim());
    for (int i = 0; i < rep.n; ++i)
        if (mask & (Mask{1} << i))
            out = out * rep.generators[i];
    return out;
}

CMatrix volume_representation(const MatrixRep& rep) {
    const int power = (rep.n + 1) / 2;
    Complex phase = 1.0;
    for (int i = 0; i < power; ++i)
        phase *= I;
    return phase * blade_matrix(rep.n == 0 ? 0u : static_cast<Mask>((std::uint64_t{1} << rep.n) - 1), rep);
}

CMatrix chirality(const MatrixRep& rep) {
    if (rep.n % 2)
        throw std::invalid_argument("chirality is defined for even n; odd n is fixed by the variant");
    return volume_representation(rep);
}

HalfSpinorProjectors half_spinor_projectors(const MatrixRep& rep) {
    const CMatrix w = chirality(rep), id = CMatrix::Identity(rep.dim(), rep.dim());
    return {0.5 * (id + w), 0.5 * (id - w)};
}

RelationResiduals check_relations(const MatrixRep& rep) {
    RelationResiduals out;
    const CMatrix id = CMatrix::Identity(rep.dim(), rep.dim());
    for (int i = 0; i < rep.n; ++i) {
        const CMatrix& a = rep.generators[i];
        out.skew_hermitian = std::max(out.skew_hermitian, max_abs(CMatrix(a.adjoint() + a)));
        out.unitary = std::max(out.unitary, max_abs(CMatrix(a.adjoint() * a - id)));
        for (int j = i; j < rep.n; ++j) {
            const CMatrix& b = rep.generators[j];
            CMatrix anti = a * b + b * a;
            if (i == j)
                anti += 2.0 * id;
            out.clifford = std::max(out.clifford, max_abs(anti));
        }
    }
    return out;
}

FaithfulnessReport faithfulness_report(const MatrixRep& rep) {
    FaithfulnessReport out;
    const std::size_t count = std::size_t{1} << rep.n;
    out.expected = static_cast<long>(count);
    const Eigen::Index d = rep.dim();
    // Column I holds vec(A_I); the Gram matrix is the trace inner product tr(A_I^* A_J).
    CMatrix stacked(d * d, static_cast<Eigen::Index>(count));
    std::vector<CMatrix> products(count);
    products[0] = CMatrix::Identity(d, d);
    for (std::size_t m = 1; m < count; ++m) {
        const int top = std::bit_width(m) - 1;
        products[m] = products[m ^ (std::size_t{1} << top)] * rep.generators[top];
        out.max_trace = std::max(out.max_trace, std::abs(products[m].trace()));
    }
    for (std::size_t m = 0; m < count; ++m)
        stacked.col(static_cast<Eigen::Index>(m)) = products[m].reshaped();
    const CMatrix gram = stacked.adjoint() * stacked / static_cast<double>(d);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram, Eigen::EigenvaluesOnly);
    const double top = eig.eigenvalues().cwiseAbs().maxCoeff();
    out.rank = (eig.eigenvalues().array() > 1e-9 * std::max(top, 1.0)).count();
    return out;
}

bool faithfulness_check(const MatrixRep& rep) { return faithfulness_report(rep).faithful(); }

ExactMV idempotent(int n, const std::vector<int>& eps) {
    require_even(n, "idempotent");
    if (static_cast<int>(eps.size()) != n / 2)
        throw std::invalid_argument("idempotent: need one sign per generator pair");
    const Signature sig(n, 0);
    const GaussianRational half(Rational(1, 2));
    ExactMV out = ExactMV::one(sig);
    for (int l = 0; l < n / 2; ++l) {
        if (eps[l] != 1 && eps[l] != -1)
            throw std::invalid_argument("idempotent: signs must be +1 or -1");
        const Mask pair = Mask{3} << (2 * l);
        const GaussianRational c(0, Rational(eps[l], 2));
        out = out * (ExactMV::scalar(sig, half) + ExactMV::blade(sig, pair, c));
    }
    return out;
}

Idempotents idempotents(int n) {
    require_even(n, "idempotents");
    const int k = n / 2;
    Idempotents out;
    out.n = n;
    for (int l = 0; l < k; ++l) {
        const Signature sig(n, 0);
        const Mask pair = Mask{3} << (2 * l);
        const GaussianRational half(Rational(1, 2));
        out.plus.push_back(ExactMV::scalar(sig, half) + ExactMV::blade(sig, pair, GaussianRational(0, Rational(1, 2))));
        out.minus.push_back(ExactMV::scalar(sig, half) + ExactMV::blade(sig, pair, GaussianRational(0, Rational(-1, 2))));
    }
    for (unsigned bits = 0; bits < (1u << k); ++bits) {
        std::vector<int> eps(k);
        for (int l = 0; l < k; ++l)
            eps[l] = (bits >> l) & 1u ? -1 : 1;
        out.family.push_back(idempotent(n, eps));
        out.signs.push_back(std::move(eps));
    }
    return out;
}

std::vector<ExactMV> minimal_left_ideal(int n, const std::vector<int>& eps) {
    const ExactMV p = idempotent(n, eps);
    const Signature& sig = p.signature();
    DenseRows<GaussianRational> rows;
    for (Mask m = 0; m < sig.blade_count(); ++m)
        rows.push_back(coefficients(ExactMV::blade(sig, m) * p));
    const auto reduced = row_reduce(std::move(rows));
    std::vector<ExactMV> basis;
    for (const auto& r : reduced.rows)
        basis.push_back(from_coefficients(sig, r));
    return basis;
}

bool in_span(const std::vector<ExactMV>& basis, const std::vector<ExactMV>& vectors) {
    if (basis.empty())
        return std::all_of(vectors.begin(), vectors.end(), [](const ExactMV& v) { return v.is_zero(); });
    DenseRows<GaussianRational> rows;
    for (const auto& b : basis)
        rows.push_back(coefficients(b));
    const std::size_t base_rank = rank(rows);
    for (const auto& v : vectors)
        rows.push_back(coefficients(v));
    return rank(rows) == base_rank;
}

std::vector<std::vector<ExactMV>> decompose_left_regular(int n) {
    const Idempotents ids = idempotents(n);
    std::vector<std::vector<ExactMV>> out;
    for (const auto& eps : ids.signs)
        out.push_back(minimal_left_ideal(n, eps));
    return out;
}

MatrixRep fock_representation(int n) {
    require_even(n, "fock_representation");
    const int k = n / 2;
    const Eigen::Index dim = Eigen::Index{1} << k;
    MatrixRep rep;
    rep.n = n;
    for (int l = 0; l < k; ++l) {
        CMatrix create = CMatrix::Zero(dim, dim), annihilate = CMatrix::Zero(dim, dim);
        const unsigned bit = 1u << l;
        for (Eigen::Index m = 0; m < dim; ++m) {
            const unsigned mask = static_cast<unsigned>(m);
            const double sign = std::popcount(mask & (bit - 1)) % 2 ? -1.0 : 1.0;
            if (mask & bit)
                annihilate(mask ^ bit, m) = sign;
            else
                create(mask | bit, m) = sign;
        }
        rep.generators.push_back(create - annihilate);
        rep.generators.push_back(I * (create + annihilate));
    }
    return rep;
}

int structural_sign_expected(int n) {
    require_even(n, "structural_sign_expected");
    const int r = n % 8;
    return (r == 0 || r == 6) ? 1 : -1;
}

StructuralMap structural_map(int n) {
    require_even(n, "structural_map");
    if (n == 0)
        return {0, CMatrix::Identity(1, 1), 1};
    const MatrixRep rep = pauli_generators(n);
    const int k = n / 2;
    // Generators built from i s1 are purely imaginary, those from i s2 are real.
    // C must anticommute with the first kind and commute with the second; the
    // product of one kind achieves this for the right parity of k.
    CMatrix c = CMatrix::Identity(rep.dim(), rep.dim());
    for (int l = 0; l < k; ++l)
        c = c * rep.generators[2 * l + (k % 2 ? 1 : 0)];
    StructuralMap out;
    out.n = n;
    out.matrix = c;
    const CMatrix sq = c * c.conjugate();
    out.sign = sq(0, 0).real() > 0 ? 1 : -1;
    return out;
}

StructuralResiduals check_structural_map(const StructuralMap& theta, const MatrixRep& rep) {
    StructuralResiduals out;
    const CMatrix& c = theta.matrix;
    const CMatrix id = CMatrix::Identity(c.rows(), c.cols());
    out.square = max_abs(CMatrix(c * c.conjugate() - static_cast<double>(theta.sign) * id));
    for (const auto& a : rep.generators)
        out.commutation = std::max(out.commutation, max_abs(CMatrix(c * a.conjugate() - a * c)));
    return out;
}

Intertwiner intertwiner(const MatrixRep& a, const MatrixRep& b) {
    if (a.n != b.n || a.dim() != b.dim())
        throw std::invalid_argument("intertwiner: representations differ in n or size");
    Intertwiner out;
    if (a.n % 2 && a.variant != b.variant) {
        out.reason = "inequivalent: the volume element acts as +I in one variant and -I in the other";
        return out;
    }
    const Eigen::Index d = a.dim();
    const CMatrix id = CMatrix::Identity(d, d);
    // vec(U A) = (A^T (x) I) vec U and vec(B U) = (I (x) B) vec U.
    CMatrix system(d * d * a.n, d * d);
    for (int i = 0; i < a.n; ++i)
        system.middleRows(i * d * d, d * d) = kron(CMatrix(a.generators[i].transpose()), id) - kron(id, b.generators[i]);
    Eigen::BDCSVD<CMatrix> svd(system, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Eigen::Index last = sv.size() - 1;
    out.smallest_singular = sv(last);
    out.second_singular = last > 0 ? sv(last - 1) : std::numeric_limits<double>::infinity();
    if (out.smallest_singular >= 1e-10) {
        out.reason = "no nonzero solution of U A_i = B_i U";
        return out;
    }
    out.exists = true;
    out.unique = out.second_singular > 1e-6;
    CMatrix u = svd.matrixV().col(last).reshaped(d, d);
    Eigen::Index row = 0, col = 0;
    u.cwiseAbs().maxCoeff(&row, &col);
    u *= std::conj(u(row, col)) / std::abs(u(row, col));
    u /= u.norm();
    out.matrix = u;
    for (int i = 0; i < a.n; ++i)
        out.residual = std::max(out.residual, max_abs(CMatrix(u * a.generators[i] - b.generators[i] * u)));
    if (!out.unique)
        out.reason = "solution space has dimension > 1; representations are reducible";
    return out;
}

}  // namespace spinlab
