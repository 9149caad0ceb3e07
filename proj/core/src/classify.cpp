#include "spinlab/classify.hpp"

#include <array>
#include <bit>
#include <functional>
#include <stdexcept>

#include "spinlab/linalg.hpp"

namespace spinlab {

namespace {

struct TableEntry {
    Base base;
    long size;
};

// Cl_{d,0} (generators square to -1) and Cl_{0,d} (generators square to +1), d = 0..8.
constexpr std::array<TableEntry, 9> kNegativeTable{{{Base::R, 1},
                                                     {Base::C, 1},
                                                     {Base::H, 1},
                                                     {Base::HH, 1},
                                                     {Base::H, 2},
                                                     {Base::C, 4},
                                                     {Base::R, 8},
                                                     {Base::RR, 8},
                                                     {Base::R, 16}}};
constexpr std::array<TableEntry, 9> kPositiveTable{{{Base::R, 1},
                                                     {Base::RR, 1},
                                                     {Base::R, 2},
                                                     {Base::C, 2},
                                                     {Base::H, 2},
                                                     {Base::HH, 2},
                                                     {Base::H, 4},
                                                     {Base::C, 8},
                                                     {Base::R, 16}}};

int base_real_dimension(Base b) {
    switch (b) {
    case Base::R: return 1;
    case Base::C: return 2;
    case Base::H: return 4;
    case Base::RR: return 2;
    case Base::CC: return 4;
    case Base::HH: return 8;
    }
    return 0;
}

using Element = std::vector<double>;

// Cayley-Dickson product on R^{2^k}: (a,b)(c,d) = (ac - d*b, da + bc*).
Element cd_conj(const Element& x) {
    Element out(x.size());
    out[0] = x[0];
    for (std::size_t i = 1; i < x.size(); ++i)
        out[i] = -x[i];
    return out;
}

Element cd_multiply(const Element& x, const Element& y) {
    const std::size_t n = x.size();
    if (n == 1)
        return {x[0] * y[0]};
    const std::size_t h = n / 2;
    const Element a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    const Element c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    const Element ac = cd_multiply(a, c), db = cd_multiply(cd_conj(d), b);
    const Element da = cd_multiply(d, a), bc = cd_multiply(b, cd_conj(c));
    Element out(n);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = ac[i] - db[i];
        out[h + i] = da[i] + bc[i];
    }
    return out;
}

// Left multiplications by the imaginary units of the 2^k-dimensional
// Cayley-Dickson algebra (C, H, O for k = 1, 2, 3).
std::vector<Eigen::MatrixXd> imaginary_unit_actions(int k) {
    const int dim = 1 << k;
    std::vector<Eigen::MatrixXd> out;
    for (int u = 1; u < dim; ++u) {
        Element unit(dim, 0.0);
        unit[u] = 1.0;
        Eigen::MatrixXd m(dim, dim);
        for (int j = 0; j < dim; ++j) {
            Element basis(dim, 0.0);
            basis[j] = 1.0;
            const Element col = cd_multiply(unit, basis);
            for (int i = 0; i < dim; ++i)
                m(i, j) = col[i];
        }
        out.push_back(std::move(m));
    }
    return out;
}

// Cl_8 on R^16 from the octonionic Cl_7 on R^8.
std::vector<Eigen::MatrixXd> clifford8_generators() {
    const auto oct = imaginary_unit_actions(3);
    std::vector<Eigen::MatrixXd> out;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(8, 8);
    for (const auto& l : oct) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(16, 16);
        g.topRightCorner(8, 8) = l;
        g.bottomLeftCorner(8, 8) = l;
        out.push_back(std::move(g));
    }
    Eigen::MatrixXd last = Eigen::MatrixXd::Zero(16, 16);
    last.topRightCorner(8, 8) = -id;
    last.bottomLeftCorner(8, 8) = id;
    out.push_back(std::move(last));
    return out;
}

}  // namespace

std::string to_string(Base b) {
    switch (b) {
    case Base::R: return "R";
    case Base::C: return "C";
    case Base::H: return "H";
    case Base::RR: return "R+R";
    case Base::CC: return "C+C";
    case Base::HH: return "H+H";
    }
    return "?";
}

Base base_from_string(const std::string& name) {
    for (Base b : {Base::R, Base::C, Base::H, Base::RR, Base::CC, Base::HH})
        if (to_string(b) == name)
            return b;
    throw std::invalid_argument("unknown algebra base: " + name);
}

long AlgebraType::real_dimension() const { return base_real_dimension(base) * matrix_size * matrix_size; }

int AlgebraType::center_dimension() const {
    switch (base) {
    case Base::R:
    case Base::H: return 1;
    case Base::C:
    case Base::RR:
    case Base::HH: return 2;
    case Base::CC: return 4;
    }
    return 0;
}

std::string AlgebraType::describe() const {
    const std::string b = to_string(base);
    if (!is_direct_sum())
        return matrix_size == 1 ? b : "M" + std::to_string(matrix_size) + "(" + b + ")";
    const std::string half = b.substr(0, 1);
    const std::string one = matrix_size == 1 ? half : "M" + std::to_string(matrix_size) + "(" + half + ")";
    return one + "+" + one;
}

int volume_square_sign(const Signature& sig) {
    const int n = sig.n();
    const int exponent = n * (n - 1) / 2 + sig.r();
    return exponent % 2 ? -1 : 1;
}

Multivector<Rational> volume_element(const Signature& sig) {
    if (sig.n() % 2)
        throw std::invalid_argument("volume element is only defined for even dimension");
    return Multivector<Rational>::blade(sig, sig.full_mask());
}

AlgebraType classify_real(int r, int s) {
    if (r < 0 || s < 0)
        throw std::invalid_argument("signature counts must be non-negative");
    if (r + s > 60)
        throw std::invalid_argument("signature too large to classify");
    const int pairs = std::min(r, s);
    long size = 1L << pairs;
    r -= pairs;
    s -= pairs;
    const bool negative = r > 0;
    int d = negative ? r : s;
    while (d > 8) {
        d -= 8;
        size *= 16;
    }
    const TableEntry e = negative ? kNegativeTable[d] : kPositiveTable[d];
    return {e.base, e.size * size};
}

AlgebraType classify_complex(int n) {
    if (n < 0)
        throw std::invalid_argument("dimension must be non-negative");
    if (n > 60)
        throw std::invalid_argument("dimension too large to classify");
    const long size = 1L << (n / 2);
    return {n % 2 ? Base::CC : Base::C, size};
}

int radon_rho(long n) {
    if (n <= 0)
        throw std::invalid_argument("radon_rho needs n >= 1");
    const int twos = std::countr_zero(static_cast<unsigned long>(n));
    const int alpha = twos / 4;
    const int beta = twos % 4;
    return 8 * alpha + (1 << beta);
}

long radon_dimension(int n) {
    if (n < 0)
        throw std::invalid_argument("radon_dimension needs n >= 0");
    static constexpr std::array<long, 8> base{1, 2, 4, 4, 8, 8, 8, 8};
    const int periods = n / 8;
    if (periods > 14)
        throw std::invalid_argument("radon_dimension overflow");
    return base[n % 8] << (4 * periods);
}

std::vector<Eigen::MatrixXd> real_clifford_generators(int d) {
    if (d < 0)
        throw std::invalid_argument("negative Clifford dimension");
    if (radon_dimension(d) > 4096)
        throw std::invalid_argument("real representation too large");
    const int residual = d % 8;
    std::vector<Eigen::MatrixXd> gens;
    if (residual == 1)
        gens = imaginary_unit_actions(1);
    else if (residual == 2 || residual == 3)
        gens = imaginary_unit_actions(2);
    else if (residual >= 4)
        gens = imaginary_unit_actions(3);
    gens.resize(residual);
    long dim = radon_dimension(residual);

    if (d >= 8) {
        const auto c8 = clifford8_generators();
        Eigen::MatrixXd eps = Eigen::MatrixXd::Identity(16, 16);
        for (const auto& g : c8)
            eps = eps * g;
        for (int period = 0; period < d / 8; ++period) {
            const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
            std::vector<Eigen::MatrixXd> next;
            for (const auto& g : c8)
                next.push_back(kron(g, id));
            for (const auto& b : gens)
                next.push_back(kron(eps, b));
            gens = std::move(next);
            dim *= 16;
        }
    }
    return gens;
}

RadonFamily hurwitz_radon_matrices(long n) {
    if (n <= 0)
        throw std::invalid_argument("hurwitz_radon_matrices needs n >= 1");
    if (n > 4096)
        throw std::invalid_argument("hurwitz_radon_matrices: n too large");
    RadonFamily family;
    family.n = n;
    family.rho = radon_rho(n);
    const int d = family.rho - 1;
    const auto gens = real_clifford_generators(d);
    const long block = radon_dimension(d);
    const long copies = n / block;
    for (const auto& g : gens) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (long c = 0; c < copies; ++c)
            m.block(c * block, c * block, block, block) = g;
        family.matrices.push_back(std::move(m));
    }
    return family;
}

RadonCheck check_radon_family(const RadonFamily& family) {
    RadonCheck out;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(family.n, family.n);
    for (std::size_t i = 0; i < family.matrices.size(); ++i) {
        const auto& a = family.matrices[i];
        out.orthogonality = std::max(out.orthogonality, (a.transpose() * a - id).cwiseAbs().maxCoeff());
        out.square = std::max(out.square, (a * a + id).cwiseAbs().maxCoeff());
        for (std::size_t j = i + 1; j < family.matrices.size(); ++j) {
            const auto& b = family.matrices[j];
            out.anticommutation = std::max(out.anticommutation, (a * b + b * a).cwiseAbs().maxCoeff());
        }
    }
    return out;
}

}  // namespace spinlab
