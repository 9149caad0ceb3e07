#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spinlab/matrix_rep.hpp"
#include "spinlab/random.hpp"

using namespace spinlab;

namespace {

const Complex I{0.0, 1.0};

double diff(const CMatrix& a, const CMatrix& b) { return max_abs(CMatrix(a - b)); }

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

ExactMV exact_blade(int n, Mask m) { return ExactMV::blade(Signature(n, 0), m); }

}  // namespace

TEST(PauliGenerators, LowDimensionalExamples) {
    const MatrixRep two = pauli_generators(2);
    ASSERT_EQ(two.generators.size(), 2u);
    EXPECT_EQ(diff(two.generators[0], mat2(0, I, I, 0)), 0.0);
    EXPECT_EQ(diff(two.generators[1], mat2(0, 1, -1, 0)), 0.0);

    const MatrixRep one = pauli_generators(1);
    EXPECT_EQ(diff(one.generators[0], mat2(-I, 0, 0, I).block(0, 0, 1, 1)), 0.0);
    EXPECT_EQ(one.dim(), 1);
    const MatrixRep three = pauli_generators(3);
    EXPECT_EQ(diff(three.generators[2], mat2(-I, 0, 0, I)), 0.0);
    const MatrixRep three_prime = pauli_generators(3, Variant::rho_prime);
    for (int i = 0; i < 3; ++i)
        EXPECT_EQ(diff(three_prime.generators[i], -three.generators[i]), 0.0);
}

TEST(PauliGenerators, RelationsUpToTwelve) {
    for (int n = 1; n <= 12; ++n)
        for (Variant v : {Variant::rho, Variant::rho_prime}) {
            const MatrixRep rep = pauli_generators(n, v);
            EXPECT_EQ(rep.dim(), 1L << (n / 2));
            const RelationResiduals r = check_relations(rep);
            EXPECT_TRUE(r.passed(1e-12)) << n << " " << r.clifford << " " << r.skew_hermitian << " " << r.unitary;
            for (const auto& g : rep.generators)
                EXPECT_EQ(diff(g * g, -CMatrix::Identity(rep.dim(), rep.dim())), 0.0);
        }
    EXPECT_THROW(pauli_generators(13), std::invalid_argument);
    EXPECT_THROW(pauli_generators(0), std::invalid_argument);
}

TEST(VariantNames, RoundTrip) {
    EXPECT_EQ(variant_from_string(to_string(Variant::rho)), Variant::rho);
    EXPECT_EQ(variant_from_string(to_string(Variant::rho_prime)), Variant::rho_prime);
    EXPECT_THROW(variant_from_string("sigma"), std::invalid_argument);
}

TEST(Represent, BivectorAndUnit) {
    const MatrixRep rep = pauli_generators(2);
    const Signature sig(2, 0);
    EXPECT_EQ(diff(represent(Multivector<double>::one(sig), rep), CMatrix::Identity(2, 2)), 0.0);
    // i s1 * i s2 = -s1 s2 = -i s3
    EXPECT_EQ(diff(represent(Multivector<double>::blade(sig, 3), rep), mat2(-I, 0, 0, I)), 0.0);
    EXPECT_THROW(represent(Multivector<double>::one(Signature(1, 1)), rep), std::invalid_argument);
    EXPECT_THROW(represent(Multivector<double>::one(Signature(3, 0)), rep), std::invalid_argument);
}

TEST(Represent, IsAlgebraHomomorphism) {
    Rng rng(7);
    for (int n = 1; n <= 6; ++n) {
        const MatrixRep rep = pauli_generators(n);
        const Signature sig(n, 0);
        for (int t = 0; t < 5; ++t) {
            const auto x = random_complex(sig, rng), y = random_complex(sig, rng);
            EXPECT_LE(diff(represent(x * y, rep), represent(x, rep) * represent(y, rep)), 1e-10);
        }
    }
}

TEST(Chirality, EvenDimensions) {
    const CMatrix omega2 = chirality(pauli_generators(2));
    EXPECT_EQ(diff(omega2, mat2(1, 0, 0, -1)), 0.0);
    for (int n = 2; n <= 10; n += 2) {
        const MatrixRep rep = pauli_generators(n);
        const CMatrix w = chirality(rep);
        const CMatrix id = CMatrix::Identity(rep.dim(), rep.dim());
        EXPECT_LE(diff(w * w, id), 1e-12);
        EXPECT_LE(diff(w, w.adjoint()), 1e-12);
        for (const auto& a : rep.generators)
            EXPECT_LE(max_abs(CMatrix(w * a + a * w)), 1e-12);
        const HalfSpinorProjectors p = half_spinor_projectors(rep);
        EXPECT_LE(diff(p.plus + p.minus, id), 1e-12);
        EXPECT_LE(max_abs(CMatrix(p.plus * p.minus)), 1e-12);
        EXPECT_NEAR(p.plus.trace().real(), rep.dim() / 2.0, 1e-12);
    }
    EXPECT_THROW(chirality(pauli_generators(3)), std::invalid_argument);
}

TEST(Chirality, OddVolumeIsScalar) {
    for (int n = 1; n <= 11; n += 2) {
        const MatrixRep a = pauli_generators(n), b = pauli_generators(n, Variant::rho_prime);
        const CMatrix id = CMatrix::Identity(a.dim(), a.dim());
        EXPECT_LE(diff(volume_representation(a), id), 1e-12) << n;
        EXPECT_LE(diff(volume_representation(b), -id), 1e-12) << n;
    }
}

TEST(Faithfulness, EvenFaithfulOddNeedsBothVariants) {
    const MatrixRep two = pauli_generators(2);
    EXPECT_TRUE(faithfulness_check(two));
    EXPECT_EQ(two.generators[0].trace(), Complex(0));
    for (int n = 2; n <= 8; n += 2)
        EXPECT_TRUE(faithfulness_check(pauli_generators(n))) << n;
    for (int n = 1; n <= 5; n += 2) {
        const FaithfulnessReport single = faithfulness_report(pauli_generators(n));
        EXPECT_FALSE(single.faithful()) << n;
        EXPECT_EQ(single.rank, 1L << (n - 1));
        EXPECT_TRUE(faithfulness_check(odd_direct_sum(n))) << n;
    }
}

TEST(Idempotents, SumAndSquare) {
    const Idempotents two = idempotents(2);
    const Signature c2(2, 0);
    ASSERT_EQ(two.plus.size(), 1u);
    EXPECT_EQ(two.plus[0] + two.minus[0], ExactMV::one(c2));
    EXPECT_EQ(two.plus[0] * two.plus[0], two.plus[0]);
    EXPECT_EQ(two.plus[0] * two.minus[0], ExactMV(c2));

    const Idempotents four = idempotents(4);
    ASSERT_EQ(four.family.size(), 4u);
    ExactMV total(Signature(4, 0));
    for (std::size_t a = 0; a < four.family.size(); ++a) {
        total += four.family[a];
        for (std::size_t b = 0; b < four.family.size(); ++b)
            EXPECT_EQ(four.family[a] * four.family[b], a == b ? four.family[a] : ExactMV(Signature(4, 0)));
    }
    EXPECT_EQ(total, ExactMV::one(Signature(4, 0)));
    EXPECT_THROW(idempotents(3), std::invalid_argument);
    EXPECT_THROW(idempotent(4, {1, 0}), std::invalid_argument);
}

TEST(Idempotents, RepresentedAsRankOneProjections) {
    for (int n = 2; n <= 6; n += 2) {
        const MatrixRep rep = pauli_generators(n);
        const Idempotents ids = idempotents(n);
        for (const auto& p : ids.family) {
            const CMatrix m = represent(p, rep);
            EXPECT_LE(diff(m * m, m), 1e-12);
            EXPECT_NEAR(m.trace().real(), 1.0, 1e-12);
        }
    }
}

TEST(MinimalLeftIdeal, DimensionsAndClosure) {
    EXPECT_EQ(minimal_left_ideal(2, {1}).size(), 2u);
    EXPECT_EQ(minimal_left_ideal(4, {1, -1}).size(), 4u);
    EXPECT_EQ(minimal_left_ideal(6, {-1, 1, -1}).size(), 8u);
    for (int n = 2; n <= 6; n += 2) {
        const auto basis = minimal_left_ideal(n, std::vector<int>(n / 2, 1));
        for (int j = 0; j < n; ++j) {
            std::vector<ExactMV> moved;
            for (const auto& b : basis)
                moved.push_back(exact_blade(n, Mask{1} << j) * b);
            EXPECT_TRUE(in_span(basis, moved));
        }
    }
    const auto basis = minimal_left_ideal(2, {1});
    EXPECT_FALSE(in_span(basis, {ExactMV::one(Signature(2, 0))}));
}

TEST(DecomposeLeftRegular, SpansWholeAlgebra) {
    const auto two = decompose_left_regular(2);
    ASSERT_EQ(two.size(), 2u);
    for (int n = 2; n <= 6; n += 2) {
        const auto ideals = decompose_left_regular(n);
        EXPECT_EQ(ideals.size(), 1u << (n / 2));
        std::vector<ExactMV> all;
        std::size_t total = 0;
        for (const auto& basis : ideals) {
            EXPECT_EQ(basis.size(), 1u << (n / 2));
            total += basis.size();
            all.insert(all.end(), basis.begin(), basis.end());
            std::vector<ExactMV> moved;
            for (const auto& b : basis)
                moved.push_back(exact_blade(n, 1) * b);
            EXPECT_TRUE(in_span(basis, moved));
        }
        EXPECT_EQ(total, 1u << n);
        std::vector<ExactMV> blades;
        for (Mask m = 0; m < (Mask{1} << n); ++m)
            blades.push_back(exact_blade(n, m));
        EXPECT_TRUE(in_span(all, blades));
    }
}

TEST(Fock, CliffordModuleIntertwinedWithPauli) {
    for (int n = 2; n <= 8; n += 2) {
        const MatrixRep fock = fock_representation(n);
        EXPECT_EQ(fock.dim(), 1L << (n / 2));
        EXPECT_TRUE(check_relations(fock).passed(1e-12));
        const Intertwiner u = intertwiner(fock, pauli_generators(n));
        EXPECT_TRUE(u.exists);
        EXPECT_TRUE(u.unique);
        EXPECT_LE(u.residual, 1e-10);
        // A unit-norm intertwiner between unitary irreducibles is a multiple of a unitary.
        const double d = static_cast<double>(fock.dim());
        EXPECT_LE(diff(u.matrix.adjoint() * u.matrix * d, CMatrix::Identity(fock.dim(), fock.dim())), 1e-10);
    }
    const MatrixRep fock2 = fock_representation(2);
    EXPECT_LE(diff(fock2.generators[0] * fock2.generators[0], -CMatrix::Identity(2, 2)), 0.0);
    EXPECT_THROW(fock_representation(3), std::invalid_argument);
}

TEST(StructuralMap, SquareSignsAndCommutation) {
    EXPECT_EQ(structural_map(2).sign, -1);
    EXPECT_EQ(structural_map(4).sign, -1);
    EXPECT_EQ(structural_map(8).sign, 1);
    const StructuralMap two = structural_map(2);
    EXPECT_EQ(diff(two.matrix, mat2(0, 1, -1, 0)), 0.0);
    for (int n = 2; n <= 12; n += 2) {
        const StructuralMap theta = structural_map(n);
        EXPECT_EQ(theta.sign, oracle::structural_sign(n)) << n;
        EXPECT_EQ(structural_sign_expected(n), oracle::structural_sign(n));
        const StructuralResiduals r = check_structural_map(theta, pauli_generators(n));
        EXPECT_LE(r.square, 1e-12);
        EXPECT_LE(r.commutation, 1e-12);
    }
}

TEST(StructuralMap, AntilinearAndCommutesWithAction) {
    Rng rng(13);
    const int n = 6;
    const StructuralMap theta = structural_map(n);
    const MatrixRep rep = pauli_generators(n);
    std::normal_distribution<double> normal;
    CVector v(rep.dim());
    for (auto& c : v)
        c = Complex(normal(rng), normal(rng));
    EXPECT_LE((theta.apply(I * v) + I * theta.apply(v)).cwiseAbs().maxCoeff(), 1e-12);
    for (const auto& a : rep.generators)
        EXPECT_LE((theta.apply(a * v) - a * theta.apply(v)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((theta.apply(theta.apply(v)) - double(theta.sign) * v).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Intertwiner, IdentityAndConjugation) {
    const MatrixRep a = pauli_generators(4);
    const Intertwiner self = intertwiner(a, a);
    ASSERT_TRUE(self.exists);
    EXPECT_TRUE(self.unique);
    EXPECT_LE(diff(self.matrix, CMatrix::Identity(4, 4) / 2.0), 1e-12);

    Rng rng(19);
    for (int n = 2; n <= 6; ++n) {
        const MatrixRep rep = pauli_generators(n);
        const CMatrix v = random_unitary(rep.dim(), rng);
        MatrixRep b = rep;
        for (auto& g : b.generators)
            g = v * g * v.adjoint();
        const Intertwiner u = intertwiner(rep, b);
        ASSERT_TRUE(u.exists) << n;
        EXPECT_TRUE(u.unique);
        const Complex phase = (v.adjoint() * u.matrix).trace() / static_cast<double>(rep.dim());
        EXPECT_NEAR(std::abs(phase) * v.norm(), 1.0, 1e-10);
        EXPECT_LE(diff(u.matrix, phase * v), 1e-10);
    }
}

TEST(Intertwiner, OddVariantsAreInequivalent) {
    const Intertwiner u = intertwiner(pauli_generators(3), pauli_generators(3, Variant::rho_prime));
    EXPECT_FALSE(u.exists);
    EXPECT_NE(u.reason.find("volume element"), std::string::npos);
    EXPECT_THROW(intertwiner(pauli_generators(2), pauli_generators(4)), std::invalid_argument);
}

TEST(Intertwiner, ReducibleTargetIsNotUnique) {
    const MatrixRep sum = odd_direct_sum(3);
    const Intertwiner u = intertwiner(sum, sum);
    EXPECT_TRUE(u.exists);
    EXPECT_FALSE(u.unique);
}
