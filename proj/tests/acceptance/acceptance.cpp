// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "spinlab/classify.hpp"
#include "spinlab/dirac_lattice.hpp"
#include "spinlab/matrix_rep.hpp"
#include "spinlab/random.hpp"
#include "spinlab/spin_group.hpp"

using namespace spinlab;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed)
            detail << what;
        passed = passed && ok;
    }
};

double diff(const CMatrix& a, const CMatrix& b) { return max_abs(CMatrix(a - b)); }
double sparse_diff(const SparseC& a, const SparseC& b) { return max_abs(SparseC(a - b)); }

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && seconds > budget_seconds) {
        std::ostringstream msg;
        msg << "time " << seconds << "s over " << budget_seconds << "s";
        out.require(false, msg.str());
    }
    std::printf("%s %2d %-24s %.3fs %s\n", out.passed ? "PASS" : "FAIL", id, name, seconds,
                out.detail.str().c_str());
    std::fflush(stdout);
    failures += !out.passed;
}

}  // namespace

int main() {
    criterion(1, "classification_table", 1.0, [](Outcome& out) {
        for (int n = 0; n <= 8; ++n) {
            const AlgebraType t = classify_real(n, 0);
            const auto& row = oracle::kNegativeDefiniteTable[n];
            out.require(to_string(t.base) == row.base && t.matrix_size == row.size, "table row " + std::to_string(n));
        }
        for (int r = 0; r <= 12; ++r)
            for (int s = 0; r + s <= 12; ++s) {
                const AlgebraType t = classify_real(r, s);
                const std::string tag = "Cl(" + std::to_string(r) + "," + std::to_string(s) + ")";
                out.require(t.real_dimension() == (1L << (r + s)), tag + " dimension");
                if (r >= 1 && s >= 1)
                    out.require(t.base == classify_real(r - 1, s - 1).base &&
                                    t.matrix_size == 2 * classify_real(r - 1, s - 1).matrix_size,
                                tag + " (1,1) stripping");
                if (r >= 8) {
                    const AlgebraType lower = classify_real(r - 8, s);
                    out.require(t.base == lower.base && t.matrix_size == 16 * lower.matrix_size, tag + " periodicity");
                }
                if (s >= 8) {
                    const AlgebraType lower = classify_real(r, s - 8);
                    out.require(t.base == lower.base && t.matrix_size == 16 * lower.matrix_size, tag + " periodicity");
                }
            }
    });

    criterion(2, "volume_square_sign", 5.0, [](Outcome& out) {
        for (int n = 0; n <= 10; n += 2)
            for (int r = 0; r <= n; ++r) {
                const Signature sig(r, n - r);
                const Multivector<Rational> w = volume_element(sig);
                const Multivector<Rational> sq = w * w;
                const int formula = ((n * (n - 1) / 2) % 2 ? -1 : 1) * (r % 2 ? -1 : 1);
                out.require(sq == Multivector<Rational>::scalar(sig, Rational(formula)) &&
                                volume_square_sign(sig) == formula,
                            "sign at (" + std::to_string(r) + "," + std::to_string(n - r) + ")");
            }
    });

    criterion(3, "radon_hurwitz", 0.0, [](Outcome& out) {
        for (int n = 0; n <= 16; ++n)
            out.require(radon_dimension(n) == oracle::clifford_module_dimension(n), "a_" + std::to_string(n));
        for (long n : {2L, 4L, 8L, 16L}) {
            const RadonFamily f = hurwitz_radon_matrices(n);
            out.require(f.rho == oracle::radon_hurwitz(n), "rho(" + std::to_string(n) + ")");
            out.require(static_cast<int>(f.matrices.size()) == f.rho - 1, "family size " + std::to_string(n));
            out.require(check_radon_family(f).passed(1e-12), "family relations " + std::to_string(n));
        }
    });

    criterion(4, "generator_relations", 0.0, [](Outcome& out) {
        for (int n = 1; n <= 10; ++n)
            for (Variant v : {Variant::rho, Variant::rho_prime}) {
                const MatrixRep rep = pauli_generators(n, v);
                out.require(check_relations(rep).passed(1e-12), "relations n=" + std::to_string(n));
            }
        for (int n = 2; n <= 8; n += 2)
            out.require(faithfulness_check(pauli_generators(n)), "faithful n=" + std::to_string(n));
    });

    criterion(5, "ideals_and_fock", 0.0, [](Outcome& out) {
        for (int n = 2; n <= 6; n += 2) {
            const Idempotents ids = idempotents(n);
            ExactMV total(Signature(n, 0));
            for (const auto& p : ids.family) {
                total += p;
                out.require(p * p == p, "idempotent n=" + std::to_string(n));
            }
            out.require(total == ExactMV::one(Signature(n, 0)), "sum of idempotents n=" + std::to_string(n));
            for (const auto& eps : ids.signs)
                out.require(minimal_left_ideal(n, eps).size() == (1u << (n / 2)), "ideal dim n=" + std::to_string(n));
            const Intertwiner u = intertwiner(fock_representation(n), pauli_generators(n));
            out.require(u.exists && u.unique && u.residual <= 1e-10, "fock n=" + std::to_string(n));
        }
    });

    criterion(6, "structural_map", 0.0, [](Outcome& out) {
        for (int n = 2; n <= 10; n += 2) {
            const StructuralMap theta = structural_map(n);
            const StructuralResiduals res = check_structural_map(theta, pauli_generators(n));
            out.require(theta.sign == oracle::structural_sign(n), "sign n=" + std::to_string(n));
            out.require(res.square <= 1e-12 && res.commutation <= 1e-12, "residual n=" + std::to_string(n));
        }
    });

    criterion(7, "twisted_adjoint", 0.0, [](Outcome& out) {
        Rng rng(2024);
        for (int t = 0; t < 100; ++t) {
            const int n = 1 + t % 6;
            const RealMV x = random_versor(n, 1 + t % 4, rng), y = random_versor(n, 1 + (t / 4) % 4, rng);
            const Eigen::MatrixXd lhs = twisted_adjoint_matrix(x * y);
            const Eigen::MatrixXd rhs = twisted_adjoint_matrix(x) * twisted_adjoint_matrix(y);
            out.require((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10, "homomorphism pair " + std::to_string(t));
        }
        for (int n = 1; n <= 6; ++n)
            for (int v : {-1, 1}) {
                const Multivector<Rational> c = Multivector<Rational>::scalar(Signature(n, 0), Rational(v));
                out.require(pin_spin_membership(c) == Membership::spin &&
                                twisted_adjoint_matrix(c) == Eigen::MatrixXd::Identity(n, n),
                            "scalar kernel n=" + std::to_string(n));
            }
        for (int n = 2; n <= 6; ++n) {
            const DoubleCoverTrace trace = double_cover_demo(n, 64);
            out.require(trace.distance_to_minus_one <= 1e-10 && trace.rotation_deviation <= 1e-10,
                        "double cover n=" + std::to_string(n));
        }
    });

    criterion(8, "rotation_lift", 0.0, [](Outcome& out) {
        Rng rng(77);
        for (int n = 3; n <= 5; ++n)
            for (int t = 0; t < 100; ++t) {
                const Eigen::MatrixXd r = random_rotation(n, rng);
                const Lift l = lift_rotation(r);
                out.require((twisted_adjoint_matrix(l.versor) - r).cwiseAbs().maxCoeff() <= 1e-9 &&
                                pin_spin_membership(l.versor, 1e-9) == Membership::spin,
                            "lift n=" + std::to_string(n));
            }
    });

    criterion(9, "dirac_square_and_cr", 0.0, [](Outcome& out) {
        for (int m = 1; m <= 4; ++m)
            for (int L : {4, 8, 12}) {
                const TorusGrid grid(m, L);
                const double res = dirac_square_residual(build_flat_dirac(grid, pauli_generators(m), Scheme::central), grid);
                out.require(res <= 1e-12, "square m=" + std::to_string(m) + " L=" + std::to_string(L));
            }
        const TorusGrid grid(2, 8);
        const MatrixRep rep = pauli_generators(2);
        const Complex i{0.0, 1.0};
        for (Scheme scheme : {Scheme::central, Scheme::spectral}) {
            const CauchyRiemann cr = cauchy_riemann_blocks(build_flat_dirac(grid, rep, scheme), grid, rep);
            const SparseC d1 = axis_derivative(grid, 0, scheme), d2 = axis_derivative(grid, 1, scheme);
            out.require(cr.off_block <= 1e-10 && sparse_diff(cr.d0, SparseC(d1 + i * d2)) <= 1e-10 &&
                            sparse_diff(cr.d1, SparseC(-(d1 - i * d2))) <= 1e-10,
                        "cauchy-riemann " + to_string(scheme));
        }
    });

    criterion(10, "spinc_index", 0.0, [](Outcome& out) {
        for (int q = -3; q <= 3; ++q) {
            const IndexResult r = spinc_index(12, q);
            out.require(r.determinate && r.index == q, "q=" + std::to_string(q) + " gave " + std::to_string(r.index));
        }
    });

    criterion(11, "weitzenboeck", 0.0, [](Outcome& out) {
        for (int m = 1; m <= 2; ++m)
            for (int L : {8, 16})
                out.require(bochner_untwisted_residual(TorusGrid(m, L)) <= 1e-12, "untwisted");
        const FluxMode mode;
        const double coarse = bochner_twisted_residual(8, mode);
        const double fine = bochner_twisted_residual(16, mode);
        std::ostringstream tag;
        tag << "twisted coarse=" << coarse << " fine=" << fine;
        out.require(fine <= 1e-8 && coarse >= 10 * fine, tag.str());
    });

    criterion(12, "structure_constants", 0.0, [](Outcome& out) {
        for (int r = 0; r <= 3; ++r)
            for (int s = 0; r + s <= 3; ++s) {
                const Signature sig(r, s);
                const oracle::JordanWigner jw(r, s);
                for (Mask a = 0; a < (Mask{1} << (r + s)); ++a)
                    for (Mask b = 0; b < (Mask{1} << (r + s)); ++b) {
                        const BladeProduct p = blade_product(a, b, sig);
                        const auto expected = jw.as_signed_blade(jw.blade(a) * jw.blade(b));
                        out.require(p.sign == expected.first && p.mask == expected.second,
                                    "e_" + std::to_string(a) + " e_" + std::to_string(b));
                    }
            }
    });

    std::printf("%d failed\n", failures);
    return failures == 0 ? 0 : 1;
}
