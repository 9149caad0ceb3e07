#include "verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "spinlab/classify.hpp"
#include "spinlab/dirac_lattice.hpp"
#include "spinlab/exterior.hpp"
#include "spinlab/matrix_rep.hpp"
#include "spinlab/random.hpp"
#include "spinlab/spin_group.hpp"
#include "spinlab/tensor.hpp"

namespace spinlab::cli {

namespace {

using QMV = Multivector<Rational>;

class Runner {
  public:
    explicit Runner(const VerifyOptions& o) : opt_(o), rng_(o.seed) { report_.seed = o.seed, report_.level = o.level; }

    bool full() const { return opt_.level == Level::full; }
    Rng& rng() { return rng_; }
    BladeProductFn kernel() const { return opt_.kernel; }

    // Residual checks pass when residual <= tolerance * tolerance_scale.
    void residual(const std::string& name, double value, double tol, std::string detail = {}) {
        const double scaled = tol * opt_.tolerance_scale;
        report_.checks.push_back({name, std::isfinite(value) && value <= scaled, value, scaled, std::move(detail)});
    }
    void exact(const std::string& name, bool ok, std::string detail = {}) {
        report_.checks.push_back({name, ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)});
    }
    // Runs `body`, turning an exception into a failed check of that name.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            exact(name, false, std::string("exception: ") + e.what());
        }
    }

    VerifyReport take() { return std::move(report_); }

  private:
    VerifyOptions opt_;
    Rng rng_;
    VerifyReport report_;
};

QMV mul(const QMV& a, const QMV& b, BladeProductFn k) { return QMV::product(a, b, k); }

void clifford_suite(Runner& run) {
    const int max_n = run.full() ? 6 : 4;
    const BladeProductFn k = run.kernel();

    run.guarded("clifford.anticommutation", [&] {
        std::string failure;
        for (int n = 1; n <= max_n && failure.empty(); ++n)
            for (int r = 0; r <= n && failure.empty(); ++r) {
                const Signature sig(r, n - r);
                for (int i = 0; i < n && failure.empty(); ++i)
                    for (int j = 0; j < n && failure.empty(); ++j) {
                        const QMV ei = QMV::basis_vector(sig, i), ej = QMV::basis_vector(sig, j);
                        const QMV lhs = mul(ei, ej, k) + mul(ej, ei, k);
                        const QMV rhs = i == j ? QMV::scalar(sig, Rational(2 * sig.square(i))) : QMV(sig);
                        if (!(lhs == rhs))
                            failure = "Cl(" + std::to_string(r) + "," + std::to_string(n - r) + ") e" +
                                      std::to_string(i) + " e" + std::to_string(j);
                    }
            }
        run.exact("clifford.anticommutation", failure.empty(), failure);
    });

    run.guarded("clifford.associativity", [&] {
        bool ok = true;
        for (int trial = 0; trial < (run.full() ? 40 : 10) && ok; ++trial) {
            const int n = 1 + trial % max_n;
            const Signature sig(trial % (n + 1), n - trial % (n + 1));
            const QMV x = random_rational(sig, run.rng()), y = random_rational(sig, run.rng()),
                      z = random_rational(sig, run.rng());
            ok = mul(mul(x, y, k), z, k) == mul(x, mul(y, z, k), k);
        }
        run.exact("clifford.associativity", ok);
    });

    run.guarded("clifford.grading", [&] {
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            const int n = 1 + trial % max_n;
            const Signature sig(n / 2, n - n / 2);
            const int pi = trial % 2, pj = (trial / 2) % 2;
            const QMV x = random_homogeneous(sig, pi, run.rng()), y = random_homogeneous(sig, pj, run.rng());
            const QMV xy = mul(x, y, k);
            ok = grade_involution(grade_involution(x)) == x &&
                 grade_involution(xy) == mul(grade_involution(x), grade_involution(y), k) &&
                 ((pi + pj) % 2 ? xy.is_odd() : xy.is_even());
        }
        run.exact("clifford.grading", ok);
    });

    run.guarded("clifford.antiautomorphisms", [&] {
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            const Signature sig(1 + trial % max_n, trial % 2);
            const QMV x = random_rational(sig, run.rng()), y = random_rational(sig, run.rng());
            ok = reversal(mul(x, y, k)) == mul(reversal(y), reversal(x), k) &&
                 conjugation(mul(x, y, k)) == mul(conjugation(y), conjugation(x), k) &&
                 conjugation(x) == grade_involution(reversal(x)) && conjugation(x) == reversal(grade_involution(x));
        }
        run.exact("clifford.antiautomorphisms", ok);
    });

    run.guarded("clifford.exterior_roundtrip", [&] {
        bool ok = true;
        for (int n = 1; n <= max_n && ok; ++n) {
            const Signature sig(n, 0);
            const QMV x = random_rational(sig, run.rng());
            ok = lambda_to_clifford(clifford_to_lambda(x), sig) == x;
        }
        run.exact("clifford.exterior_roundtrip", ok);
    });

    run.guarded("clifford.split_iso", [&] {
        bool ok = true;
        for (int n = 2; n <= max_n && ok; ++n) {
            const Signature sig(n / 2, n - n / 2);
            const Splitting split(sig, 1 + (n - 1) / 2);
            const QMV x = random_rational(sig, run.rng()), y = random_rational(sig, run.rng());
            const auto fx = split_iso(x, split), fy = split_iso(y, split);
            ok = split_iso_inverse(fx, split) == x && split_iso(x * y, split) == fx * fy;
        }
        run.exact("clifford.split_iso", ok);
    });

    run.guarded("clifford.universal_property", [&] {
        double worst = 0;
        for (int n = 1; n <= max_n; ++n) {
            const MatrixRep rep = pauli_generators(n);
            const Signature sig(n, 0);
            const QMV x = random_rational(sig, run.rng()), y = random_rational(sig, run.rng());
            worst = std::max(worst, max_abs(CMatrix(represent(x * y, rep) - represent(x, rep) * represent(y, rep))));
        }
        run.residual("clifford.universal_property", worst, 1e-9);
    });
}

void classify_suite(Runner& run) {
    run.guarded("classify.table", [&] {
        const AlgebraType expected[] = {{Base::R, 1}, {Base::C, 1}, {Base::H, 1}, {Base::HH, 1}, {Base::H, 2},
                                        {Base::C, 4}, {Base::R, 8}, {Base::RR, 8}, {Base::R, 16}};
        bool ok = true;
        for (int n = 0; n <= 8; ++n)
            ok = ok && classify_real(n, 0) == expected[n];
        run.exact("classify.table", ok);
    });

    run.guarded("classify.periodicity", [&] {
        bool ok = true;
        const int cap = 12;
        for (int r = 0; r <= cap; ++r)
            for (int s = 0; r + s <= cap; ++s) {
                const AlgebraType a = classify_real(r, s);
                ok = ok && a.real_dimension() == (1L << (r + s));
                if (r >= 1 && s >= 1) {
                    const AlgebraType b = classify_real(r - 1, s - 1);
                    ok = ok && a.base == b.base && a.matrix_size == 2 * b.matrix_size;
                }
                if (r >= 8) {
                    const AlgebraType b = classify_real(r - 8, s);
                    ok = ok && a.base == b.base && a.matrix_size == 16 * b.matrix_size;
                }
                if (s >= 8) {
                    const AlgebraType b = classify_real(r, s - 8);
                    ok = ok && a.base == b.base && a.matrix_size == 16 * b.matrix_size;
                }
            }
        for (int n = 0; n <= 6; ++n)
            ok = ok && classify_real(n, n) == AlgebraType{Base::R, 1L << n};
        run.exact("classify.periodicity", ok);
    });

    run.guarded("classify.volume_sign", [&] {
        bool ok = true;
        const int max_n = run.full() ? 10 : 6;
        for (int n = 0; n <= max_n; n += 2)
            for (int r = 0; r <= n; ++r) {
                const Signature sig(r, n - r);
                const auto eps = volume_element(sig);
                ok = ok && (eps * eps) == QMV::scalar(sig, Rational(volume_square_sign(sig)));
            }
        run.exact("classify.volume_sign", ok);
    });

    run.guarded("classify.radon", [&] {
        double worst = 0;
        const int max_n = run.full() ? 32 : 16;
        for (int n = 1; n <= max_n; ++n) {
            const RadonFamily f = hurwitz_radon_matrices(n);
            const RadonCheck c = check_radon_family(f);
            worst = std::max({worst, c.orthogonality, c.square, c.anticommutation});
            if (static_cast<int>(f.matrices.size()) != f.rho - 1)
                worst = INFINITY;
        }
        run.residual("classify.radon", worst, 1e-12);
    });
}

void rep_suite(Runner& run) {
    const int max_n = run.full() ? 10 : 4;
    run.guarded("rep.relations", [&] {
        double worst = 0;
        for (int n = 1; n <= max_n; ++n)
            for (Variant v : {Variant::rho, Variant::rho_prime}) {
                const RelationResiduals r = check_relations(pauli_generators(n, v));
                worst = std::max({worst, r.clifford, r.skew_hermitian, r.unitary});
            }
        run.residual("rep.relations", worst, 1e-12);
    });

    run.guarded("rep.faithfulness", [&] {
        bool ok = true;
        for (int n = 2; n <= (run.full() ? 8 : 4); n += 2)
            ok = ok && faithfulness_check(pauli_generators(n));
        for (int n = 1; n <= (run.full() ? 7 : 3); n += 2) {
            ok = ok && !faithfulness_check(pauli_generators(n));
            ok = ok && faithfulness_check(odd_direct_sum(n));
        }
        run.exact("rep.faithfulness", ok);
    });

    run.guarded("rep.odd_volume", [&] {
        double worst = 0;
        for (int n = 1; n <= max_n; n += 2) {
            const auto a = pauli_generators(n, Variant::rho), b = pauli_generators(n, Variant::rho_prime);
            const CMatrix id = CMatrix::Identity(a.dim(), a.dim());
            worst = std::max(worst, max_abs(CMatrix(volume_representation(a) - id)));
            worst = std::max(worst, max_abs(CMatrix(volume_representation(b) + id)));
        }
        run.residual("rep.odd_volume", worst, 1e-12);
    });

    run.guarded("rep.idempotents", [&] {
        bool ok = true;
        for (int n = 2; n <= (run.full() ? 6 : 4); n += 2) {
            const Idempotents ids = idempotents(n);
            const Signature sig(n, 0);
            ExactMV total(sig);
            for (const auto& p : ids.family) {
                ok = ok && p * p == p;
                total += p;
            }
            ok = ok && total == ExactMV::one(sig);
            for (std::size_t a = 0; a < ids.plus.size(); ++a)
                for (std::size_t b = 0; b < ids.plus.size(); ++b)
                    ok = ok && ids.plus[a] * ids.minus[b] == ids.minus[b] * ids.plus[a];
        }
        run.exact("rep.idempotents", ok);
    });

    run.guarded("rep.minimal_ideals", [&] {
        bool ok = true;
        for (int n = 2; n <= (run.full() ? 6 : 4); n += 2) {
            const auto ideals = decompose_left_regular(n);
            const Signature sig(n, 0);
            std::vector<ExactMV> all;
            for (const auto& basis : ideals) {
                ok = ok && static_cast<long>(basis.size()) == (1L << (n / 2));
                for (int j = 0; j < n; ++j) {
                    std::vector<ExactMV> moved;
                    for (const auto& b : basis)
                        moved.push_back(ExactMV::basis_vector(sig, j) * b);
                    ok = ok && in_span(basis, moved);
                }
                all.insert(all.end(), basis.begin(), basis.end());
            }
            std::vector<ExactMV> blades;
            for (Mask m = 0; m < sig.blade_count(); ++m)
                blades.push_back(ExactMV::blade(sig, m));
            ok = ok && all.size() == sig.blade_count() && in_span(all, blades);
        }
        run.exact("rep.minimal_ideals", ok);
    });

    run.guarded("rep.fock_intertwiner", [&] {
        double worst = 0;
        bool ok = true;
        for (int n = 2; n <= (run.full() ? 8 : 4); n += 2) {
            const MatrixRep fock = fock_representation(n);
            const RelationResiduals rel = check_relations(fock);
            worst = std::max({worst, rel.clifford, rel.skew_hermitian, rel.unitary});
            const Intertwiner u = intertwiner(fock, pauli_generators(n));
            ok = ok && u.exists && u.unique;
            worst = std::max(worst, u.residual);
        }
        run.residual("rep.fock_intertwiner", ok ? worst : INFINITY, 1e-10);
    });

    run.guarded("rep.structural_map", [&] {
        double worst = 0;
        bool ok = true;
        for (int n = 2; n <= (run.full() ? 12 : 4); n += 2) {
            const StructuralMap theta = structural_map(n);
            ok = ok && theta.sign == structural_sign_expected(n);
            const StructuralResiduals r = check_structural_map(theta, pauli_generators(n));
            worst = std::max({worst, r.square, r.commutation});
        }
        run.residual("rep.structural_map", ok ? worst : INFINITY, 1e-12);
    });

    run.guarded("rep.intertwiner_equivariance", [&] {
        double worst = 0;
        bool ok = true;
        for (int n = 2; n <= (run.full() ? 6 : 4); ++n) {
            const MatrixRep a = pauli_generators(n);
            const CMatrix v = random_unitary(a.dim(), run.rng());
            MatrixRep b = a;
            for (auto& g : b.generators)
                g = v * g * v.adjoint();
            const Intertwiner u = intertwiner(a, b);
            ok = ok && u.exists && u.unique;
            if (!u.exists)
                continue;
            const Signature sig(n, 0);
            for (int t = 0; t < (run.full() ? 100 : 10); ++t) {
                const auto x = random_complex(sig, run.rng());
                worst = std::max(worst, max_abs(CMatrix(u.matrix * represent(x, a) - represent(x, b) * u.matrix)));
            }
            // U must be proportional to V.
            const double overlap = std::abs((v.adjoint() * u.matrix).trace()) / (v.norm() * u.matrix.norm());
            worst = std::max(worst, 1.0 - overlap);
        }
        if (run.full()) {
            const Intertwiner odd = intertwiner(pauli_generators(3), pauli_generators(3, Variant::rho_prime));
            ok = ok && !odd.exists;
        }
        run.residual("rep.intertwiner_equivariance", ok ? worst : INFINITY, 1e-10);
    });
}

void spin_suite(Runner& run) {
    const int max_n = run.full() ? 6 : 4;
    run.guarded("spin.homomorphism", [&] {
        double worst = 0;
        for (int t = 0; t < (run.full() ? 100 : 20); ++t) {
            const int n = 2 + t % (max_n - 1);
            const auto x = random_versor(n, 1 + t % 4, run.rng()), y = random_versor(n, 1 + (t / 4) % 4, run.rng());
            const Eigen::MatrixXd ax = twisted_adjoint_matrix(x), ay = twisted_adjoint_matrix(y);
            const Eigen::MatrixXd axy = twisted_adjoint_matrix(x * y);
            worst = std::max(worst, (axy - ax * ay).cwiseAbs().maxCoeff());
            worst = std::max(worst, (ax.transpose() * ax - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
            const auto nx = spinor_norm(x).pruned(1e-12), ny = spinor_norm(y).pruned(1e-12);
            const auto nxy = spinor_norm(x * y).pruned(1e-12);
            if (!nx.is_scalar() || !ny.is_scalar() || !nxy.is_scalar())
                worst = INFINITY;
            else
                worst = std::max(worst, std::abs(nxy.scalar_part() - nx.scalar_part() * ny.scalar_part()));
        }
        run.residual("spin.homomorphism", worst, 1e-10);
    });

    run.guarded("spin.kernel", [&] {
        bool ok = true;
        for (int n = 1; n <= max_n; ++n) {
            const Signature sig(n, 0);
            for (int v : {-3, -2, -1, 1, 2, 3}) {
                const Membership m = pin_spin_membership(QMV::scalar(sig, Rational(v)));
                ok = ok && (m == Membership::spin) == (std::abs(v) == 1);
            }
            ok = ok && pin_spin_membership(QMV::basis_vector(sig, 0)) == Membership::pin;
        }
        run.exact("spin.kernel", ok);
    });

    run.guarded("spin.lift_roundtrip", [&] {
        double worst = 0;
        for (int n = 3; n <= (run.full() ? 5 : 3); ++n)
            for (int t = 0; t < (run.full() ? 100 : 20); ++t) {
                const Eigen::MatrixXd r = random_rotation(n, run.rng());
                const Lift lift = lift_rotation(r);
                worst = std::max(worst, (twisted_adjoint_matrix(lift.versor) - r).cwiseAbs().maxCoeff());
                if (pin_spin_membership(lift.versor, 1e-9) != Membership::spin)
                    worst = INFINITY;
            }
        run.residual("spin.lift_roundtrip", worst, 1e-9);
    });

    run.guarded("spin.double_cover", [&] {
        const DoubleCoverTrace trace = double_cover_demo(run.full() ? 4 : 3, 128);
        run.residual("spin.double_cover", std::max(trace.distance_to_minus_one, trace.rotation_deviation), 1e-10);
    });
}

void dirac_suite(Runner& run) {
    const int max_l = run.full() ? 12 : 8;
    run.guarded("dirac.square", [&] {
        double worst = 0;
        for (int m = 1; m <= (run.full() ? 4 : 3); ++m)
            for (int L = 4; L <= max_l; L += 4) {
                const TorusGrid grid(m, L);
                worst = std::max(worst, dirac_square_residual(build_flat_dirac(grid, pauli_generators(m), Scheme::central), grid));
            }
        run.residual("dirac.square", worst, 1e-12);
    });

    run.guarded("dirac.chirality_odd", [&] {
        double worst = 0;
        for (int m : {2, 4}) {
            const TorusGrid grid(m, 4);
            const MatrixRep rep = pauli_generators(m);
            const auto r = chirality_splitting(build_flat_dirac(grid, rep, Scheme::central), grid, chirality(rep));
            worst = std::max({worst, r.plus, r.minus, r.completeness});
        }
        run.residual("dirac.chirality_odd", worst, 1e-12);
    });

    run.guarded("dirac.cauchy_riemann", [&] {
        const TorusGrid grid(2, max_l);
        const MatrixRep rep = pauli_generators(2);
        const CauchyRiemann cr = cauchy_riemann_blocks(build_flat_dirac(grid, rep, Scheme::spectral), grid, rep);
        CVector f(grid.sites()), expected(grid.sites());
        for (long s = 0; s < grid.sites(); ++s) {
            const auto x = grid.coords(s);
            const double phase = 2.0 * std::numbers::pi * (x[0] + 2 * x[1]) / grid.L;
            f(s) = std::polar(1.0, phase);
            expected(s) = Complex(0.0, std::numbers::pi) * Complex(1.0, 2.0) * f(s);
        }
        const CVector got = 0.5 * (cr.d0 * f);
        run.residual("dirac.cauchy_riemann", std::max(cr.off_block, (got - expected).cwiseAbs().maxCoeff()), 1e-10);
    });

    run.guarded("dirac.gauge_invariance", [&] {
        const GaugeField g = uniform_flux(8, 1);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        std::vector<double> theta(64);
        for (auto& t : theta)
            t = angle(run.rng());
        const Spectrum a = spectrum(build_twisted_dirac(g, Kernel::naive));
        const Spectrum b = spectrum(build_twisted_dirac(gauge_transform(g, theta), Kernel::naive));
        double worst = a.values.size() == b.values.size() ? 0.0 : INFINITY;
        for (std::size_t i = 0; i < std::min(a.values.size(), b.values.size()); ++i)
            worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
        run.residual("dirac.gauge_invariance", worst, 1e-10);
    });

    run.guarded("dirac.index", [&] {
        const int L = run.full() ? 12 : 8;
        bool ok = true;
        std::string detail;
        for (int q = (run.full() ? -3 : -1); q <= (run.full() ? 3 : 1); ++q) {
            const IndexResult r = spinc_index(L, q);
            ok = ok && r.determinate && r.index == q;
            detail += (detail.empty() ? "" : " ") + std::to_string(q) + "->" + std::to_string(r.index);
        }
        run.exact("dirac.index", ok, detail);
    });

    run.guarded("dirac.weitzenboeck_untwisted", [&] {
        run.residual("dirac.weitzenboeck_untwisted", bochner_untwisted_residual(TorusGrid(2, run.full() ? 16 : 8)), 1e-12);
    });

    if (run.full())
        run.guarded("dirac.weitzenboeck_twisted", [&] {
            const double coarse = bochner_twisted_residual(8, FluxMode{}, 4, 1);
            const double fine = bochner_twisted_residual(16, FluxMode{}, 4, 1);
            const bool shrinks = fine * 10.0 <= coarse;
            run.residual("dirac.weitzenboeck_twisted", shrinks ? fine : INFINITY, 1e-8);
        });
}

}  // namespace

bool VerifyReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json item = {{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"tolerance", c.tolerance}};
        if (!c.detail.empty())
            item["detail"] = c.detail;
        list.push_back(std::move(item));
    }
    return {{"seed", seed}, {"level", cli::to_string(level)}, {"passed", passed()}, {"checks", std::move(list)}};
}

Level level_from_string(const std::string& name) {
    if (name == "quick")
        return Level::quick;
    if (name == "full")
        return Level::full;
    throw std::invalid_argument("unknown verify level: " + name);
}

std::string to_string(Level level) { return level == Level::quick ? "quick" : "full"; }

VerifyReport run_verify(const VerifyOptions& options) {
    Runner run(options);
    const std::string& s = options.suite;
    if (s != "all" && s != "clifford" && s != "classify" && s != "rep" && s != "spin" && s != "dirac")
        throw std::invalid_argument("unknown verify suite: " + s);
    if (s == "all" || s == "clifford")
        clifford_suite(run);
    if (s == "all" || s == "classify")
        classify_suite(run);
    if (s == "all" || s == "rep")
        rep_suite(run);
    if (s == "all" || s == "spin")
        spin_suite(run);
    if (s == "all" || s == "dirac")
        dirac_suite(run);
    return run.take();
}

}  // namespace spinlab::cli
