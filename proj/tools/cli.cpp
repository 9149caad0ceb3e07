#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "spinlab/classify.hpp"
#include "spinlab/dirac_lattice.hpp"
#include "spinlab/matrix_rep.hpp"
#include "spinlab/mv_json.hpp"
#include "spinlab/spin_group.hpp"
#include "verify.hpp"

namespace spinlab::cli {

std::string to_string(Status s) {
    switch (s) {
    case Status::ok: return "ok";
    case Status::error: return "error";
    case Status::indeterminate: return "indeterminate";
    }
    return "error";
}

std::string CommandResult::render() const {
    if (!text.empty())
        return text;
    if (payload.is_null())
        return {};
    return (compact ? payload.dump() : payload.dump(2)) + "\n";
}

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inline JSON when the argument starts like a JSON value, otherwise a file path.
json load_json(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
        return json::parse(arg);
    std::ifstream in(arg);
    if (!in)
        throw UsageError("cannot read '" + arg + "': not inline JSON and not a readable file");
    return json::parse(in);
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_json(const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(complex_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw UsageError("matrix must be a non-empty row-major array of arrays");
    Eigen::MatrixXd m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j[0].size())
            throw UsageError("matrix rows must all have the same length");
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            if (!j[i][k].is_number())
                throw UsageError("matrix entries must be numbers");
            m(i, k) = j[i][k].get<double>();
        }
    }
    return m;
}

json real_mv_json(const RealMV& x) {
    json terms = json::array();
    for (const auto& [mask, c] : x.terms())
        terms.push_back({{"mask", mask}, {"re", c}});
    return {{"sig", {x.signature().r(), x.signature().s()}}, {"terms", std::move(terms)}};
}

int max_lattice_size() {
    if (const char* env = std::getenv(kMaxLEnv)) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0)
                return cap;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string(kMaxLEnv) + " must be a positive integer");
    }
    return kDefaultMaxL;
}

void require_lattice(int L) {
    const int cap = max_lattice_size();
    if (L > cap)
        throw UsageError("L = " + std::to_string(L) + " exceeds the lattice-size cap " + std::to_string(cap) + " (set " +
                         kMaxLEnv + " to raise it)");
}

FluxMode parse_flux_mode(const std::string& text) {
    FluxMode mode;
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("--flux-mode expects j,k");
    try {
        std::size_t used = 0;
        mode.j = std::stoi(text.substr(0, comma), &used);
        if (used != comma)
            throw UsageError("");
        const std::string rest = text.substr(comma + 1);
        mode.k = std::stoi(rest, &used);
        if (used != rest.size())
            throw UsageError("");
    } catch (const std::exception&) {
        throw UsageError("--flux-mode expects two integers j,k");
    }
    return mode;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args, const DispatchOptions& options) {
    CommandResult result;

    CLI::App app{"Clifford algebras, spin groups and lattice Dirac operators", "spinlab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    double tolerance_scale = 1.0;
    bool compact = false;
    app.add_option("--seed", seed, "Seed for randomized checks");
    app.add_option("--tolerance-scale", tolerance_scale, "Multiply every verification tolerance")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", compact, "Compact single-line JSON output");

    std::function<void()> run;

    // classify
    auto* classify = app.add_subcommand("classify", "Identify Cl(r,s) or Cl_n(C) as a matrix algebra");
    int cl_r = -1, cl_s = -1, cl_n = -1;
    bool cl_complex = false;
    classify->add_option("--r", cl_r, "Generators squaring to -1")->check(CLI::NonNegativeNumber);
    classify->add_option("--s", cl_s, "Generators squaring to +1")->check(CLI::NonNegativeNumber);
    classify->add_flag("--complex", cl_complex, "Complex Clifford algebra");
    classify->add_option("--n", cl_n, "Dimension for --complex")->check(CLI::NonNegativeNumber);
    classify->callback([&] {
        run = [&] {
            AlgebraType t;
            int n = 0;
            if (cl_complex) {
                if (cl_n < 0)
                    throw UsageError("classify --complex needs --n");
                t = classify_complex(cl_n);
                n = cl_n;
            } else {
                if (cl_r < 0 && cl_s < 0)
                    throw UsageError("classify needs --r and/or --s");
                t = classify_real(std::max(cl_r, 0), std::max(cl_s, 0));
                n = std::max(cl_r, 0) + std::max(cl_s, 0);
            }
            result.payload = {{"base", to_string(t.base)}, {"matrix_size", t.matrix_size}, {"dim", std::int64_t{1} << n}};
        };
    });

    // radon
    auto* radon = app.add_subcommand("radon", "Radon-Hurwitz number and Clifford module dimension");
    long rd_n = 0;
    bool rd_emit = false;
    radon->add_option("--n", rd_n, "Dimension")->required()->check(CLI::PositiveNumber);
    radon->add_flag("--emit-matrices", rd_emit, "Include rho(n)-1 orthogonal anticommuting matrices");
    radon->callback([&] {
        run = [&] {
            if (rd_n > std::numeric_limits<int>::max())
                throw UsageError("--n too large");
            result.payload = {{"rho", radon_rho(rd_n)}, {"a", radon_dimension(static_cast<int>(rd_n))}};
            if (rd_emit) {
                json mats = json::array();
                for (const auto& m : hurwitz_radon_matrices(rd_n).matrices)
                    mats.push_back(matrix_json(m));
                result.payload["matrices"] = std::move(mats);
            }
        };
    });

    // rep
    auto* rep = app.add_subcommand("rep", "Pauli-type complex representation of Cl_n");
    int rp_n = 0;
    std::string rp_variant = "rho", rp_out = "json";
    bool rp_check = false;
    rep->add_option("--n", rp_n, "Number of generators")->required()->check(CLI::PositiveNumber);
    rep->add_option("--variant", rp_variant, "rho or rhoprime (odd n)")->check(CLI::IsMember({"rho", "rhoprime"}));
    rep->add_option("--out", rp_out, "Output format")->check(CLI::IsMember({"json"}));
    rep->add_flag("--check", rp_check, "Run the representation invariants and print residuals");
    rep->callback([&] {
        run = [&] {
            const MatrixRep r = pauli_generators(rp_n, variant_from_string(rp_variant));
            if (!rp_check) {
                json gens = json::array();
                for (const auto& g : r.generators)
                    gens.push_back(matrix_json(g));
                result.payload = {{"n", r.n}, {"variant", to_string(r.variant)}, {"dim", r.dim()}, {"generators", gens}};
                return;
            }
            const double tol = 1e-12 * tolerance_scale;
            const RelationResiduals rel = check_relations(r);
            json out = {{"clifford", rel.clifford}, {"skew_hermitian", rel.skew_hermitian}, {"unitary", rel.unitary}};
            bool ok = rel.passed(tol);
            if (rp_n % 2 == 0) {
                const bool faithful = faithfulness_check(r);
                const StructuralMap theta = structural_map(rp_n);
                const StructuralResiduals s = check_structural_map(theta, r);
                out["faithful"] = faithful;
                out["structural_sign"] = theta.sign;
                out["structural_square"] = s.square;
                out["structural_commutation"] = s.commutation;
                ok = ok && faithful && theta.sign == structural_sign_expected(rp_n) && s.square <= tol &&
                     s.commutation <= tol;
            } else {
                const bool faithful = faithfulness_check(odd_direct_sum(rp_n));
                const CMatrix w = volume_representation(r);
                const double sign = r.variant == Variant::rho ? 1.0 : -1.0;
                const double vol = max_abs(CMatrix(w - sign * CMatrix::Identity(r.dim(), r.dim())));
                out["faithful_direct_sum"] = faithful;
                out["volume"] = vol;
                ok = ok && faithful && vol <= tol;
            }
            result.payload = std::move(out);
            if (!ok) {
                result.status = Status::error;
                result.diagnostics.push_back("representation invariants exceed tolerance");
            }
        };
    });

    // spin
    auto* spin = app.add_subcommand("spin", "Spin double cover");
    spin->require_subcommand(1);
    auto* lift = spin->add_subcommand("lift", "Lift a rotation matrix to Spin(n)");
    std::string lf_matrix;
    lift->add_option("--matrix", lf_matrix, "Row-major JSON matrix, inline or a file")->required();
    lift->callback([&] {
        run = [&] {
            const Eigen::MatrixXd r = matrix_from_json(load_json(lf_matrix));
            const Lift l = lift_rotation(r);
            json refl = json::array();
            for (const auto& u : l.reflections)
                refl.push_back(std::vector<double>(u.data(), u.data() + u.size()));
            const double residual = (twisted_adjoint_matrix(l.versor) - r).cwiseAbs().maxCoeff();
            result.payload = {{"versor", real_mv_json(l.versor)},
                              {"reflections", std::move(refl)},
                              {"pin_only", l.pin_only},
                              {"residual", residual}};
        };
    });
    auto* demo = spin->add_subcommand("demo", "Track the lift of a full turn in the (1,2) plane");
    int dm_n = 3, dm_steps = 64;
    demo->add_option("--n", dm_n, "Dimension")->check(CLI::Range(2, 16));
    demo->add_option("--steps", dm_steps, "Steps along t in [0, 1/2]")->check(CLI::PositiveNumber);
    demo->callback([&] {
        run = [&] {
            const DoubleCoverTrace t = double_cover_demo(dm_n, dm_steps);
            result.payload = {{"n", t.n},
                              {"steps", t.steps},
                              {"start", real_mv_json(t.start)},
                              {"end", real_mv_json(t.end)},
                              {"end_rotation", matrix_json(t.end_rotation)},
                              {"distance_to_minus_one", t.distance_to_minus_one},
                              {"rotation_deviation", t.rotation_deviation}};
        };
    });

    // dirac
    auto* dirac = app.add_subcommand("dirac", "Lattice Dirac operators on flat tori");
    dirac->require_subcommand(1);
    int dr_m = 2, dr_L = 8, dr_q = 0, dr_count = 0;
    std::string dr_scheme = "fd", dr_flux;
    double dr_mass = kDefaultWilsonMass, dr_amplitude = FluxMode{}.amplitude;
    const auto schemes = CLI::IsMember({"fd", "central", "spectral"});

    auto* spectrum_cmd = dirac->add_subcommand("spectrum", "Eigenvalues of the flat Dirac operator");
    spectrum_cmd->add_option("--m", dr_m, "Torus dimension")->required()->check(CLI::PositiveNumber);
    spectrum_cmd->add_option("--L", dr_L, "Points per axis")->required();
    spectrum_cmd->add_option("--scheme", dr_scheme, "fd or spectral")->check(schemes);
    spectrum_cmd->add_option("--count", dr_count, "Only the K eigenvalues nearest zero")->check(CLI::PositiveNumber);
    spectrum_cmd->callback([&] {
        run = [&] {
            require_lattice(dr_L);
            const TorusGrid grid(dr_m, dr_L);
            const LatticeOperator d = build_flat_dirac(grid, pauli_generators(dr_m), scheme_from_string(dr_scheme));
            const Spectrum s = spectrum(d, dr_count > 0 ? std::optional<int>(dr_count) : std::nullopt);
            json values = json::array();
            for (const Complex z : s.values)
                values.push_back(s.real ? json(z.real()) : complex_json(z));
            result.payload = {{"eigenvalues", std::move(values)}};
        };
    });

    auto* square = dirac->add_subcommand("square-check", "max |D^2 + Laplacian (x) I|");
    square->add_option("--m", dr_m, "Torus dimension")->required()->check(CLI::PositiveNumber);
    square->add_option("--L", dr_L, "Points per axis")->required();
    square->add_option("--scheme", dr_scheme, "fd or spectral")->check(schemes);
    square->callback([&] {
        run = [&] {
            require_lattice(dr_L);
            const TorusGrid grid(dr_m, dr_L);
            const LatticeOperator d = build_flat_dirac(grid, pauli_generators(dr_m), scheme_from_string(dr_scheme));
            result.payload = {{"residual", dirac_square_residual(d, grid)}};
        };
    });

    auto* index = dirac->add_subcommand("index", "Overlap index for uniform flux q on the L x L torus");
    index->add_option("--q", dr_q, "Flux quantum")->required();
    index->add_option("--L", dr_L, "Points per axis")->required();
    index->add_option("--wilson-mass", dr_mass, "Wilson mass m0 in (0, 2)")->check(CLI::Range(0.0, 2.0));
    index->callback([&] {
        run = [&] {
            require_lattice(dr_L);
            const IndexResult r = spinc_index(dr_L, dr_q, dr_mass);
            std::ostringstream note;
            note << "H_W: " << r.positive << " positive, " << r.negative << " negative, min |lambda| "
                 << r.min_abs_eigenvalue;
            result.diagnostics.push_back(note.str());
            if (r.determinate) {
                result.payload = {{"index", r.index}};
            } else {
                result.status = Status::indeterminate;
                result.payload = {{"index", nullptr}, {"min_abs_eigenvalue", r.min_abs_eigenvalue}};
                result.diagnostics.push_back("sign(H_W) is ill-conditioned; index withheld");
            }
        };
    });

    auto* bw = dirac->add_subcommand("bw", "Bochner-Weitzenboeck residual");
    bw->add_option("--m", dr_m, "Torus dimension")->check(CLI::PositiveNumber);
    bw->add_option("--L", dr_L, "Points per axis")->required();
    bw->add_option("--flux-mode", dr_flux, "Single-mode gauge potential j,k (m = 2)");
    bw->add_option("--amplitude", dr_amplitude, "Gauge potential amplitude");
    bw->callback([&] {
        run = [&] {
            require_lattice(dr_L);
            if (dr_flux.empty()) {
                result.payload = {{"residual", bochner_untwisted_residual(TorusGrid(dr_m, dr_L))}};
                return;
            }
            if (dr_m != 2)
                throw UsageError("--flux-mode needs --m 2");
            FluxMode mode = parse_flux_mode(dr_flux);
            mode.amplitude = dr_amplitude;
            result.payload = {{"residual", bochner_twisted_residual(dr_L, mode, 4, seed)}};
        };
    });

    // mv
    auto* mv = app.add_subcommand("mv", "Exact multivector arithmetic on JSON elements");
    mv->require_subcommand(1);
    std::string mv_a, mv_b;
    auto unary = [&](const std::string& name, const std::string& help,
                     std::function<json(const ExactElement&)> op) {
        auto* sub = mv->add_subcommand(name, help);
        sub->add_option("x", mv_a, "Element as inline JSON or a file")->required();
        sub->callback([&, op] { run = [&, op] { result.payload = op(multivector_from_json(load_json(mv_a))); }; });
    };
    auto* product = mv->add_subcommand("product", "Clifford product x y");
    product->add_option("x", mv_a, "Left factor")->required();
    product->add_option("y", mv_b, "Right factor")->required();
    product->callback([&] {
        run = [&] {
            const ExactElement x = multivector_from_json(load_json(mv_a));
            const ExactElement y = multivector_from_json(load_json(mv_b));
            if (!(x.signature() == y.signature()))
                throw UsageError("factors have different signatures");
            result.payload = to_json(ExactElement::product(x, y, options.kernel));
        };
    });
    unary("grade-involution", "alpha(x)", [](const ExactElement& x) { return to_json(grade_involution(x)); });
    unary("reverse", "x^t", [](const ExactElement& x) { return to_json(reversal(x)); });
    unary("conjugate", "conjugate of x", [](const ExactElement& x) { return to_json(conjugation(x)); });
    unary("norm", "N(x) = x conj(x)", [](const ExactElement& x) { return to_json(spinor_norm(x)); });
    unary("to-exterior", "Symbol map into the exterior algebra",
          [](const ExactElement& x) { return to_json(clifford_to_lambda(x)); });

    // verify
    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    std::string vf_suite = "all", vf_level = "quick";
    verify->add_option("suite", vf_suite, "all, clifford, classify, rep, spin or dirac")
        ->check(CLI::IsMember({"all", "clifford", "classify", "rep", "spin", "dirac"}));
    verify->add_option("--level", vf_level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->callback([&] {
        run = [&] {
            VerifyOptions vo;
            vo.seed = seed;
            vo.level = level_from_string(vf_level);
            vo.tolerance_scale = tolerance_scale;
            vo.suite = vf_suite;
            vo.kernel = options.kernel;
            const VerifyReport report = run_verify(vo);
            result.payload = report.to_json();
            for (const auto& c : report.checks)
                if (!c.passed) {
                    std::ostringstream msg;
                    msg << "FAILED " << c.name << ": residual " << c.residual << " > " << c.tolerance;
                    if (!c.detail.empty())
                        msg << " (" << c.detail << ")";
                    result.diagnostics.push_back(msg.str());
                }
            if (!report.passed())
                result.status = Status::error;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.text = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.text = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.status = Status::error;
        result.diagnostics.push_back(std::string("error: ") + e.what());
        result.diagnostics.push_back(app.help());
        return result;
    }
    result.compact = compact;

    try {
        if (!run)
            throw UsageError("no subcommand selected");
        run();
    } catch (const UsageError& e) {
        result.status = Status::error;
        result.payload = nullptr;
        result.diagnostics.push_back(std::string("error: ") + e.what());
        result.diagnostics.push_back(app.help());
    } catch (const std::exception& e) {
        result.status = Status::error;
        result.payload = nullptr;
        result.diagnostics.push_back(std::string("error: ") + e.what());
    }
    return result;
}

}  // namespace spinlab::cli
