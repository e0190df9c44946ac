#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "rol/fixtures.hpp"
#include "rol/io.hpp"
#include "rol/rolkit.hpp"

namespace rol::cli {

namespace {

using io::Json;

struct Config {
    double tol = kClassifyTol;
    double angle_tol = kAngleTol;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::optional<std::string> field;

    Tolerances tolerances() const { return Tolerances{tol, angle_tol, std::nullopt}; }
    Field field_or(Field fallback) const { return field ? field_from_string(*field) : fallback; }
};

/// Brings a parsed matrix to the requested field; complex data cannot be
/// demoted without loss.
Matrix to_field(const Matrix& m, const Config& cfg)
{
    if (!cfg.field) return m;
    const Field f = field_from_string(*cfg.field);
    if (f == Field::Real && m.max_imag() != 0.0)
        throw ParseError("--field real given for a matrix with complex entries");
    return m.as_field(f);
}

Json classification(const Matrix& a, const Matrix& b, const Config& cfg)
{
    const Tolerances tols = cfg.tolerances();
    const RolReport report = classify_pair(a, b, tols);
    const TwelveWay twelve = twelve_way_suite(a, b, tols);
    const WeakClass weak = classify_123_124(a, b, tols);
    Json out;
    out["report"] = io::report_to_json(report);
    out["twelve_way"] = io::twelve_way_to_json(twelve, cfg.tol);
    out["weak_class"] = io::weak_class_to_json(weak, cfg.tol);
    out["consistent"] = report.consistent() && twelve.all_agree() && weak.consistent();
    return out;
}

Matrix random_with_rank(std::size_t m, std::size_t n, std::size_t r, Rng& rng, Field f)
{
    if (r > std::min(m, n)) throw PlanInfeasible("rank(A) exceeds min(m, n)");
    const auto sigma = random_integer_sigma(r, rng);
    const Matrix u = random_unitary(m, rng, f).columns(0, r);
    const Matrix v = random_unitary(n, rng, f).columns(0, r);
    return u * Matrix::diagonal(r, r, sigma, f) * adjoint(v);
}

struct GenerateArgs {
    std::string kind;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> ranks;
    std::size_t shared = 0;
    std::string out_dir = ".";
};

std::pair<Matrix, Matrix> generate_pair(const GenerateArgs& g, const Config& cfg)
{
    const std::size_t m = g.dims[0], n = g.dims[1], k = g.dims[2];
    const std::size_t ra = g.ranks[0], rb = g.ranks[1];
    const Field f = cfg.field_or(Field::Real);

    if (g.kind == "rol" || g.kind == "zero") {
        const std::size_t s = g.kind == "zero" ? 0 : g.shared;
        if (s > rb) throw PlanInfeasible("N exceeds rank(B)");
        Rng rng(cfg.seed);
        const Matrix a = random_with_rank(m, n, ra, rng, f);
        ConstructionPlan plan;
        plan.s = s;
        plan.t = rb - s;
        plan.k = k;
        plan.sigma_b = random_integer_sigma(rb, rng);
        plan.seed = rng();
        return {a, construct_partner(a, plan)};
    }
    PairSpec spec{m, n, k, ra, rb, g.shared, cfg.seed, f, std::nullopt, std::nullopt};
    if (g.kind == "cls12") return construct_pair_12(spec);
    if (g.kind == "cls123") return construct_pair_123(spec);
    return construct_pair_124(spec);
}

bool requested_class(const std::string& kind, const Json& doc)
{
    const Json& w = doc["weak_class"];
    if (kind == "cls12") return w["is12"].get<bool>();
    if (kind == "cls123") return w["is123"].get<bool>();
    if (kind == "cls124") return w["is124"].get<bool>();
    return doc["report"]["rol"]["holds"].get<bool>();
}

int cmd_generate(const GenerateArgs& g, const Config& cfg, std::ostream& out)
{
    const auto [a, b] = generate_pair(g, cfg);
    const io::Format format = io::format_from_string(cfg.format);
    const std::string ext = format == io::Format::Json ? ".json" : ".csv";
    const std::filesystem::path dir(g.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    io::save_matrix(dir / ("A" + ext), a, format);
    io::save_matrix(dir / ("B" + ext), b, format);

    Json doc;
    doc["kind"] = g.kind;
    doc["dims"] = g.dims;
    doc["ranks"] = g.ranks;
    doc["N"] = g.shared;
    doc["seed"] = cfg.seed;
    const Json cls = classification(a, b, cfg);
    for (const auto& [key, value] : cls.items()) doc[key] = value;
    const bool achieved = requested_class(g.kind, cls);
    doc["requested_class_achieved"] = achieved;
    const std::string text = doc.dump(2) + "\n";
    {
        std::ofstream report(dir / "report.json", std::ios::binary);
        if (!report || !(report << text)) throw IoError("cannot write report.json");
    }
    out << text;
    return achieved ? kOk : kFailed;
}

int cmd_check(const std::string& path_a, const std::string& path_b, const Config& cfg,
              std::ostream& out)
{
    const Matrix a = to_field(io::load_matrix(path_a), cfg);
    const Matrix b = to_field(io::load_matrix(path_b), cfg);
    if (a.cols() != b.rows())
        throw ParseError("A is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " but B has " + std::to_string(b.rows()) + " rows");
    const Json doc = classification(a, b, cfg);
    out << doc.dump(2) << "\n";
    return doc["consistent"].get<bool>() ? kOk : kInconsistent;
}

int cmd_svd_family(const std::string& path, std::size_t count, const Config& cfg, std::ostream& out)
{
    const Matrix a = to_field(io::load_matrix(path), cfg);
    const SvdFactors base = compute_svd(a);
    const SpectralBlocks blocks = group_spectrum(base);
    Rng rng(cfg.seed);
    const Field f = a.field();

    Json family = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Matrix> unitaries;
        for (const IndexRange& blk : blocks.blocks) unitaries.push_back(random_unitary(blk.size, rng, f));
        const Matrix null_right = random_unitary(blocks.null_dim_right, rng, f);
        const Matrix null_left = random_unitary(blocks.null_dim_left, rng, f);
        const SvdFactors svd = reparametrize_svd(base, blocks, unitaries, null_right, null_left);
        Json member = io::svd_to_json(svd);
        member["reconstruction_error"] = rel_diff(svd.reconstruct(), a);
        family.push_back(std::move(member));
    }
    Json block_sizes = Json::array();
    for (const IndexRange& blk : blocks.blocks) block_sizes.push_back(blk.size);
    Json doc{{"sigma", base.sigma}, {"block_sizes", block_sizes}, {"count", count}, {"family", family}};
    out << doc.dump(2) << "\n";
    return kOk;
}

struct FixtureRow {
    std::string name;
    double residual;
    bool pass;
};

/// Every published example, rerun against the library.
std::vector<FixtureRow> run_fixtures(const Config& cfg)
{
    const Tolerances tols = cfg.tolerances();
    const Field f = cfg.field_or(Field::Real);
    const auto lift = [&](fixtures::Pair p) { return fixtures::Pair{p.first.as_field(f), p.second.as_field(f)}; };
    std::vector<FixtureRow> rows;
    const auto row = [&](std::string name, const std::function<std::pair<double, bool>()>& body) {
        try {
            const auto [res, ok] = body();
            rows.push_back({std::move(name), res, ok});
        } catch (const std::exception&) {
            rows.push_back({std::move(name), std::nan(""), false});
        }
    };

    row("intro: pinv(AB)=1, pinv(B)pinv(A)=1/2, all twelve false", [&] {
        const auto [a, b] = lift(fixtures::intro());
        const RolReport r = classify_pair(a, b, tols);
        const TwelveWay t = twelve_way_suite(a, b, tols);
        const bool none = std::none_of(t.items.begin(), t.items.end(), [](const Check& c) { return c.holds; });
        const double res = std::abs(r.rol_residual - 0.5);
        return std::pair{res, res <= 1e-12 && !r.rol_holds && none};
    });
    row("counterexample: ROL holds, [A*A,BB*] = 81 * skew", [&] {
        const auto [a, b] = lift(fixtures::counterexample());
        const Matrix want = fixtures::counterexample_pinv();
        const Matrix aa = adjoint(a) * a, bb = b * adjoint(b);
        const double res = std::max({fro_norm(pinv(a * b) - pinv(b) * pinv(a)), max_abs(pinv(a * b) - want),
                                     max_abs(pinv(b) * pinv(a) - want),
                                     fro_norm(aa * bb - bb * aa - 81.0 * fixtures::counterexample_commutator_pattern())});
        const RolReport r = classify_pair(a, b, tols);
        return std::pair{res, res <= 1e-10 && r.rol_holds && r.rank_a == 3 && r.rank_b == 2 && r.rank_ab > 0};
    });
    row("counterexample: derived identities", [&] {
        const auto [a, b] = lift(fixtures::counterexample());
        const double res = derived_rols_check(a, b, tols).max_residual();
        return std::pair{res, res <= 1e-9};
    });
    row("partner of the counterexample A (s=1, t=1, k=4)", [&] {
        const Matrix a = lift(fixtures::counterexample()).first;
        const Matrix b = construct_partner(a, {.s = 1, .t = 1, .k = 4, .sigma_b = {3, 1}, .seed = cfg.seed, .j_indices = std::nullopt});
        const RolReport r = classify_pair(a, b, tols);
        return std::pair{r.rol_relative, r.rol_holds && r.rank_b == 2 && r.rank_ab == 1};
    });
    row("geometric: angles {0, pi/2}, class {1,2}", [&] {
        const auto [a, b] = lift(fixtures::geometric());
        const RolReport r = classify_pair(a, b, tols);
        if (r.angles.angles.size() != 2) return std::pair{1.0, false};
        const double res = std::max(std::abs(r.angles.angles[0]),
                                    std::abs(r.angles.angles[1] - std::numbers::pi / 2));
        const WeakClass w = classify_123_124(a, b, tols);
        return std::pair{res, res <= 1e-10 && r.penrose_class.label() == "{1,2}" && !r.proj_test.holds &&
                                  !w.is123 && !w.is124};
    });
    row("class123: pinv values, class {1,2,3}", [&] {
        const auto [a, b] = lift(fixtures::class123());
        const double res = std::max(max_abs(pinv(a * b) - fixtures::class123_pinv_ab()),
                                    max_abs(pinv(b) * pinv(a) - fixtures::class123_reverse()));
        const WeakClass w = classify_123_124(a, b, tols);
        return std::pair{res, res <= 1e-12 && w.penrose.label() == "{1,2,3}" && w.consistent()};
    });
    row("zero product: aligned spans are {0}", [&] {
        const auto [a, b] = lift(fixtures::zero_product());
        const auto [sa, sb] = aligned_svds(a, b, tols);
        const SpanCondition c = span_condition(a, b, sa, sb);
        return std::pair{fro_norm(a * b), c.equal && c.lhs.dim() == 0};
    });
    row("I = Q I Q^*", [&] {
        const Matrix eye = Matrix::identity(2, f);
        Rng rng(cfg.seed);
        const SvdFactors base = compute_svd(eye);
        const SpectralBlocks blocks = group_spectrum(base);
        const Matrix q = random_unitary(2, rng, f);
        const std::vector<Matrix> unitaries{q};
        const SvdFactors svd = reparametrize_svd(base, blocks, unitaries, Matrix(0, 0, f), Matrix(0, 0, f));
        const double res = rel_diff(svd.reconstruct(), eye);
        return std::pair{res, res <= 1e-11 && blocks.blocks.size() == 1};
    });
    row("listing 2 (40,21,30; 6,8; N=3): class {1,2}", [&] {
        const auto [a, b] = construct_pair_12({40, 21, 30, 6, 8, 3, cfg.seed, f, std::nullopt, std::nullopt});
        const RolReport r = classify_pair(a, b, tols);
        return std::pair{r.rol_relative, r.penrose_class.label() == "{1,2}" && !r.rol_holds && r.rank_ab == 3};
    });
    row("listing 3 (40,21,30; 6,8; N=3): class {1,2,3}", [&] {
        const auto [a, b] = construct_pair_123({40, 21, 30, 6, 8, 3, cfg.seed, f, std::nullopt, std::nullopt});
        const Matrix xab = pinv(b) * pinv(a) * a * b;
        const WeakClass w = classify_123_124(a, b, tols);
        const double res = fro_norm(xab - adjoint(xab));
        return std::pair{res, w.is123 && !w.is124 && res > tols.tol};
    });
    row("some, not any SVD: span condition", [&] {
        Rng rng(cfg.seed);
        const Matrix a = random_with_rank(3, 4, 2, rng, f);
        const Matrix ub = random_unitary(4, rng, f);
        const SvdFactors naive{ub, std::vector<double>(4, 1.0), adjoint(ub) * ub};
        const bool violated = !span_condition(a, ub, compute_svd(a), naive).equal;
        const auto [sa, sb] = aligned_svds(a, ub, tols);
        const bool aligned = span_condition(a, ub, sa, sb).equal;
        return std::pair{rel_diff(naive.reconstruct(), ub), violated && aligned};
    });
    return rows;
}

int cmd_repro(const Config& cfg, std::ostream& out)
{
    const auto rows = run_fixtures(cfg);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    bool all = true;
    for (const auto& r : rows) {
        out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name
            << "  residual=" << std::setprecision(3) << std::scientific << r.residual << "\n";
        out.unsetf(std::ios::floatfield);
        all = all && r.pass;
    }
    out << (all ? "all fixtures pass" : "some fixtures FAILED") << "\n";
    return all ? kOk : kFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Reverse-order law toolkit for Moore-Penrose pseudoinverses", "revorder"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--tol", cfg.tol, "classification tolerance")->check(CLI::PositiveNumber);
    app.add_option("--angle-tol", cfg.angle_tol, "principal-angle tolerance (radians)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--format", cfg.format, "matrix output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--field", cfg.field, "scalar field")->check(CLI::IsMember({"real", "complex"}));

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "construct a pair of a given class");
    generate->add_option("kind", gen.kind, "rol | cls12 | cls123 | cls124 | zero")
        ->required()
        ->check(CLI::IsMember({"rol", "cls12", "cls123", "cls124", "zero"}));
    generate->add_option("--dims", gen.dims, "m,n,k")->delimiter(',')->required()->expected(3);
    generate->add_option("--ranks", gen.ranks, "r_A,r_B")->delimiter(',')->required()->expected(2);
    generate->add_option("--N", gen.shared, "shared dimension");
    generate->add_option("--out", gen.out_dir, "output directory");

    std::string path_a, path_b;
    auto* check = app.add_subcommand("check", "classify the pair stored in two files");
    check->add_option("A", path_a)->required();
    check->add_option("B", path_b)->required();

    std::string path_svd;
    std::size_t count = 3;
    auto* family = app.add_subcommand("svd-family", "emit seeded reparametrizations of an SVD");
    family->add_option("A", path_svd)->required();
    family->add_option("--count", count, "number of factorizations");

    auto* repro = app.add_subcommand("repro", "rerun the published examples");

    for (auto* sub : {generate, check, family, repro}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInfeasible;
    }

    try {
        if (*generate) return cmd_generate(gen, cfg, out);
        if (*check) return cmd_check(path_a, path_b, cfg, out);
        if (*family) return cmd_svd_family(path_svd, count, cfg, out);
        if (*repro) return cmd_repro(cfg, out);
    } catch (const PlanInfeasible& e) {
        err << "infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kIoError;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const RolNotSatisfied& e) {
        err << "inconsistent: " << e.what() << "\n";
        return kInconsistent;
    }
    return kOk;
}

} // namespace rol::cli
