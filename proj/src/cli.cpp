#include "dqeig/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqeig/bench.hpp"
#include "dqeig/errors.hpp"
#include "dqeig/io.hpp"
#include "dqeig/power.hpp"

namespace dqeig::cli {

namespace {

constexpr double kPentagonMatchTol = 5e-4;

struct SolveOptions {
    std::string path;
    std::string alg = "eddcam";
    double tol = 1e-6;
    std::size_t max_iter = 5000;
    std::uint64_t seed = 0;
    std::string out;
};

struct BenchOptions {
    std::string kind;
    std::vector<std::size_t> sizes;
    std::vector<double> sparsities;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> max_iter;
    std::optional<double> tol;
    std::string csv;
};

struct PentagonOptions {
    std::string alg = "eddcam";
    bool json = false;
    std::size_t max_iter = 5000;
    std::uint64_t seed = 0;
};

struct FixtureOptions {
    std::string kind;
    std::size_t n = 10;
    double sparsity = 0.3;
    std::uint64_t seed = 0;
    std::string out;
};

SolveReport single_pair(const std::string& alg, const DQMatrix& q, const PowerIterConfig& cfg) {
    const PowerResult r = alg == "dcam" ? dcam_pm(q, cfg) : adcam_pm(q, cfg);
    SolveReport rep;
    rep.algorithm = alg;
    rep.converged = r.trace.converged;
    rep.result.pairs.push_back({r.value, {r.vector}});
    rep.result.iterations.push_back(r.trace.iterations);
    rep.result.residual = eigen_residual(q, r.value, r.vector);
    if (!r.trace.converged) {
        rep.message = "no convergence in " + std::to_string(r.trace.iterations) + " iterations";
    }
    if (r.trace.imag_flag) {
        rep.message += (rep.message.empty() ? "" : "; ") + std::string("Rayleigh quotient imaginary residue ") +
                       format_double(r.trace.imag_residue);
    }
    return rep;
}

SolveReport all_pairs(const std::string& alg, const DQMatrix& q, const PowerIterConfig& cfg) {
    SolveReport rep;
    rep.algorithm = alg;
    try {
        if (alg == "eddcam") {
            rep.result = eddcam_ea(q);
        } else if (alg == "dcama") {
            rep.result = dcama_pm(q, cfg);
        } else {
            rep.result = pm_deflation(q, cfg);
        }
    } catch (const InnerNoConvergence& e) {
        rep.converged = false;
        rep.message = e.what();
        rep.result = e.partial();
    }
    return rep;
}

void require_hermitian(const DQMatrix& q) {
    if (q.rows() != q.cols() || q.rows() == 0) throw NotHermitian("matrix must be square and non-empty");
    const double dev = q.hermitian_deviation();
    if (dev > kDefaultStructureTol * std::max(1.0, norm_FR(q))) {
        throw NotHermitian("matrix deviates from Hermitian by " + format_double(dev));
    }
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
    const DQMatrix q = read_matrix_file(o.path);
    require_hermitian(q);
    PowerIterConfig cfg;
    cfg.tol = o.tol;
    cfg.max_iter = o.max_iter;
    cfg.seed = o.seed;
    cfg.aitken_trigger = std::max(cfg.aitken_trigger, cfg.tol);
    cfg.validate();

    const SolveReport rep = (o.alg == "dcam" || o.alg == "adcam") ? single_pair(o.alg, q, cfg) : all_pairs(o.alg, q, cfg);
    const std::string doc = report_to_json(rep);
    if (o.out.empty()) {
        out << doc << '\n';
    } else {
        std::ofstream f(o.out);
        if (!f) throw InvalidArgument("cannot write " + o.out);
        f << doc << '\n';
    }
    return rep.converged ? kExitOk : kExitNoConvergence;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
    BenchParams p;
    if (o.kind == "laplacian") {
        p = laplacian_defaults();
    } else {
        p.kind = BenchKind::Aitken;
        p.sizes = {10};
        p.trials = 100;
    }
    if (!o.sizes.empty()) p.sizes = o.sizes;
    if (!o.sparsities.empty()) p.sparsities = o.sparsities;
    if (o.trials != 0) p.trials = o.trials;
    if (o.max_iter) p.cfg.max_iter = *o.max_iter;
    if (o.tol) p.cfg.tol = *o.tol;
    p.cfg.aitken_trigger = std::max(p.cfg.aitken_trigger, p.cfg.tol);
    p.seed = o.seed;

    const auto rows = aggregate(run_benchmark(p), p.seed);
    std::ofstream f(o.csv);
    if (!f) throw InvalidArgument("cannot write " + o.csv);
    write_csv(f, rows);
    std::size_t failures = 0;
    for (const auto& r : rows) failures += r.failures;
    out << "wrote " << rows.size() << " rows to " << o.csv;
    if (failures > 0) out << " (" << failures << " non-converged trials)";
    out << '\n';
    return kExitOk;
}

std::string format_eigenvalue(const DualNumber& v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%8.4f %c %.4f eps", v.st, v.du < 0 ? '-' : '+', std::abs(v.du));
    return buf;
}

int cmd_pentagon(const PentagonOptions& o, std::ostream& out) {
    const DQMatrix p = pentagon_fixture();
    PowerIterConfig cfg;
    cfg.max_iter = o.max_iter;
    cfg.seed = o.seed;
    const SolveReport rep = all_pairs(o.alg, p, cfg);

    const std::vector<DualNumber> found = rep.result.eigenvalues();
    const std::vector<DualNumber> ref = pentagon_reference();
    bool match = rep.converged && found.size() == ref.size();
    for (std::size_t k = 0; match && k < ref.size(); ++k) {
        match = std::abs(found[k].st - ref[k].st) <= kPentagonMatchTol &&
                std::abs(found[k].du - ref[k].du) <= kPentagonMatchTol;
    }

    if (o.json) {
        nlohmann::json doc;
        doc["algorithm"] = o.alg;
        doc["converged"] = rep.converged;
        doc["matches_reference"] = match;
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : found) vals.push_back({v.st, v.du});
        doc["eigenvalues"] = vals;
        doc["e_lambda"] = std::isfinite(rep.result.residual) ? nlohmann::json(rep.result.residual) : nlohmann::json();
        if (!rep.message.empty()) doc["message"] = rep.message;
        out << doc.dump(2) << '\n';
    } else {
        out << "algorithm: " << o.alg << '\n';
        if (!rep.converged) out << "non-convergence: " << rep.message << '\n';
        out << (rep.converged ? "eigenvalues:" : "eigenvalues found before failure:") << '\n';
        for (const auto& v : found) out << "  " << format_eigenvalue(v) << '\n';
        out << "e_lambda: " << rep.result.residual << '\n';
        out << "reference match (5e-4): " << (match ? "yes" : "no") << '\n';
    }
    if (!rep.converged) return kExitNoConvergence;
    return match ? kExitOk : kExitInputError;
}

int cmd_fixture(const FixtureOptions& o, std::ostream& out) {
    DQMatrix q;
    if (o.kind == "pentagon") {
        q = pentagon_fixture();
    } else if (o.kind == "random") {
        q = random_hermitian(o.n, o.seed);
    } else {
        q = build_laplacian(random_graph(o.n, o.sparsity, o.seed));
    }
    if (o.out.empty()) {
        out << matrix_to_json(q) << '\n';
    } else {
        write_matrix_file(o.out, q);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eigenvalues of dual quaternion Hermitian matrices", "dqeig"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto* s = app.add_subcommand("solve", "Compute eigenpairs of a matrix file");
    s->add_option("file", solve.path, "Matrix file (dqh-1 JSON)")->required();
    s->add_option("--alg", solve.alg, "Algorithm")
        ->check(CLI::IsMember({"eddcam", "dcama", "dcam", "adcam", "pm"}))
        ->capture_default_str();
    s->add_option("--tol", solve.tol, "Power iteration tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    s->add_option("--max-iter", solve.max_iter, "Iteration cap per power loop")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s->add_option("--seed", solve.seed, "Seed for random start vectors")->capture_default_str();
    s->add_option("--out", solve.out, "Write the result document here instead of stdout");

    BenchOptions bench;
    auto* b = app.add_subcommand("bench", "Run a seeded benchmark and write a CSV table");
    b->add_option("kind", bench.kind, "aitken or laplacian")->required()->check(CLI::IsMember({"aitken", "laplacian"}));
    b->add_option("--sizes", bench.sizes, "Matrix sizes")->delimiter(',')->check(CLI::PositiveNumber);
    b->add_option("--sparsities", bench.sparsities, "Graph sparsities in (0, 1]")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    b->add_option("--trials", bench.trials, "Trials per cell")->check(CLI::PositiveNumber);
    b->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
    b->add_option("--max-iter", bench.max_iter, "Iteration cap per power loop")->check(CLI::PositiveNumber);
    b->add_option("--tol", bench.tol, "Power iteration tolerance")->check(CLI::PositiveNumber);
    b->add_option("--csv", bench.csv, "Output CSV path")->required();

    PentagonOptions pent;
    auto* p = app.add_subcommand("pentagon", "Solve the five-agent cycle fixture");
    p->add_option("--alg", pent.alg, "eddcam or pm")->check(CLI::IsMember({"eddcam", "pm"}))->capture_default_str();
    p->add_flag("--json", pent.json, "Machine-readable output");
    p->add_option("--max-iter", pent.max_iter, "Iteration cap for --alg pm")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    p->add_option("--seed", pent.seed, "Seed for --alg pm")->capture_default_str();

    FixtureOptions fix;
    auto* f = app.add_subcommand("fixture", "Write a test matrix in dqh-1 format");
    f->add_option("kind", fix.kind, "pentagon, random or laplacian")
        ->required()
        ->check(CLI::IsMember({"pentagon", "random", "laplacian"}));
    f->add_option("--n", fix.n, "Size")->check(CLI::PositiveNumber)->capture_default_str();
    f->add_option("--sparsity", fix.sparsity, "Sparsity for laplacian")->capture_default_str();
    f->add_option("--seed", fix.seed, "Seed")->capture_default_str();
    f->add_option("--out", fix.out, "Output path (stdout if omitted)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*s) return cmd_solve(solve, out);
        if (*b) return cmd_bench(bench, out);
        if (*p) return cmd_pentagon(pent, out);
        if (*f) return cmd_fixture(fix, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace dqeig::cli
