// Acceptance run: one PASS/FAIL line per criterion. Every tolerance and
// seed used here is fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dqeig/adjoint.hpp"
#include "dqeig/bench.hpp"
#include "dqeig/cli.hpp"
#include "dqeig/dual_spectral.hpp"
#include "dqeig/errors.hpp"
#include "dqeig/power.hpp"

using namespace dqeig;

namespace {

// Criterion 1
constexpr double kPentagonTol = 5e-4;
constexpr double kPentagonResidual = 1e-10;
constexpr double kPentagonSeconds = 1.0;
// Criterion 2
constexpr std::size_t kPentagonMaxIter = 5000;
// Criterion 3
constexpr std::size_t kAitkenN = 10;
constexpr std::size_t kAitkenTrials = 100;
constexpr std::uint64_t kAitkenSeed = 1;
constexpr std::size_t kAitkenMaxIter = 20000;
constexpr double kAitkenTol = 1e-6;
constexpr double kAitkenTrigger = 1e-3;
constexpr double kAitkenMinSaving = 0.15;
constexpr double kAitkenResidual = 1e-6;
// Criterion 4
constexpr std::size_t kLaplacianTrials = 10;
constexpr std::uint64_t kLaplacianSeed = 1;
constexpr double kEddcamResidual = 1e-10;
constexpr double kDcamaResidual = 1e-9;
// Criterion 5
constexpr int kOracleInstances = 100;
constexpr std::size_t kOracleMaxN = 12;
constexpr double kOracleGap = 0.1;
constexpr double kOracleSpectrumTol = 1e-8;
constexpr double kOracleReconTol = 1e-8;
// Criterion 6
constexpr int kPropertyCases = 200;
constexpr double kAdjointTol = 1e-12;
constexpr double kEquivalenceTol = 1e-10;
constexpr double kFHTol = 1e-12;
constexpr double kDeflationTol = 1e-11;
constexpr double kCancellationTol = 1e-9;
constexpr double kOrthonormalTol = 1e-10;
constexpr double kAitkenExactTol = 1e-12;
// Criterion 7
constexpr int kMonotoneSeeds = 50;
constexpr std::size_t kMonotoneWindow = 10;
constexpr double kMonotoneBand = 1.1;

int failures = 0;
bool aitken_ordering = false;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] C%d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wformat-nonliteral"
std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}
#pragma GCC diagnostic pop

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Quaternion rand_quat(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double w = u(rng), x = u(rng), y = u(rng), z = u(rng);
    return {w, x, y, z};
}

DualQuaternion rand_dq(std::mt19937_64& rng) {
    const Quaternion s = rand_quat(rng);
    return {s, rand_quat(rng)};
}

DQMatrix rand_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    DQMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_dq(rng);
    return m;
}

DQVector rand_vector(std::size_t n, std::mt19937_64& rng) {
    DQVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rand_dq(rng);
    return v;
}

double dcdiff(const DCMatrix& a, const DCMatrix& b) {
    return std::max((a.st - b.st).cwiseAbs().maxCoeff(), (a.du - b.du).cwiseAbs().maxCoeff());
}

double dcvdiff(const DCVector& a, const DCVector& b) {
    return std::max((a.st - b.st).cwiseAbs().maxCoeff(), (a.du - b.du).cwiseAbs().maxCoeff());
}

double orthonormality_error(const std::vector<DQVector>& vs) {
    double worst = 0.0;
    for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = 0; b < vs.size(); ++b) {
            const DualQuaternion g = inner(vs[a], vs[b]);
            const DualQuaternion want = a == b ? DualQuaternion::identity() : DualQuaternion{};
            const DualQuaternion d = g - want;
            worst = std::max({worst, std::abs(d.st.w), std::abs(d.st.x), std::abs(d.st.y), std::abs(d.st.z),
                              std::abs(d.du.w), std::abs(d.du.x), std::abs(d.du.y), std::abs(d.du.z)});
        }
    }
    return worst;
}

DQMatrix from_columns(const std::vector<DQVector>& cols) {
    DQMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    return m;
}

void pentagon_reproduction() {
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    const int code = cli::run({"pentagon"}, out, err);
    const double elapsed = seconds_since(t0);

    const EigenResult r = eddcam_ea(pentagon_fixture());
    const auto got = r.eigenvalues();
    const auto ref = pentagon_reference();
    double worst = got.size() == ref.size() ? 0.0 : INFINITY;
    for (std::size_t k = 0; k < std::min(got.size(), ref.size()); ++k)
        worst = std::max({worst, std::abs(got[k].st - ref[k].st), std::abs(got[k].du - ref[k].du)});
    const bool ok = code == 0 && worst <= kPentagonTol && r.residual <= kPentagonResidual && elapsed < kPentagonSeconds;
    report(1, "pentagon reproduction", ok,
           fmt("max component error %.2e (tol %.0e), e_lambda %.3e (tol %.0e)", worst, kPentagonTol, r.residual,
               kPentagonResidual) +
               fmt(", runtime %.3f s (limit %.0f s), cli exit %.0f", elapsed, kPentagonSeconds, code));
}

void pentagon_failure_mode() {
    const DQMatrix p = pentagon_fixture();
    PowerIterConfig cfg;
    cfg.max_iter = kPentagonMaxIter;

    auto stalls = [&](const std::function<EigenResult()>& solve, std::size_t& pairs_found) {
        try {
            pairs_found = solve().pairs.size();
            return false;
        } catch (const InnerNoConvergence& e) {
            pairs_found = e.partial().pairs.size();
            return e.trace().iterations == kPentagonMaxIter && !e.trace().converged;
        }
    };
    std::size_t pm_pairs = 0, dcama_pairs = 0;
    const bool pm_stall = stalls([&] { return pm_deflation(p, cfg); }, pm_pairs);
    const bool dcama_stall = stalls([&] { return dcama_pm(p, cfg); }, dcama_pairs);
    const EigenResult e = eddcam_ea(p);
    const bool eddcam_ok = e.vector_count() == 5 && e.residual <= kPentagonResidual;
    report(2, "pentagon failure mode", pm_stall && dcama_stall && eddcam_ok,
           fmt("baseline PM stalls after %.0f pair(s), DCAMA-PM stalls after %.0f pair(s) within k_max %.0f; "
               "EDDCAM e_lambda %.3e",
               static_cast<double>(pm_pairs), static_cast<double>(dcama_pairs), kPentagonMaxIter, e.residual));
}

void aitken_trend() {
    BenchParams params;
    params.kind = BenchKind::Aitken;
    params.sizes = {kAitkenN};
    params.trials = kAitkenTrials;
    params.seed = kAitkenSeed;
    params.cfg.max_iter = kAitkenMaxIter;
    params.cfg.tol = kAitkenTol;
    params.cfg.aitken_trigger = kAitkenTrigger;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = aggregate(run_benchmark(params), params.seed);
    const double elapsed = seconds_since(t0);

    const BenchRow* dcam = nullptr;
    const BenchRow* adcam = nullptr;
    for (const auto& row : rows) {
        if (row.algorithm == "dcam") dcam = &row;
        if (row.algorithm == "adcam") adcam = &row;
    }
    if (!dcam || !adcam) {
        report(3, "Aitken trend", false, "benchmark rows missing");
        return;
    }
    const double saving = 1.0 - adcam->mean_iters / dcam->mean_iters;
    aitken_ordering = adcam->mean_iters < dcam->mean_iters;
    const bool ok = saving >= kAitkenMinSaving && dcam->mean_e_lambda <= kAitkenResidual &&
                    adcam->mean_e_lambda <= kAitkenResidual;
    report(3, "Aitken trend", ok,
           fmt("mean iterations DCAM %.2f vs ADCAM %.2f (saving %.1f%%, need %.0f%%)", dcam->mean_iters,
               adcam->mean_iters, 100.0 * saving, 100.0 * kAitkenMinSaving) +
               fmt(", mean e_lambda %.2e / %.2e (tol %.0e), failures %.0f", dcam->mean_e_lambda, adcam->mean_e_lambda,
                   kAitkenResidual, static_cast<double>(dcam->failures + adcam->failures)) +
               fmt(", %.1f s", elapsed));
}

void laplacian_accuracy() {
    BenchParams params = laplacian_defaults();
    params.sizes = {10};
    params.trials = kLaplacianTrials;
    params.seed = kLaplacianSeed;
    const auto rows = aggregate(run_benchmark(params), params.seed);

    bool ok = !rows.empty();
    double worst_eddcam = 0.0, worst_dcama = 0.0;
    int faster_rows = 0, row_count = 0;
    std::size_t fails = 0;
    for (const auto& row : rows) {
        fails += row.failures;
        if (row.algorithm == "eddcam") worst_eddcam = std::max(worst_eddcam, row.mean_e_lambda);
        if (row.algorithm == "dcama") worst_dcama = std::max(worst_dcama, row.mean_e_lambda);
        if (row.algorithm != "eddcam") continue;
        ++row_count;
        for (const auto& other : rows) {
            if (other.algorithm == "dcama" && other.sparsity == row.sparsity && row.mean_seconds < other.mean_seconds)
                ++faster_rows;
        }
    }
    ok = ok && row_count == 6 && fails == 0 && worst_eddcam <= kEddcamResidual && worst_dcama <= kDcamaResidual &&
         faster_rows == row_count;
    report(4, "Laplacian accuracy", ok,
           fmt("worst row mean e_lambda EDDCAM %.2e (tol %.0e), DCAMA %.2e (tol %.0e)", worst_eddcam, kEddcamResidual,
               worst_dcama, kDcamaResidual) +
               fmt(", EDDCAM faster on %.0f/%.0f rows, failures %.0f", faster_rows, row_count,
                   static_cast<double>(fails)));
}

void oracle_equivalence() {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> size(1, kOracleMaxN);
    double worst_spec = 0.0, worst_recon = 0.0;
    int errors = 0;
    for (int t = 0; t < kOracleInstances; ++t) {
        const std::size_t n = size(rng);
        try {
            const auto ks = synth_known_spectrum(random_spectrum(n, kOracleGap, 1000 + t), 2000 + t);
            const EigenResult r = eddcam_ea(ks.q);
            const auto got = r.eigenvalues();
            if (got.size() != n) {
                ++errors;
                continue;
            }
            for (std::size_t k = 0; k < n; ++k)
                worst_spec = std::max({worst_spec, std::abs(got[k].st - ks.sigma[k].st),
                                       std::abs(got[k].du - ks.sigma[k].du)});
            worst_recon = std::max(worst_recon, norm_FR(ks.q - reconstruct(r)) / norm_FR(ks.q));
        } catch (const Error&) {
            ++errors;
        }
    }
    report(5, "oracle equivalence",
           errors == 0 && worst_spec <= kOracleSpectrumTol && worst_recon <= kOracleReconTol,
           fmt("%.0f instances, worst spectrum error %.2e (tol %.0e), worst relative reconstruction %.2e", kOracleInstances,
               worst_spec, kOracleSpectrumTol, worst_recon) +
               fmt(" (tol %.0e), errors %.0f", kOracleReconTol, errors));
}

struct Suite {
    std::string name;
    double worst = 0.0;
    double tol = 0.0;
    int cases = 0;
    bool logical_ok = true;

    void record(double v) {
        worst = std::max(worst, std::isnan(v) ? INFINITY : v);
        ++cases;
    }
    [[nodiscard]] bool ok() const { return logical_ok && cases >= kPropertyCases && worst <= tol; }
};

void property_suites() {
    std::vector<Suite> suites;
    std::mt19937_64 rng(6);

    Suite adjoint_laws{"adjoint map laws", 0, kAdjointTol};
    for (int t = 0; t < kPropertyCases; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
        const DQMatrix a = rand_matrix(3, 3, rng), b = rand_matrix(3, 3, rng), c = rand_matrix(3, 3, rng);
        double d = dcdiff(adjoint(DQMatrix::identity(n)), DCMatrix::identity(static_cast<Eigen::Index>(2 * n)));
        d = std::max(d, dcdiff(adjoint(DQMatrix(n, n)), DCMatrix(2 * n, 2 * n)));
        d = std::max(d, dcdiff(adjoint(a * b), adjoint(a) * adjoint(b)));
        d = std::max(d, dcdiff(adjoint(a + c), adjoint(a) + adjoint(c)));
        d = std::max(d, dcdiff(adjoint(a.conj_transpose()), adjoint(a).conj_transpose()));
        adjoint_laws.record(d);

        const DQMatrix h = random_hermitian(4, 6000 + t);
        const DQMatrix w = from_columns([&] {
            std::vector<DQVector> cols;
            for (const auto& p : eddcam_ea(h).pairs)
                for (const auto& v : p.vectors) cols.push_back(v);
            return cols;
        }());
        const bool equivalences = h.is_hermitian() == adjoint(h).is_hermitian() &&
                                  a.is_hermitian() == adjoint(a).is_hermitian() &&
                                  w.is_unitary(1e-10) == adjoint(w).is_unitary(1e-10) &&
                                  a.is_unitary() == adjoint(a).is_unitary() && adjoint(h).is_hermitian() &&
                                  adjoint(w).is_unitary(1e-10) && !adjoint(a).is_unitary();
        adjoint_laws.logical_ok = adjoint_laws.logical_ok && equivalences;
    }
    suites.push_back(adjoint_laws);

    Suite equiv{"eigen-equation equivalence", 0, kEquivalenceTol};
    for (int t = 0; t < kPropertyCases; ++t) {
        const DQMatrix h = random_hermitian(4, 7000 + t);
        const EigenResult r = eddcam_ea(h);
        double worst = 0.0;
        for (const auto& p : r.pairs) {
            for (const auto& v : p.vectors) {
                const auto rep = check_eigen_equivalence(h, DualComplex{p.value}, v, kEquivalenceTol);
                worst = std::max({worst, rep.dq_residual, rep.u1_residual, rep.u2_residual});
                if (!rep.consistent) equiv.logical_ok = false;
            }
        }
        equiv.record(worst);
    }
    suites.push_back(equiv);

    Suite fh{"F/H identities", 0, kFHTol};
    for (int t = 0; t < kPropertyCases; ++t) {
        const DQVector v = rand_vector(1 + static_cast<std::size_t>(t % 6), rng);
        const DCVector f = vec_map_F(v);
        const DCVector h = vec_map_H(f);
        double d = dcvdiff(h, vec_map_F(v * DualQuaternion{Quaternion::j()}));
        DCVector neg = f;
        neg.st = -neg.st;
        neg.du = -neg.du;
        d = std::max(d, dcvdiff(vec_map_H(h), neg));
        const Complex s_st = f.st.dot(h.st);
        const Complex s_du = f.st.dot(h.du) + f.du.dot(h.st);
        d = std::max({d, std::abs(s_st), std::abs(s_du)});
        const DQVector back = vec_map_F_inverse(f);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const DualQuaternion e = back[i] - v[i];
            d = std::max({d, std::abs(e.st.w), std::abs(e.st.x), std::abs(e.st.y), std::abs(e.st.z),
                          std::abs(e.du.w), std::abs(e.du.x), std::abs(e.du.y), std::abs(e.du.z)});
        }
        fh.record(d);
    }
    suites.push_back(fh);

    Suite deflation{"deflation identity", 0, kDeflationTol};
    for (int t = 0; t < kPropertyCases; ++t) {
        const DQMatrix q = random_hermitian(5, 8000 + t);
        const EigenResult r = eddcam_ea(q);
        const EigenPair& p = r.pairs[static_cast<std::size_t>(t) % r.pairs.size()];
        const DQVector& v = p.vectors.front();
        const DCVector f = vec_map_F(v);
        const DCVector h = vec_map_H(f);
        const DualComplex lam{p.value};
        deflation.record(dcdiff(adjoint(q - outer(v * p.value, v)), adjoint(q) - outer(f, f) * lam - outer(h, h) * lam));
    }
    suites.push_back(deflation);

    Suite cancel{"dual off-diagonal cancellation", 0, kCancellationTol};
    for (int t = 0; t < kPropertyCases; ++t) {
        const DCMatrix p = adjoint(random_hermitian(4, 9000 + t));
        const auto dec = eig_dual_complex_hermitian(p);
        const Eigen::MatrixXcd& uv = dec.U_hat.st;
        const Eigen::MatrixXcd qm = uv.adjoint() * p.du * uv;
        const Eigen::MatrixXcd tm = uv.adjoint() * dec.U_hat.du;
        const Eigen::Index m = qm.rows();
        double worst = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            for (Eigen::Index j = 0; j < m; ++j) {
                if (i == j) continue;
                const double li = dec.sigma[static_cast<std::size_t>(i)].st;
                const double lj = dec.sigma[static_cast<std::size_t>(j)].st;
                worst = std::max(worst, std::abs(qm(i, j) + lj * std::conj(tm(j, i)) + li * tm(i, j)));
            }
        }
        cancel.record(worst / std::max(1.0, norm_FR(p)));
    }
    suites.push_back(cancel);

    Suite ortho{"Gram-Schmidt orthonormality", 0, kOrthonormalTol};
    for (int t = 0; t < kPropertyCases; ++t) {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const DualNumber lam{2.0, u(rng)};
        const auto ks = synth_known_spectrum({lam, lam, {0.5, u(rng)}, {-1.0, u(rng)}}, 10000 + t);
        const EigenResult r = eddcam_ea(ks.q);
        std::vector<DQVector> basis = r.pairs.front().vectors;
        if (basis.size() != 2) {
            ortho.logical_ok = false;
            continue;
        }
        // Three mixed candidates spanning the same two-dimensional eigenspace.
        std::vector<DQVector> candidates;
        for (int c = 0; c < 3; ++c)
            candidates.push_back(basis[0] * DualQuaternion{rand_quat(rng)} + basis[1] * DualQuaternion{rand_quat(rng)});
        const auto out = orthogonalize_eigenvectors(candidates, ks.q, lam);
        if (out.size() != 2) ortho.logical_ok = false;
        double worst = std::max(orthonormality_error(out), orthonormality_error(basis));
        for (const auto& w : out) worst = std::max(worst, eigen_residual(ks.q, lam, w));
        ortho.record(worst);
    }
    suites.push_back(ortho);

    Suite aitken{"Aitken exactness", 0, kAitkenExactTol};
    for (int t = 0; t < kPropertyCases; ++t) {
        std::uniform_real_distribution<double> u(-2.0, 2.0), ratio(0.3, 0.9);
        const double a = u(rng), b = u(rng);
        const double q = (t % 2 ? -1.0 : 1.0) * ratio(rng);
        const int k = 1 + t % 10;
        auto x = [&](int i) { return a + b * std::pow(q, i); };
        aitken.record(std::abs(aitken_extrapolate(x(k), x(k + 1), x(k + 2)) - a));
    }
    suites.push_back(aitken);

    bool ok = true;
    std::string detail;
    for (const auto& s : suites) {
        ok = ok && s.ok();
        if (!detail.empty()) detail += "; ";
        detail += s.name + fmt(" %.0f cases worst %.1e/%.0e", s.cases, s.worst, s.tol) + (s.logical_ok ? "" : " (logic FAIL)");
    }
    report(6, "property suites", ok, detail);
}

void convergence_substitute() {
    int checked = 0, violations = 0;
    for (int s = 0; s < kMonotoneSeeds; ++s) {
        PowerIterConfig cfg;
        cfg.max_iter = kAitkenMaxIter;
        cfg.seed = static_cast<std::uint64_t>(s);
        const PowerResult r = dcam_pm(random_hermitian(kAitkenN, 11000 + s), cfg);
        const auto& rec = r.trace.records;
        if (!r.trace.converged || rec.size() <= kMonotoneWindow) continue;
        ++checked;
        for (std::size_t k = rec.size() - kMonotoneWindow; k < rec.size(); ++k)
            if (rec[k].residual > kMonotoneBand * rec[k - 1].residual) {
                ++violations;
                break;
            }
    }
    report(7, "convergence-rate substitute", aitken_ordering && checked >= kMonotoneSeeds * 9 / 10 && violations == 0,
           fmt("monotone residual (band %.2f) over last %.0f iterations on %.0f/%.0f converged runs", kMonotoneBand,
               static_cast<double>(kMonotoneWindow), checked, kMonotoneSeeds) +
               fmt(", violations %.0f", violations) +
               (aitken_ordering ? "; ADCAM mean iterations below DCAM (C3)" : "; C3 iteration ordering violated"));
}

}  // namespace

int main() {
    pentagon_reproduction();
    pentagon_failure_mode();
    aitken_trend();
    laplacian_accuracy();
    oracle_equivalence();
    property_suites();
    convergence_substitute();
    std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
