#include "dqeig/power.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dqeig/adjoint.hpp"
#include "dqeig/random.hpp"

namespace dqeig {

namespace {

struct LoopResult {
    DualNumber value;
    DCVector u;
    IterTrace trace;
};

struct BaselineLoopResult {
    DualNumber value;
    DQVector v;
    IterTrace trace;
};

DualNumber cast_real(const DualComplex& lam, IterTrace& trace) {
    const double residue = std::max(std::abs(lam.st.imag()), std::abs(lam.du.imag()));
    trace.imag_residue = std::max(trace.imag_residue, residue);
    if (residue > kImagResidueTol * std::max(1.0, std::abs(lam.st))) trace.imag_flag = true;
    return {lam.st.real(), lam.du.real()};
}

DualNumber cast_real(const DualQuaternion& lam, IterTrace& trace) {
    const double residue = std::max({std::abs(lam.st.x), std::abs(lam.st.y), std::abs(lam.st.z),
                                     std::abs(lam.du.x), std::abs(lam.du.y), std::abs(lam.du.z)});
    trace.imag_residue = std::max(trace.imag_residue, residue);
    if (residue > kImagResidueTol * std::max(1.0, std::abs(lam.st.w))) trace.imag_flag = true;
    return {lam.st.w, lam.du.w};
}

DCVector as_complex(const DualNumber& d, const DCVector& u) { return u * DualComplex{d}; }

// Keeps consecutive iterates on the same side: a negative dominant
// eigenvalue flips the iterate each step, which would defeat extrapolation.
void align_to(DCVector& u, const DCVector& ref) {
    if (ref.size() == 0) return;
    if (ref.st.dot(u.st).real() < 0.0) {
        u.st = -u.st;
        u.du = -u.du;
    }
}

LoopResult dcam_loop(const DCMatrix& p, DCVector u, const PowerIterConfig& cfg, bool aitken) {
    LoopResult out;
    IterTrace& trace = out.trace;
    trace.records.reserve(std::min<std::size_t>(cfg.max_iter, 8192));

    bool triggered = false;
    DCVector win[3];  // aligned iterates u^(k-2), u^(k-1), u^(k)
    DualNumber lam_win[3];
    std::size_t filled = 0;

    for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
        const DCVector y = p * u;
        const DualNumber lam = cast_real(inner(u, y), trace);
        const double resid = norm_2R(y - as_complex(lam, u));
        if (y.appreciable()) u = normalize(y);
        trace.records.push_back({lam, resid});
        trace.iterations = k;

        if (resid <= cfg.tol) {
            trace.converged = true;
            trace.final_residual = resid;
            out.value = lam;
            out.u = u;
            return out;
        }
        if (!aitken) continue;

        DCVector aligned = u;
        if (filled > 0) align_to(aligned, win[std::min<std::size_t>(filled, 3) - 1]);
        if (filled == 3) {
            win[0] = std::move(win[1]);
            win[1] = std::move(win[2]);
            lam_win[0] = lam_win[1];
            lam_win[1] = lam_win[2];
            filled = 2;
        }
        win[filled] = std::move(aligned);
        lam_win[filled] = lam;
        ++filled;

        if (resid <= cfg.aitken_trigger) triggered = true;
        if (!triggered || filled < 3) continue;

        DCVector w = aitken_extrapolate(win[0], win[1], win[2]);
        if (!w.appreciable()) continue;
        w = normalize(w);
        const DualNumber kappa = aitken_extrapolate(lam_win[0], lam_win[1], lam_win[2]);
        const double ext = norm_2R(p * w - as_complex(kappa, w));
        if (ext <= cfg.tol) {
            trace.converged = true;
            trace.final_residual = ext;
            out.value = kappa;
            out.u = std::move(w);
            return out;
        }
    }
    trace.final_residual = trace.records.empty() ? 0.0 : trace.records.back().residual;
    out.value = trace.records.empty() ? DualNumber{} : trace.records.back().lambda;
    out.u = u;
    return out;
}

BaselineLoopResult baseline_loop(const DQMatrix& q, DQVector v, const PowerIterConfig& cfg) {
    BaselineLoopResult out;
    IterTrace& trace = out.trace;
    for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
        const DQVector y = q * v;
        const DualNumber lam = cast_real(inner(v, y), trace);
        const double resid = norm_2R(y - v * lam);
        if (y.appreciable()) v = project_unit_2norm(y);
        trace.records.push_back({lam, resid});
        trace.iterations = k;
        if (resid <= cfg.tol) {
            trace.converged = true;
            trace.final_residual = resid;
            out.value = lam;
            out.v = std::move(v);
            return out;
        }
    }
    trace.final_residual = trace.records.empty() ? 0.0 : trace.records.back().residual;
    out.value = trace.records.empty() ? DualNumber{} : trace.records.back().lambda;
    out.v = std::move(v);
    return out;
}

void require_square(const DQMatrix& q) {
    if (q.rows() != q.cols() || q.rows() == 0) {
        throw DimensionMismatch("power iteration needs a non-empty square matrix");
    }
}

DQVector start_vector(const DQMatrix& q, const DQVector& v0) {
    if (v0.size() != q.cols()) throw DimensionMismatch("initial vector length does not match the matrix");
    return project_unit_2norm(v0);
}

PowerResult run_dcam(const DQMatrix& q, const DQVector& v0, const PowerIterConfig& cfg, bool aitken) {
    cfg.validate();
    require_square(q);
    LoopResult r = dcam_loop(adjoint(q), vec_map_F(start_vector(q, v0)), cfg, aitken);
    return {r.value, vec_map_F_inverse(r.u), std::move(r.trace)};
}

void finish(EigenResult& r, const DQMatrix& q) {
    std::vector<std::size_t> order(r.pairs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return r.pairs[a].value > r.pairs[b].value; });
    EigenResult sorted;
    for (std::size_t i : order) {
        sorted.pairs.push_back(std::move(r.pairs[i]));
        sorted.iterations.push_back(r.iterations[i]);
    }
    sorted.residual = mean_residual(q, sorted.pairs);
    r = std::move(sorted);
}

std::string describe_failure(std::size_t found, const IterTrace& t) {
    return "inner power loop for eigenpair " + std::to_string(found + 1) + " did not converge in " +
           std::to_string(t.iterations) + " iterations (residual " + std::to_string(t.final_residual) + ")";
}

}  // namespace

void PowerIterConfig::validate() const {
    if (max_iter == 0) throw InvalidArgument("max_iter must be positive");
    if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
    if (!(aitken_trigger >= tol)) throw InvalidArgument("aitken_trigger must be at least tol");
}

DQVector random_unit_vector(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    DQVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        Quaternion s{normal(rng), normal(rng), normal(rng), normal(rng)};
        Quaternion d{normal(rng), normal(rng), normal(rng), normal(rng)};
        v[i] = DualQuaternion{s, d};
    }
    return project_unit_2norm(v);
}

PowerResult power_method_baseline(const DQMatrix& q, const DQVector& v0, const PowerIterConfig& cfg) {
    cfg.validate();
    require_square(q);
    BaselineLoopResult r = baseline_loop(q, start_vector(q, v0), cfg);
    return {r.value, std::move(r.v), std::move(r.trace)};
}

PowerResult power_method_baseline(const DQMatrix& q, const PowerIterConfig& cfg) {
    return power_method_baseline(q, random_unit_vector(q.cols(), cfg.seed), cfg);
}

PowerResult dcam_pm(const DQMatrix& q, const DQVector& v0, const PowerIterConfig& cfg) {
    return run_dcam(q, v0, cfg, false);
}

PowerResult dcam_pm(const DQMatrix& q, const PowerIterConfig& cfg) {
    return dcam_pm(q, random_unit_vector(q.cols(), cfg.seed), cfg);
}

PowerResult adcam_pm(const DQMatrix& q, const DQVector& v0, const PowerIterConfig& cfg) {
    return run_dcam(q, v0, cfg, true);
}

PowerResult adcam_pm(const DQMatrix& q, const PowerIterConfig& cfg) {
    return adcam_pm(q, random_unit_vector(q.cols(), cfg.seed), cfg);
}

double aitken_extrapolate(double xk, double xk1, double xk2, double guard) {
    const double denom = xk2 + xk - 2.0 * xk1;
    if (std::abs(denom) < guard * std::max(1.0, std::abs(xk))) return xk;
    const double d = xk1 - xk;
    return xk - d * d / denom;
}

DualNumber aitken_extrapolate(const DualNumber& xk, const DualNumber& xk1, const DualNumber& xk2,
                              double guard) {
    return {aitken_extrapolate(xk.st, xk1.st, xk2.st, guard), aitken_extrapolate(xk.du, xk1.du, xk2.du, guard)};
}

namespace {

Quaternion aitken_q(const Quaternion& a, const Quaternion& b, const Quaternion& c, double guard) {
    return {aitken_extrapolate(a.w, b.w, c.w, guard), aitken_extrapolate(a.x, b.x, c.x, guard),
            aitken_extrapolate(a.y, b.y, c.y, guard), aitken_extrapolate(a.z, b.z, c.z, guard)};
}

Complex aitken_c(const Complex& a, const Complex& b, const Complex& c, double guard) {
    return {aitken_extrapolate(a.real(), b.real(), c.real(), guard),
            aitken_extrapolate(a.imag(), b.imag(), c.imag(), guard)};
}

}  // namespace

DQVector aitken_extrapolate(const DQVector& xk, const DQVector& xk1, const DQVector& xk2, double guard) {
    if (xk.size() != xk1.size() || xk.size() != xk2.size()) {
        throw DimensionMismatch("Aitken needs three iterates of equal length");
    }
    DQVector out(xk.size());
    for (std::size_t i = 0; i < xk.size(); ++i) {
        out[i] = DualQuaternion{aitken_q(xk[i].st, xk1[i].st, xk2[i].st, guard),
                                aitken_q(xk[i].du, xk1[i].du, xk2[i].du, guard)};
    }
    return out;
}

DCVector aitken_extrapolate(const DCVector& xk, const DCVector& xk1, const DCVector& xk2, double guard) {
    if (xk.size() != xk1.size() || xk.size() != xk2.size()) {
        throw DimensionMismatch("Aitken needs three iterates of equal length");
    }
    DCVector out(xk.size());
    for (Eigen::Index i = 0; i < xk.size(); ++i) {
        out.st(i) = aitken_c(xk.st(i), xk1.st(i), xk2.st(i), guard);
        out.du(i) = aitken_c(xk.du(i), xk1.du(i), xk2.du(i), guard);
    }
    return out;
}

EigenResult dcama_pm(const DQMatrix& q, const PowerIterConfig& cfg, double deflate_tol) {
    cfg.validate();
    require_square(q);
    const std::size_t n = q.rows();
    DCMatrix p = adjoint(q);
    EigenResult result;
    while (result.pairs.size() < n && norm_FR(p) > deflate_tol) {
        const std::size_t k = result.pairs.size();
        const DQVector v0 = random_unit_vector(n, mix_seed(cfg.seed, k));
        LoopResult r = dcam_loop(p, vec_map_F(v0), cfg, false);
        if (!r.trace.converged) {
            const std::string msg = describe_failure(k, r.trace);
            finish(result, q);
            throw InnerNoConvergence(msg, std::move(result), std::move(r.trace));
        }
        const DCVector hu = vec_map_H(r.u);
        const DualComplex lam{r.value};
        p -= (outer(r.u, r.u) + outer(hu, hu)) * lam;
        result.pairs.push_back({r.value, {vec_map_F_inverse(r.u)}});
        result.iterations.push_back(r.trace.iterations);
    }
    finish(result, q);
    return result;
}

EigenResult pm_deflation(const DQMatrix& q, const PowerIterConfig& cfg, double deflate_tol) {
    cfg.validate();
    require_square(q);
    const std::size_t n = q.rows();
    DQMatrix qk = q;
    EigenResult result;
    while (result.pairs.size() < n && norm_FR(qk) > deflate_tol) {
        const std::size_t k = result.pairs.size();
        BaselineLoopResult r = baseline_loop(qk, random_unit_vector(n, mix_seed(cfg.seed, k)), cfg);
        if (!r.trace.converged) {
            const std::string msg = describe_failure(k, r.trace);
            finish(result, q);
            throw InnerNoConvergence(msg, std::move(result), std::move(r.trace));
        }
        qk -= outer(r.v * r.value, r.v);
        result.pairs.push_back({r.value, {std::move(r.v)}});
        result.iterations.push_back(r.trace.iterations);
    }
    finish(result, q);
    return result;
}

}  // namespace dqeig
