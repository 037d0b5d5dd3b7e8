#pragma once

// Power iterations for the dominant eigenpair of a dual quaternion Hermitian
// matrix, their Aitken-accelerated variant and two deflation drivers.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dqeig/dual_spectral.hpp"
#include "dqeig/errors.hpp"
#include "dqeig/matrix.hpp"

namespace dqeig {

struct PowerIterConfig {
    std::size_t max_iter = 5000;
    double tol = 1e-6;
    double aitken_trigger = 1e-3;
    std::uint64_t seed = 0;

    /// Throws InvalidArgument unless max_iter > 0, tol > 0, aitken_trigger >= tol.
    void validate() const;
};

struct IterRecord {
    DualNumber lambda;
    double residual = 0.0;
};

struct IterTrace {
    std::vector<IterRecord> records;
    bool converged = false;
    std::size_t iterations = 0;
    double final_residual = 0.0;
    /// Largest imaginary part dropped when casting the dual complex Rayleigh
    /// quotient to a dual number, over the whole run.
    double imag_residue = 0.0;
    bool imag_flag = false;
};

struct PowerResult {
    DualNumber value;
    DQVector vector;
    IterTrace trace;
};

inline constexpr double kAitkenGuard = 1e-14;
inline constexpr double kImagResidueTol = 1e-10;
inline constexpr double kDefaultDeflateTol = 1e-6;

/// Standard-normal components in every real coordinate, then scaled to unit 2-norm.
DQVector random_unit_vector(std::size_t n, std::uint64_t seed);

/// The power loop carried out directly in dual quaternion arithmetic.
PowerResult power_method_baseline(const DQMatrix& q, const DQVector& v0, const PowerIterConfig& cfg);
PowerResult power_method_baseline(const DQMatrix& q, const PowerIterConfig& cfg);

/// Power loop on the dual complex adjoint. Returns F^-1 of the final iterate.
PowerResult dcam_pm(const DQMatrix& q, const DQVector& v0, const PowerIterConfig& cfg);
PowerResult dcam_pm(const DQMatrix& q, const PowerIterConfig& cfg);

/// Aitken delta-squared applied to each real component independently.
/// A component whose second difference is below guard * max(1, |x_k|) is
/// returned as x_k.
double aitken_extrapolate(double xk, double xk1, double xk2, double guard = kAitkenGuard);
DualNumber aitken_extrapolate(const DualNumber& xk, const DualNumber& xk1, const DualNumber& xk2,
                              double guard = kAitkenGuard);
DQVector aitken_extrapolate(const DQVector& xk, const DQVector& xk1, const DQVector& xk2,
                            double guard = kAitkenGuard);
DCVector aitken_extrapolate(const DCVector& xk, const DCVector& xk1, const DCVector& xk2,
                            double guard = kAitkenGuard);

/// DCAM-PM with Aitken extrapolation of the last three iterates once the
/// raw residual drops below cfg.aitken_trigger.
PowerResult adcam_pm(const DQMatrix& q, const DQVector& v0, const PowerIterConfig& cfg);
PowerResult adcam_pm(const DQMatrix& q, const PowerIterConfig& cfg);

/// Raised by the deflation drivers when an inner power loop hits max_iter.
/// The pairs found before the failure are kept in partial().
class InnerNoConvergence : public NoConvergence {
public:
    InnerNoConvergence(const std::string& what, EigenResult partial, IterTrace trace)
        : NoConvergence(what), partial_(std::move(partial)), trace_(std::move(trace)) {}
    [[nodiscard]] const EigenResult& partial() const { return partial_; }
    [[nodiscard]] const IterTrace& trace() const { return trace_; }

private:
    EigenResult partial_;
    IterTrace trace_;
};

/// All eigenpairs through repeated DCAM-PM on the adjoint, deflating with
/// u and H(u) after each pair. Stops after n pairs or when ||P_k||_{FR}
/// falls to deflate_tol. Inner loop k starts from random_unit_vector(n,
/// mix_seed(cfg.seed, k)).
EigenResult dcama_pm(const DQMatrix& q, const PowerIterConfig& cfg, double deflate_tol = kDefaultDeflateTol);

/// Same driver with the baseline loop, deflating Q <- Q - lambda v v*.
EigenResult pm_deflation(const DQMatrix& q, const PowerIterConfig& cfg, double deflate_tol = kDefaultDeflateTol);

}  // namespace dqeig
