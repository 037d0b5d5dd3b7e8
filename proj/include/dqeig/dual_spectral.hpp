#pragma once

#include <cstddef>
#include <vector>

#include "dqeig/hermitian_eig.hpp"
#include "dqeig/matrix.hpp"

namespace dqeig {

inline constexpr double kDefaultTolGroup = 1e-8;
inline constexpr double kDefaultTolRank = 1e-8;

/// Unitary diagonalization U_hat* P U_hat = diag(sigma) of a dual complex
/// Hermitian matrix.
struct DualEigenDecomposition {
    DCMatrix U_hat;                     ///< unitary, columns are eigenvectors
    std::vector<DualNumber> sigma;      ///< descending in the dual-number order
    std::vector<EigenCluster> clusters; ///< standard-part clusters (column ranges of U_hat)
};

/// Builds U_hat = U V (I + T eps):
///  1. U diagonalizes the standard part P1, eigenvalues grouped into clusters;
///  2. each diagonal block of U* P2 U is diagonalized by U_i (dual parts mu);
///  3. V = diag(U_i), Q = V* U* P2 U V, T_ij = Q_ij / (lambda_j - lambda_i)
///     off the diagonal blocks and zero on them.
/// Throws NotHermitian, or ClusterInstability when two standard-part
/// clusters are closer than 10 * tol_group (relative).
DualEigenDecomposition eig_dual_complex_hermitian(const DCMatrix& p, double tol_group = kDefaultTolGroup);

struct EigenPair {
    DualNumber value;
    std::vector<DQVector> vectors;  ///< orthonormal eigenvectors for value
};

struct EigenResult {
    std::vector<EigenPair> pairs;  ///< descending by eigenvalue
    double residual = 0.0;         ///< mean ||Q w - w lambda||_{2R} over all vectors
    std::vector<std::size_t> iterations;  ///< per extracted pair, iterative solvers only

    [[nodiscard]] std::size_t vector_count() const;
    /// Eigenvalues repeated by multiplicity, in pair order.
    [[nodiscard]] std::vector<DualNumber> eigenvalues() const;
};

/// ||Q w - w lambda||_{2R}.
double eigen_residual(const DQMatrix& q, const DualNumber& lambda, const DQVector& w);
/// Mean eigen_residual over every vector of every pair.
double mean_residual(const DQMatrix& q, const std::vector<EigenPair>& pairs);

/// Right-multiplies w by the unit dual quaternion that turns its entry with
/// the largest standard magnitude into a positive dual number.
DQVector canonicalize_phase(const DQVector& w);

/// Gram-Schmidt over dual quaternion vectors: w = v_j - sum u_i u_i* v_j,
/// kept (and normalized) only when the standard part of ||w||_2 exceeds
/// tol_rank * max(1, ||v_j||_{2R}). Every input must be an eigenvector of q
/// for lambda to 1e-8 relative accuracy, otherwise NotAnEigenvector.
std::vector<DQVector> orthogonalize_eigenvectors(const std::vector<DQVector>& vs, const DQMatrix& q,
                                                 const DualNumber& lambda,
                                                 double tol_rank = kDefaultTolRank);

/// All eigenpairs of a dual quaternion Hermitian matrix through the
/// eigendecomposition of its dual complex adjoint.
EigenResult eddcam_ea(const DQMatrix& q, double tol_group = kDefaultTolGroup,
                      double tol_rank = kDefaultTolRank);

/// W diag(lambda) W* from the eigenvectors and eigenvalues of a result.
DQMatrix reconstruct(const EigenResult& r);

}  // namespace dqeig
