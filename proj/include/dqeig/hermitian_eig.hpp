#pragma once

// Eigendecomposition of ordinary complex Hermitian matrices by cyclic
// Jacobi sweeps, plus grouping of nearly-equal eigenvalues into clusters.

#include <Eigen/Dense>

#include <vector>

namespace dqeig {

struct ComplexHermitianEig {
    Eigen::VectorXd values;    ///< sorted in non-increasing order
    Eigen::MatrixXcd vectors;  ///< unitary; column k pairs with values(k)
};

/// Throws NotHermitian when h deviates from h* by more than
/// 1e-10 * max(1, max |h_ij|), NoConvergence when the sweep cap is hit or
/// the reconstruction residual exceeds tol * max(1, ||h||_F).
ComplexHermitianEig eig_hermitian(const Eigen::MatrixXcd& h, double tol = 1e-12);

struct EigenCluster {
    double value = 0.0;        ///< mean of the members
    std::size_t multiplicity = 0;
    std::size_t first = 0;     ///< index of the first member in the input
};

/// Scale used to make cluster tolerances relative: max(1, |v_first|, |v_last|).
double cluster_scale(const Eigen::Ref<const Eigen::VectorXd>& values);

/// Groups consecutive entries of a descending array whose neighbours differ by
/// at most tol_group * cluster_scale(values).
std::vector<EigenCluster> cluster_eigenvalues(const Eigen::Ref<const Eigen::VectorXd>& values,
                                              double tol_group = 1e-8);

}  // namespace dqeig
