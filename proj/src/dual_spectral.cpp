#include "dqeig/dual_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dqeig/adjoint.hpp"
#include "dqeig/errors.hpp"

namespace dqeig {

namespace {

using Eigen::Index;

constexpr double kEigenvectorCheck = 1e-8;

}  // namespace

DualEigenDecomposition eig_dual_complex_hermitian(const DCMatrix& p, double tol_group) {
    if (p.rows() != p.cols()) throw NotHermitian("dual complex matrix is not square");
    const double scale_in = std::max({1.0, p.st.cwiseAbs().maxCoeff(), p.du.cwiseAbs().maxCoeff()});
    if (p.hermitian_deviation() > 1e-10 * scale_in) {
        throw NotHermitian("dual complex matrix deviates from Hermitian by " +
                           std::to_string(p.hermitian_deviation()));
    }
    const Index n = p.rows();
    DualEigenDecomposition out;
    if (n == 0) return out;

    const Eigen::MatrixXcd p2 = 0.5 * (p.du + p.du.adjoint());
    const ComplexHermitianEig std_eig = eig_hermitian(p.st);
    out.clusters = cluster_eigenvalues(std_eig.values, tol_group);

    const double gap_floor = 10.0 * tol_group * cluster_scale(std_eig.values);
    for (std::size_t c = 1; c < out.clusters.size(); ++c) {
        const double gap = out.clusters[c - 1].value - out.clusters[c].value;
        if (gap < gap_floor) {
            throw ClusterInstability("standard-part clusters " + std::to_string(out.clusters[c - 1].value) +
                                     " and " + std::to_string(out.clusters[c].value) +
                                     " are too close to separate");
        }
    }

    const Eigen::MatrixXcd& u = std_eig.vectors;
    const Eigen::MatrixXcd w = u.adjoint() * p2 * u;

    // V = diag(U_i) diagonalizes every diagonal block of U* P2 U.
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n, n);
    Eigen::VectorXd lambda(n);
    out.sigma.resize(static_cast<std::size_t>(n));
    for (const auto& cl : out.clusters) {
        const auto first = static_cast<Index>(cl.first);
        const auto m = static_cast<Index>(cl.multiplicity);
        const ComplexHermitianEig blk = eig_hermitian(w.block(first, first, m, m));
        v.block(first, first, m, m) = blk.vectors;
        for (Index k = 0; k < m; ++k) {
            lambda(first + k) = cl.value;
            out.sigma[static_cast<std::size_t>(first + k)] = DualNumber{cl.value, blk.values(k)};
        }
    }

    const Eigen::MatrixXcd q = v.adjoint() * w * v;
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
            const double diff = lambda(j) - lambda(i);
            if (diff != 0.0) t(i, j) = q(i, j) / diff;
        }
    }

    const Eigen::MatrixXcd uv = u * v;
    out.U_hat = DCMatrix{uv, uv * t};
    return out;
}

std::size_t EigenResult::vector_count() const {
    std::size_t c = 0;
    for (const auto& p : pairs) c += p.vectors.size();
    return c;
}

std::vector<DualNumber> EigenResult::eigenvalues() const {
    std::vector<DualNumber> out;
    for (const auto& p : pairs)
        for (std::size_t k = 0; k < p.vectors.size(); ++k) out.push_back(p.value);
    return out;
}

double eigen_residual(const DQMatrix& q, const DualNumber& lambda, const DQVector& w) {
    return norm_2R(q * w - w * lambda);
}

double mean_residual(const DQMatrix& q, const std::vector<EigenPair>& pairs) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& p : pairs) {
        for (const auto& w : p.vectors) {
            sum += eigen_residual(q, p.value, w);
            ++count;
        }
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

DQVector canonicalize_phase(const DQVector& w) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double n = w[i].st.norm2();
        if (n > best_norm) {
            best_norm = n;
            best = i;
        }
    }
    if (best_norm <= 0.0) return w;
    const DualQuaternion& e = w[best];
    // e * (e* / |e|) = |e|, a positive dual number.
    const DualQuaternion c = divide(e.conj(), e.magnitude());
    return w * c;
}

std::vector<DQVector> orthogonalize_eigenvectors(const std::vector<DQVector>& vs, const DQMatrix& q,
                                                 const DualNumber& lambda, double tol_rank) {
    const double q_scale = std::max(1.0, norm_FR(q));
    for (const auto& v : vs) {
        const double r = eigen_residual(q, lambda, v);
        if (r > kEigenvectorCheck * q_scale * std::max(1.0, norm_2R(v))) {
            throw NotAnEigenvector("candidate residual " + std::to_string(r) + " for eigenvalue " +
                                   std::to_string(lambda.st) + " + " + std::to_string(lambda.du) + "eps");
        }
    }

    std::vector<DQVector> us;
    for (const auto& v : vs) {
        DQVector w = v;
        // Two projection passes; the second mops up rounding left by the first.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : us) w -= u * inner(u, w);
        }
        const DualNumber wn = norm_2(w);
        if (wn.st > tol_rank * std::max(1.0, norm_2R(v))) {
            us.push_back(project_unit_2norm(w));
        }
    }
    return us;
}

EigenResult eddcam_ea(const DQMatrix& q, double tol_group, double tol_rank) {
    if (q.rows() != q.cols()) throw NotHermitian("matrix is not square");
    const double scale_in = std::max(1.0, norm_FR(q));
    if (q.hermitian_deviation() > 1e-10 * scale_in) {
        throw NotHermitian("dual quaternion matrix deviates from Hermitian by " +
                           std::to_string(q.hermitian_deviation()));
    }
    const DCMatrix p = adjoint(q);
    const DualEigenDecomposition dec = eig_dual_complex_hermitian(p, tol_group);

    EigenResult result;
    for (const auto& cl : dec.clusters) {
        const auto first = static_cast<Index>(cl.first);
        const auto m = static_cast<Index>(cl.multiplicity);
        Eigen::VectorXd mu(m);
        for (Index k = 0; k < m; ++k) mu(k) = dec.sigma[static_cast<std::size_t>(first + k)].du;

        for (const auto& group : cluster_eigenvalues(mu, tol_group)) {
            if (group.multiplicity % 2 != 0) {
                throw ClusterInstability("adjoint eigenvalue " + std::to_string(cl.value) + " + " +
                                         std::to_string(group.value) + "eps has odd multiplicity " +
                                         std::to_string(group.multiplicity));
            }
            const DualNumber value{cl.value, group.value};
            std::vector<DQVector> candidates;
            for (std::size_t k = 0; k < group.multiplicity; ++k) {
                candidates.push_back(
                    vec_map_F_inverse(dec.U_hat.col(first + static_cast<Index>(group.first + k))));
            }
            std::vector<DQVector> basis = orthogonalize_eigenvectors(candidates, q, value, tol_rank);
            if (basis.size() != group.multiplicity / 2) {
                throw ClusterInstability("expected " + std::to_string(group.multiplicity / 2) +
                                         " independent eigenvectors for " + std::to_string(value.st) +
                                         ", orthogonalization kept " + std::to_string(basis.size()));
            }
            for (auto& b : basis) b = canonicalize_phase(b);
            result.pairs.push_back({value, std::move(basis)});
        }
    }
    std::stable_sort(result.pairs.begin(), result.pairs.end(),
                     [](const EigenPair& a, const EigenPair& b) { return a.value > b.value; });
    result.residual = mean_residual(q, result.pairs);
    return result;
}

DQMatrix reconstruct(const EigenResult& r) {
    const std::size_t count = r.vector_count();
    if (count == 0) return {};
    const std::size_t n = r.pairs.front().vectors.front().size();
    DQMatrix out(n, n);
    for (const auto& p : r.pairs) {
        for (const auto& w : p.vectors) out += outer(w * p.value, w);
    }
    return out;
}

}  // namespace dqeig
