#include "dqeig/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>

#include "dqeig/errors.hpp"

namespace dqeig {

namespace {

using Eigen::Index;
using cplx = std::complex<double>;

constexpr int kMaxSweeps = 100;

double off_diagonal_norm2(const Eigen::MatrixXcd& a) {
    double s = 0.0;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (i != j) s += std::norm(a(i, j));
    return s;
}

// One complex Jacobi rotation zeroing a(p, q). The rotation is
// W = diag(1, conj(e)) * [c s; -s c] with e = a_pq/|a_pq|, which first
// makes the pivot real and then applies the classical real rotation.
void rotate(Eigen::MatrixXcd& a, Eigen::MatrixXcd& v, Index p, Index q) {
    const cplx apq = a(p, q);
    const double g = std::abs(apq);
    const cplx e = apq / g;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * g);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const cplx eb = std::conj(e);

    // A <- W* A W. Only rows and columns p, q change; the off-pivot entries
    // follow from the column update and Hermitian symmetry, the pivot block
    // from the closed form of the 2x2 rotation.
    for (Index k = 0; k < a.rows(); ++k) {
        if (k == p || k == q) continue;
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp - s * eb * akq;
        a(k, q) = s * akp + c * eb * akq;
        a(p, k) = std::conj(a(k, p));
        a(q, k) = std::conj(a(k, q));
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * g;
    a(q, q) = aqq + t * g;

    for (Index k = 0; k < v.rows(); ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - s * eb * vkq;
        v(k, q) = s * vkp + c * eb * vkq;
    }
}

}  // namespace

ComplexHermitianEig eig_hermitian(const Eigen::MatrixXcd& h, double tol) {
    if (h.rows() != h.cols()) throw NotHermitian("matrix is not square");
    const Index n = h.rows();
    ComplexHermitianEig out;
    if (n == 0) return out;

    const double max_entry = h.cwiseAbs().maxCoeff();
    const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-10 * std::max(1.0, max_entry)) {
        throw NotHermitian("Hermitian deviation " + std::to_string(dev));
    }

    Eigen::MatrixXcd a = 0.5 * (h + h.adjoint());
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
    const double total2 = a.squaredNorm();
    const double eps = std::numeric_limits<double>::epsilon();

    bool converged = total2 == 0.0;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_norm2(a) <= eps * eps * total2) {
            converged = true;
            break;
        }
        for (Index p = 0; p < n - 1; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0) continue;
                // Negligible next to both diagonal entries: drop it.
                const double dp = std::abs(a(p, p).real());
                const double dq = std::abs(a(q, q).real());
                if (sweep > 3 && g * 100.0 <= eps * dp && g * 100.0 <= eps * dq) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                rotate(a, v, p, q);
            }
        }
    }
    if (!converged && off_diagonal_norm2(a) > eps * eps * total2 * 16.0) {
        throw NoConvergence("Jacobi sweeps did not converge");
    }

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index x, Index y) { return a(x, x).real() > a(y, y).real(); });
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Index k = 0; k < n; ++k) {
        const Index src = order[static_cast<std::size_t>(k)];
        out.values(k) = a(src, src).real();
        out.vectors.col(k) = v.col(src);
    }

    const Eigen::MatrixXcd rebuilt =
        out.vectors * out.values.cast<cplx>().asDiagonal() * out.vectors.adjoint();
    const double resid = (h - rebuilt).norm();
    if (resid > tol * std::max(1.0, h.norm())) {
        throw NoConvergence("Jacobi reconstruction residual " + std::to_string(resid));
    }
    return out;
}

double cluster_scale(const Eigen::Ref<const Eigen::VectorXd>& values) {
    if (values.size() == 0) return 1.0;
    return std::max({1.0, std::abs(values(0)), std::abs(values(values.size() - 1))});
}

std::vector<EigenCluster> cluster_eigenvalues(const Eigen::Ref<const Eigen::VectorXd>& values,
                                              double tol_group) {
    std::vector<EigenCluster> clusters;
    const double thresh = tol_group * cluster_scale(values);
    Index start = 0;
    for (Index k = 1; k <= values.size(); ++k) {
        if (k == values.size() || values(k - 1) - values(k) > thresh) {
            const Index len = k - start;
            if (len == 0) continue;
            clusters.push_back({values.segment(start, len).mean(), static_cast<std::size_t>(len),
                                static_cast<std::size_t>(start)});
            start = k;
        }
    }
    return clusters;
}

}  // namespace dqeig
