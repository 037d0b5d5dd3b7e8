#include "dqeig/adjoint.hpp"

#include <algorithm>
#include <cmath>

#include "dqeig/errors.hpp"

namespace dqeig {

namespace {

using Eigen::Index;

Eigen::MatrixXcd block_adjoint(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const Index m = a.rows();
    const Index n = a.cols();
    Eigen::MatrixXcd out(2 * m, 2 * n);
    out.topLeftCorner(m, n) = a;
    out.topRightCorner(m, n) = b;
    out.bottomLeftCorner(m, n) = -b.conjugate();
    out.bottomRightCorner(m, n) = a.conjugate();
    return out;
}

double block_deviation(const Eigen::MatrixXcd& x) {
    const Index m = x.rows() / 2;
    const Index n = x.cols() / 2;
    const double d1 = (x.topLeftCorner(m, n) - x.bottomRightCorner(m, n).conjugate()).cwiseAbs().maxCoeff();
    const double d2 = (x.topRightCorner(m, n) + x.bottomLeftCorner(m, n).conjugate()).cwiseAbs().maxCoeff();
    return std::max(d1, d2);
}

DCVector dq_to_F(const DQVector& v) {
    const auto n = static_cast<Index>(v.size());
    DCVector u(2 * n);
    for (Index i = 0; i < n; ++i) {
        const auto& q = v[static_cast<std::size_t>(i)];
        u.st(i) = Complex(q.st.w, q.st.x);
        u.st(n + i) = -Complex(q.st.y, -q.st.z);
        u.du(i) = Complex(q.du.w, q.du.x);
        u.du(n + i) = -Complex(q.du.y, -q.du.z);
    }
    return u;
}

}  // namespace

DCMatrix adjoint(const DQMatrix& q) {
    const auto m = static_cast<Index>(q.rows());
    const auto n = static_cast<Index>(q.cols());
    Eigen::MatrixXcd a1(m, n), a2(m, n), a3(m, n), a4(m, n);
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < n; ++j) {
            const auto& e = q(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            a1(i, j) = Complex(e.st.w, e.st.x);
            a2(i, j) = Complex(e.st.y, e.st.z);
            a3(i, j) = Complex(e.du.w, e.du.x);
            a4(i, j) = Complex(e.du.y, e.du.z);
        }
    }
    return {block_adjoint(a1, a2), block_adjoint(a3, a4)};
}

double adjoint_structure_deviation(const DCMatrix& m) {
    if (m.rows() % 2 != 0 || m.cols() % 2 != 0) return INFINITY;
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    return std::max(block_deviation(m.st), block_deviation(m.du));
}

DQMatrix adjoint_inverse(const DCMatrix& m, double tol) {
    if (m.rows() % 2 != 0 || m.cols() % 2 != 0) {
        throw NotAdjointStructured("adjoint matrices have even dimensions");
    }
    const double scale = std::max({1.0, m.st.cwiseAbs().maxCoeff(), m.du.cwiseAbs().maxCoeff()});
    const double dev = adjoint_structure_deviation(m);
    if (dev > tol * scale) {
        throw NotAdjointStructured("block pattern deviation " + std::to_string(dev) + " exceeds tolerance");
    }
    const Index r = m.rows() / 2;
    const Index c = m.cols() / 2;
    auto avg_a = [&](const Eigen::MatrixXcd& x) -> Eigen::MatrixXcd {
        return 0.5 * (x.topLeftCorner(r, c) + x.bottomRightCorner(r, c).conjugate());
    };
    auto avg_b = [&](const Eigen::MatrixXcd& x) -> Eigen::MatrixXcd {
        return 0.5 * (x.topRightCorner(r, c) - x.bottomLeftCorner(r, c).conjugate());
    };
    const Eigen::MatrixXcd a1 = avg_a(m.st), a2 = avg_b(m.st), a3 = avg_a(m.du), a4 = avg_b(m.du);
    DQMatrix q(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (Index i = 0; i < r; ++i) {
        for (Index j = 0; j < c; ++j) {
            q(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                DualQuaternion{Quaternion::from_complex_pair(a1(i, j), a2(i, j)),
                               Quaternion::from_complex_pair(a3(i, j), a4(i, j))};
        }
    }
    return q;
}

DCVector vec_map_F(const DQVector& v) { return dq_to_F(v); }

DQVector vec_map_F_inverse(const DCVector& u) {
    if (u.size() % 2 != 0) throw OddLength("F^-1 needs an even-length vector");
    const Index n = u.size() / 2;
    DQVector v(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        // u1 - conj(u2) j
        v[static_cast<std::size_t>(i)] =
            DualQuaternion{Quaternion::from_complex_pair(u.st(i), -std::conj(u.st(n + i))),
                           Quaternion::from_complex_pair(u.du(i), -std::conj(u.du(n + i)))};
    }
    return v;
}

DCVector vec_map_H(const DCVector& u) {
    if (u.size() % 2 != 0) throw OddLength("H needs an even-length vector");
    const Index n = u.size() / 2;
    DCVector out(u.size());
    out.st.head(n) = u.st.tail(n).conjugate();
    out.st.tail(n) = -u.st.head(n).conjugate();
    out.du.head(n) = u.du.tail(n).conjugate();
    out.du.tail(n) = -u.du.head(n).conjugate();
    return out;
}

EigenEquivalenceReport check_eigen_equivalence(const DQMatrix& q, const DualComplex& lambda,
                                               const DQVector& v, double tol) {
    if (!v.appreciable()) throw NotAppreciable("eigenvectors must be appreciable");
    EigenEquivalenceReport r;
    const DualQuaternion lam_q = DualQuaternion::from_dual_complex(lambda);
    r.dq_residual = norm_2R(q * v - v * lam_q);

    const DCMatrix p = adjoint(q);
    const DCVector u1 = vec_map_F(v);
    const DCVector u2 = vec_map_F(v * DualQuaternion{Quaternion::j()});
    r.u1_residual = norm_2R(p * u1 - u1 * lambda);
    r.u2_residual = norm_2R(p * u2 - u2 * lambda.conj());

    const double hi = std::max({r.dq_residual, r.u1_residual, r.u2_residual});
    const double lo = std::min({r.dq_residual, r.u1_residual, r.u2_residual});
    r.consistent = (hi - lo) <= tol * std::max(1.0, hi);
    return r;
}

}  // namespace dqeig
