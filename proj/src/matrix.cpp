#include "dqeig/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dqeig/errors.hpp"

namespace dqeig {

namespace {

double dot4(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

double max_abs4(const Quaternion& q) {
    return std::max({std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": sizes " + std::to_string(a) + " and " +
                                std::to_string(b) + " differ");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// DQVector

bool DQVector::appreciable() const {
    return std::any_of(data_.begin(), data_.end(), [](const auto& q) { return !q.st.is_zero(); });
}

double DQVector::st_norm2() const {
    double s = 0.0;
    for (const auto& q : data_) s += q.st.norm2();
    return s;
}

double DQVector::du_norm2() const {
    double s = 0.0;
    for (const auto& q : data_) s += q.du.norm2();
    return s;
}

DQVector& DQVector::operator+=(const DQVector& o) {
    require_same_size(size(), o.size(), "vector addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

DQVector& DQVector::operator-=(const DQVector& o) {
    require_same_size(size(), o.size(), "vector subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

DQVector operator*(const DQVector& v, const DualQuaternion& q) {
    DQVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * q;
    return out;
}

DQVector operator*(const DQVector& v, const DualNumber& d) {
    DQVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * d;
    return out;
}

DualQuaternion inner(const DQVector& x, const DQVector& y) {
    require_same_size(x.size(), y.size(), "inner product");
    DualQuaternion s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i].conj() * y[i];
    return s;
}

DualNumber norm_2(const DQVector& x) {
    const double st2 = x.st_norm2();
    if (st2 == 0.0) return {0.0, std::sqrt(x.du_norm2())};
    const double n = std::sqrt(st2);
    double cross = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) cross += dot4(x[i].st, x[i].du);
    return {n, cross / n};
}

double norm_2R(const DQVector& x) { return std::sqrt(x.st_norm2() + x.du_norm2()); }

DQVector project_unit_2norm(const DQVector& x) {
    const double st2 = x.st_norm2();
    DQVector out(x.size());
    if (st2 == 0.0) {
        const double d = std::sqrt(x.du_norm2());
        if (d == 0.0) throw ZeroVector("cannot normalize the zero vector");
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = DualQuaternion{x[i].du / d};
        return out;
    }
    const double n = std::sqrt(st2);
    double cross = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) cross += dot4(x[i].st, x[i].du);
    const double s = cross / (n * n);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Quaternion ust = x[i].st / n;
        out[i] = DualQuaternion{ust, x[i].du / n - ust * s};
    }
    return out;
}

// ---------------------------------------------------------------------------
// DQMatrix

DQMatrix DQMatrix::identity(std::size_t n) {
    DQMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = DualQuaternion::identity();
    return m;
}

DQMatrix DQMatrix::diagonal(const std::vector<DualNumber>& d) {
    DQMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = DualQuaternion{d[i]};
    return m;
}

DQMatrix DQMatrix::column(const DQVector& v) {
    DQMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

DQMatrix DQMatrix::conj_transpose() const {
    DQMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
    return t;
}

DQVector DQMatrix::col(std::size_t j) const {
    DQVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

double DQMatrix::hermitian_deviation() const {
    if (rows_ != cols_) return INFINITY;
    double dev = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            const DualQuaternion d = (*this)(i, j) - (*this)(j, i).conj();
            dev = std::max({dev, max_abs4(d.st), max_abs4(d.du)});
        }
    }
    return dev;
}

bool DQMatrix::is_hermitian(double tol) const { return hermitian_deviation() <= tol; }

bool DQMatrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    const DQMatrix id = identity(rows_);
    return max_abs_diff(conj_transpose() * (*this), id) <= tol &&
           max_abs_diff((*this) * conj_transpose(), id) <= tol;
}

DQMatrix& DQMatrix::operator+=(const DQMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

DQMatrix& DQMatrix::operator-=(const DQMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

DQMatrix operator*(const DQMatrix& a, const DQMatrix& b) {
    require_same_size(a.cols(), b.rows(), "matrix product inner dimension");
    DQMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const DualQuaternion& aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

DQVector operator*(const DQMatrix& a, const DQVector& x) {
    require_same_size(a.cols(), x.size(), "matrix-vector product");
    DQVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        DualQuaternion s;
        for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * x[k];
        y[i] = s;
    }
    return y;
}

DQMatrix operator*(const DQMatrix& a, const DualNumber& d) {
    DQMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * d;
    return c;
}

DQMatrix outer(const DQVector& x, const DQVector& y) {
    DQMatrix m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j].conj();
    return m;
}

DualNumber norm_F(const DQMatrix& a) {
    double st2 = 0.0;
    double du2 = 0.0;
    double cross = 0.0;
    for (const auto& q : a.entries()) {
        st2 += q.st.norm2();
        du2 += q.du.norm2();
        cross += dot4(q.st, q.du);
    }
    if (st2 == 0.0) return {0.0, std::sqrt(du2)};
    const double n = std::sqrt(st2);
    return {n, cross / n};
}

double norm_FR(const DQMatrix& a) {
    double s = 0.0;
    for (const auto& q : a.entries()) s += q.st.norm2() + q.du.norm2();
    return std::sqrt(s);
}

double max_abs_diff(const DQMatrix& a, const DQMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("shape mismatch in comparison");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        const DualQuaternion d = a.entries()[k] - b.entries()[k];
        m = std::max({m, max_abs4(d.st), max_abs4(d.du)});
    }
    return m;
}

// ---------------------------------------------------------------------------
// Dual complex

DualComplex inner(const DCVector& x, const DCVector& y) {
    if (x.size() != y.size()) throw DimensionMismatch("inner product length mismatch");
    return {x.st.dot(y.st), x.st.dot(y.du) + x.du.dot(y.st)};
}

DualNumber norm_2(const DCVector& x) {
    const double st2 = x.st.squaredNorm();
    if (st2 == 0.0) return {0.0, x.du.norm()};
    const double n = std::sqrt(st2);
    return {n, x.st.dot(x.du).real() / n};
}

double norm_2R(const DCVector& x) { return std::sqrt(x.st.squaredNorm() + x.du.squaredNorm()); }

DCVector normalize(const DCVector& x) {
    const double st2 = x.st.squaredNorm();
    if (st2 == 0.0) throw ZeroVector("cannot normalize a non-appreciable dual complex vector");
    const double n = std::sqrt(st2);
    const double s = x.st.dot(x.du).real() / st2;
    Eigen::VectorXcd ust = x.st / n;
    Eigen::VectorXcd udu = x.du / n - ust * s;
    return {std::move(ust), std::move(udu)};
}

double DCMatrix::hermitian_deviation() const {
    if (rows() != cols()) return INFINITY;
    const double a = (st - st.adjoint()).cwiseAbs().maxCoeff();
    const double b = (du - du.adjoint()).cwiseAbs().maxCoeff();
    return std::max(a, b);
}

bool DCMatrix::is_hermitian(double tol) const { return hermitian_deviation() <= tol; }

bool DCMatrix::is_unitary(double tol) const {
    if (rows() != cols()) return false;
    const DCMatrix p = conj_transpose() * (*this);
    const DCMatrix q = (*this) * conj_transpose();
    const auto id = Eigen::MatrixXcd::Identity(rows(), cols());
    return (p.st - id).cwiseAbs().maxCoeff() <= tol && p.du.cwiseAbs().maxCoeff() <= tol &&
           (q.st - id).cwiseAbs().maxCoeff() <= tol && q.du.cwiseAbs().maxCoeff() <= tol;
}

DCMatrix operator*(const DCMatrix& a, const DCMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("dual complex product inner dimension mismatch");
    return {a.st * b.st, a.st * b.du + a.du * b.st};
}

DCVector operator*(const DCMatrix& a, const DCVector& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("dual complex matrix-vector length mismatch");
    return {a.st * x.st, a.st * x.du + a.du * x.st};
}

DCMatrix outer(const DCVector& x, const DCVector& y) {
    return {x.st * y.st.adjoint(), x.st * y.du.adjoint() + x.du * y.st.adjoint()};
}

DualNumber norm_F(const DCMatrix& a) {
    const double st2 = a.st.squaredNorm();
    if (st2 == 0.0) return {0.0, a.du.norm()};
    const double n = std::sqrt(st2);
    return {n, a.st.conjugate().cwiseProduct(a.du).sum().real() / n};
}

double norm_FR(const DCMatrix& a) { return std::sqrt(a.st.squaredNorm() + a.du.squaredNorm()); }

}  // namespace dqeig
