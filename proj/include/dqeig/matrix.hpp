#pragma once

// Dense matrices and vectors over dual quaternions and dual complex numbers.
//
// Dual quaternion objects use row-major storage of DualQuaternion entries.
// Dual complex objects keep their standard and dual parts as two Eigen
// complex matrices so products reduce to a handful of BLAS-like calls.

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dqeig/scalar.hpp"

namespace dqeig {

inline constexpr double kDefaultStructureTol = 1e-10;

class DQVector {
public:
    DQVector() = default;
    explicit DQVector(std::size_t n) : data_(n) {}
    DQVector(std::initializer_list<DualQuaternion> init) : data_(init) {}
    explicit DQVector(std::vector<DualQuaternion> data) : data_(std::move(data)) {}

    [[nodiscard]] std::size_t size() const { return data_.size(); }
    DualQuaternion& operator[](std::size_t i) { return data_[i]; }
    const DualQuaternion& operator[](std::size_t i) const { return data_[i]; }
    [[nodiscard]] const std::vector<DualQuaternion>& entries() const { return data_; }

    [[nodiscard]] bool appreciable() const;
    /// Squared magnitude of the standard / dual quaternion parts.
    [[nodiscard]] double st_norm2() const;
    [[nodiscard]] double du_norm2() const;

    DQVector& operator+=(const DQVector& o);
    DQVector& operator-=(const DQVector& o);
    friend DQVector operator+(DQVector a, const DQVector& b) { return a += b; }
    friend DQVector operator-(DQVector a, const DQVector& b) { return a -= b; }
    /// Right scalar multiplication v * q.
    friend DQVector operator*(const DQVector& v, const DualQuaternion& q);
    friend DQVector operator*(const DQVector& v, const DualNumber& d);
    friend bool operator==(const DQVector&, const DQVector&) = default;

private:
    std::vector<DualQuaternion> data_;
};

/// x* y.
DualQuaternion inner(const DQVector& x, const DQVector& y);
/// ||x||_2: sqrt(x* x) for appreciable x, ||x_I|| eps otherwise.
DualNumber norm_2(const DQVector& x);
/// ||x||_{2R} = sqrt(||x_st||^2 + ||x_I||^2).
double norm_2R(const DQVector& x);
/// x / ||x||_2, with a zero dual part in the non-appreciable branch.
/// Throws ZeroVector for x = 0.
DQVector project_unit_2norm(const DQVector& x);

class DQMatrix {
public:
    DQMatrix() = default;
    DQMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DQMatrix identity(std::size_t n);
    static DQMatrix diagonal(const std::vector<DualNumber>& d);
    /// Column-vector view as an n x 1 matrix.
    static DQMatrix column(const DQVector& v);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    DualQuaternion& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const DualQuaternion& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    [[nodiscard]] const std::vector<DualQuaternion>& entries() const { return data_; }

    [[nodiscard]] DQMatrix conj_transpose() const;
    [[nodiscard]] DQVector col(std::size_t j) const;
    [[nodiscard]] bool is_hermitian(double tol = kDefaultStructureTol) const;
    [[nodiscard]] bool is_unitary(double tol = kDefaultStructureTol) const;
    /// Largest entry-wise deviation from Hermitian symmetry, over all 8 reals.
    [[nodiscard]] double hermitian_deviation() const;

    DQMatrix& operator+=(const DQMatrix& o);
    DQMatrix& operator-=(const DQMatrix& o);
    friend DQMatrix operator+(DQMatrix a, const DQMatrix& b) { return a += b; }
    friend DQMatrix operator-(DQMatrix a, const DQMatrix& b) { return a -= b; }
    friend DQMatrix operator*(const DQMatrix& a, const DQMatrix& b);
    friend DQVector operator*(const DQMatrix& a, const DQVector& x);
    friend DQMatrix operator*(const DQMatrix& a, const DualNumber& d);
    friend bool operator==(const DQMatrix&, const DQMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<DualQuaternion> data_;
};

/// x y*.
DQMatrix outer(const DQVector& x, const DQVector& y);
/// ||Q||_F as a dual number.
DualNumber norm_F(const DQMatrix& a);
double norm_FR(const DQMatrix& a);
/// Max absolute difference over all 8 reals of every entry.
double max_abs_diff(const DQMatrix& a, const DQMatrix& b);

struct DCVector {
    Eigen::VectorXcd st;
    Eigen::VectorXcd du;

    DCVector() = default;
    explicit DCVector(Eigen::Index n) : st(Eigen::VectorXcd::Zero(n)), du(Eigen::VectorXcd::Zero(n)) {}
    DCVector(Eigen::VectorXcd s, Eigen::VectorXcd d) : st(std::move(s)), du(std::move(d)) {}

    [[nodiscard]] Eigen::Index size() const { return st.size(); }
    [[nodiscard]] DualComplex operator()(Eigen::Index i) const { return {st(i), du(i)}; }
    [[nodiscard]] bool appreciable() const { return st.squaredNorm() != 0.0; }

    DCVector& operator+=(const DCVector& o) { st += o.st; du += o.du; return *this; }
    DCVector& operator-=(const DCVector& o) { st -= o.st; du -= o.du; return *this; }
    friend DCVector operator+(DCVector a, const DCVector& b) { return a += b; }
    friend DCVector operator-(DCVector a, const DCVector& b) { return a -= b; }
    friend DCVector operator*(const DCVector& v, const DualComplex& c) {
        return {v.st * c.st, v.st * c.du + v.du * c.st};
    }
};

/// x* y.
DualComplex inner(const DCVector& x, const DCVector& y);
DualNumber norm_2(const DCVector& x);
double norm_2R(const DCVector& x);
/// x / ||x||_2 for appreciable x. Throws ZeroVector otherwise.
DCVector normalize(const DCVector& x);

struct DCMatrix {
    Eigen::MatrixXcd st;
    Eigen::MatrixXcd du;

    DCMatrix() = default;
    DCMatrix(Eigen::Index rows, Eigen::Index cols)
        : st(Eigen::MatrixXcd::Zero(rows, cols)), du(Eigen::MatrixXcd::Zero(rows, cols)) {}
    DCMatrix(Eigen::MatrixXcd s, Eigen::MatrixXcd d) : st(std::move(s)), du(std::move(d)) {}

    static DCMatrix identity(Eigen::Index n) {
        return {Eigen::MatrixXcd::Identity(n, n), Eigen::MatrixXcd::Zero(n, n)};
    }

    [[nodiscard]] Eigen::Index rows() const { return st.rows(); }
    [[nodiscard]] Eigen::Index cols() const { return st.cols(); }
    [[nodiscard]] DualComplex operator()(Eigen::Index i, Eigen::Index j) const { return {st(i, j), du(i, j)}; }
    [[nodiscard]] DCVector col(Eigen::Index j) const { return {st.col(j), du.col(j)}; }

    [[nodiscard]] DCMatrix conj_transpose() const { return {st.adjoint(), du.adjoint()}; }
    [[nodiscard]] bool is_hermitian(double tol = kDefaultStructureTol) const;
    [[nodiscard]] bool is_unitary(double tol = kDefaultStructureTol) const;
    [[nodiscard]] double hermitian_deviation() const;

    DCMatrix& operator+=(const DCMatrix& o) { st += o.st; du += o.du; return *this; }
    DCMatrix& operator-=(const DCMatrix& o) { st -= o.st; du -= o.du; return *this; }
    friend DCMatrix operator+(DCMatrix a, const DCMatrix& b) { return a += b; }
    friend DCMatrix operator-(DCMatrix a, const DCMatrix& b) { return a -= b; }
    friend DCMatrix operator*(const DCMatrix& a, const DCMatrix& b);
    friend DCVector operator*(const DCMatrix& a, const DCVector& x);
    friend DCMatrix operator*(const DCMatrix& a, const DualComplex& c) {
        return {a.st * c.st, a.st * c.du + a.du * c.st};
    }
};

/// x y*.
DCMatrix outer(const DCVector& x, const DCVector& y);
DualNumber norm_F(const DCMatrix& a);
double norm_FR(const DCMatrix& a);

}  // namespace dqeig
