#pragma once

// Scalar carriers: dual numbers, dual complex numbers, quaternions and dual
// quaternions. Every type stores a standard part and (where relevant) a dual
// part; products drop the second-order term since eps^2 = 0.

#include <cmath>
#include <complex>
#include <iosfwd>
#include <utility>

namespace dqeig {

using Complex = std::complex<double>;

enum class Order { Less, Equal, Greater };

struct DualNumber {
    double st = 0.0;
    double du = 0.0;

    constexpr DualNumber() = default;
    constexpr DualNumber(double standard, double dual = 0.0) : st(standard), du(dual) {}

    [[nodiscard]] constexpr bool appreciable() const { return st != 0.0; }

    constexpr DualNumber operator-() const { return {-st, -du}; }
    constexpr DualNumber& operator+=(const DualNumber& o) { st += o.st; du += o.du; return *this; }
    constexpr DualNumber& operator-=(const DualNumber& o) { st -= o.st; du -= o.du; return *this; }
    constexpr DualNumber& operator*=(const DualNumber& o) {
        du = st * o.du + du * o.st;
        st *= o.st;
        return *this;
    }

    friend constexpr DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
    friend constexpr DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
    friend constexpr DualNumber operator*(DualNumber a, const DualNumber& b) { return a *= b; }
    friend constexpr bool operator==(const DualNumber&, const DualNumber&) = default;
};

/// Division of dual numbers. When b.st == 0 the quotient is only defined
/// for a.st == 0 and b.du != 0; the free dual part is then taken as 0.
/// Throws DivisionUndefined otherwise.
DualNumber divide(const DualNumber& a, const DualNumber& b);
inline DualNumber operator/(const DualNumber& a, const DualNumber& b) { return divide(a, b); }

/// Lexicographic total order on (st, du).
Order compare(const DualNumber& a, const DualNumber& b);
inline bool operator<(const DualNumber& a, const DualNumber& b) { return compare(a, b) == Order::Less; }
inline bool operator>(const DualNumber& a, const DualNumber& b) { return compare(a, b) == Order::Greater; }

/// Square root of a dual number with positive standard part.
DualNumber sqrt(const DualNumber& a);

struct DualComplex {
    Complex st{};
    Complex du{};

    constexpr DualComplex() = default;
    constexpr DualComplex(Complex standard, Complex dual = {}) : st(standard), du(dual) {}
    constexpr DualComplex(const DualNumber& d) : st(d.st), du(d.du) {}

    [[nodiscard]] bool appreciable() const { return st != Complex{}; }
    [[nodiscard]] DualComplex conj() const { return {std::conj(st), std::conj(du)}; }
    /// Real parts of both components.
    [[nodiscard]] DualNumber real() const { return {st.real(), du.real()}; }

    DualComplex operator-() const { return {-st, -du}; }
    DualComplex& operator+=(const DualComplex& o) { st += o.st; du += o.du; return *this; }
    DualComplex& operator-=(const DualComplex& o) { st -= o.st; du -= o.du; return *this; }
    DualComplex& operator*=(const DualComplex& o) {
        du = st * o.du + du * o.st;
        st *= o.st;
        return *this;
    }

    friend DualComplex operator+(DualComplex a, const DualComplex& b) { return a += b; }
    friend DualComplex operator-(DualComplex a, const DualComplex& b) { return a -= b; }
    friend DualComplex operator*(DualComplex a, const DualComplex& b) { return a *= b; }
    friend bool operator==(const DualComplex&, const DualComplex&) = default;
};

struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    /// Builds c1 + c2 j from its complex pair, with c1 = w + x i and c2 = y + z i.
    static constexpr Quaternion from_complex_pair(const Complex& c1, const Complex& c2) {
        return {c1.real(), c1.imag(), c2.real(), c2.imag()};
    }
    /// Splits q = c1 + c2 j.
    [[nodiscard]] std::pair<Complex, Complex> complex_pair() const { return {{w, x}, {y, z}}; }

    [[nodiscard]] constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    [[nodiscard]] constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    [[nodiscard]] double norm() const { return std::sqrt(norm2()); }
    /// Scalar part sc(q) = (q + q*)/2.
    [[nodiscard]] constexpr double sc() const { return w; }
    [[nodiscard]] constexpr bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }
    /// q^-1 = q* / |q|^2. Throws NotInvertible for the zero quaternion.
    [[nodiscard]] Quaternion inverse() const;

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion& operator+=(const Quaternion& o) { w += o.w; x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Quaternion& operator-=(const Quaternion& o) { w -= o.w; x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Quaternion& operator*=(double s) { w *= s; x *= s; y *= s; z *= s; return *this; }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

    // [p0 q0 - p.q, p0 q + q0 p + p x q]
    friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
    }
    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

struct DualQuaternion {
    Quaternion st{};
    Quaternion du{};

    constexpr DualQuaternion() = default;
    constexpr DualQuaternion(const Quaternion& standard, const Quaternion& dual = {})
        : st(standard), du(dual) {}
    constexpr DualQuaternion(const DualNumber& d) : st(d.st), du(d.du) {}

    static constexpr DualQuaternion identity() { return {Quaternion{1.0}}; }
    static DualQuaternion from_dual_complex(const DualComplex& c) {
        return {Quaternion{c.st.real(), c.st.imag()}, Quaternion{c.du.real(), c.du.imag()}};
    }

    [[nodiscard]] constexpr bool appreciable() const { return !st.is_zero(); }
    [[nodiscard]] constexpr DualQuaternion conj() const { return {st.conj(), du.conj()}; }
    /// |p| = |p_st| + sc(p_st* p_I)/|p_st| eps, or |p_I| eps when p_st = 0.
    [[nodiscard]] DualNumber magnitude() const;
    /// Throws NotAppreciable when the standard part vanishes.
    [[nodiscard]] DualQuaternion inverse() const;
    /// Unit iff |st| = 1 and sc(st* du) = 0, within tol.
    [[nodiscard]] bool is_unit(double tol = 1e-12) const;

    DualQuaternion operator-() const { return {-st, -du}; }
    DualQuaternion& operator+=(const DualQuaternion& o) { st += o.st; du += o.du; return *this; }
    DualQuaternion& operator-=(const DualQuaternion& o) { st -= o.st; du -= o.du; return *this; }

    friend DualQuaternion operator+(DualQuaternion a, const DualQuaternion& b) { return a += b; }
    friend DualQuaternion operator-(DualQuaternion a, const DualQuaternion& b) { return a -= b; }
    friend constexpr DualQuaternion operator*(const DualQuaternion& p, const DualQuaternion& q) {
        return {p.st * q.st, p.st * q.du + p.du * q.st};
    }
    friend DualQuaternion operator*(const DualQuaternion& p, double s) { return {p.st * s, p.du * s}; }
    friend DualQuaternion operator*(double s, const DualQuaternion& p) { return {p.st * s, p.du * s}; }
    /// Dual numbers commute with dual quaternions.
    friend DualQuaternion operator*(const DualQuaternion& p, const DualNumber& d) {
        return {p.st * d.st, p.st * d.du + p.du * d.st};
    }
    friend DualQuaternion operator*(const DualNumber& d, const DualQuaternion& p) { return p * d; }
    friend constexpr bool operator==(const DualQuaternion&, const DualQuaternion&) = default;
};

/// p / d for a dual number d, following the dual-number division rule
/// component-wise (free dual part 0 in the degenerate branch).
DualQuaternion divide(const DualQuaternion& p, const DualNumber& d);

/// Nearest unit dual quaternion: q/|q| when q.st != 0, otherwise
/// q_I/|q_I| + 0 eps. Throws ZeroInput for q = 0.
DualQuaternion project_unit(const DualQuaternion& q);

std::ostream& operator<<(std::ostream& os, const DualNumber& a);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const DualQuaternion& q);

}  // namespace dqeig
