#include "dqeig/scalar.hpp"

#include <ostream>

#include "dqeig/errors.hpp"

namespace dqeig {

DualNumber divide(const DualNumber& a, const DualNumber& b) {
    if (b.st != 0.0) {
        return {a.st / b.st, a.du / b.st - a.st * b.du / (b.st * b.st)};
    }
    if (a.st == 0.0 && b.du != 0.0) {
        return {a.du / b.du, 0.0};
    }
    throw DivisionUndefined("dual number division by a non-appreciable divisor");
}

Order compare(const DualNumber& a, const DualNumber& b) {
    if (a.st > b.st || (a.st == b.st && a.du > b.du)) return Order::Greater;
    if (a.st == b.st && a.du == b.du) return Order::Equal;
    return Order::Less;
}

DualNumber sqrt(const DualNumber& a) {
    if (a.st > 0.0) {
        const double r = std::sqrt(a.st);
        return {r, a.du / (2.0 * r)};
    }
    if (a.st == 0.0 && a.du == 0.0) return {};
    throw DivisionUndefined("square root of a dual number needs a positive standard part");
}

Quaternion Quaternion::inverse() const {
    const double n2 = norm2();
    if (n2 == 0.0) throw NotInvertible("zero quaternion has no inverse");
    return conj() / n2;
}

DualNumber DualQuaternion::magnitude() const {
    if (st.is_zero()) return {0.0, du.norm()};
    const double n = st.norm();
    return {n, (st.conj() * du).sc() / n};
}

DualQuaternion DualQuaternion::inverse() const {
    if (!appreciable()) throw NotAppreciable("dual quaternion with zero standard part has no inverse");
    const Quaternion s = st.inverse();
    return {s, -(s * du * s)};
}

bool DualQuaternion::is_unit(double tol) const {
    return std::abs(st.norm() - 1.0) <= tol && std::abs((st.conj() * du).sc()) <= tol;
}

DualQuaternion divide(const DualQuaternion& p, const DualNumber& d) {
    if (d.st != 0.0) {
        return {p.st / d.st, p.du / d.st - p.st * (d.du / (d.st * d.st))};
    }
    if (p.st.is_zero() && d.du != 0.0) {
        return {p.du / d.du, Quaternion{}};
    }
    throw DivisionUndefined("dual quaternion divided by a non-appreciable dual number");
}

DualQuaternion project_unit(const DualQuaternion& q) {
    if (q.st.is_zero()) {
        if (q.du.is_zero()) throw ZeroInput("cannot project the zero dual quaternion");
        return {q.du / q.du.norm(), Quaternion{}};
    }
    const double n = q.st.norm();
    const Quaternion unit_st = q.st / n;
    const double s = (unit_st.conj() * (q.du / n)).sc();
    return {unit_st, q.du / n - unit_st * s};
}

std::ostream& operator<<(std::ostream& os, const DualNumber& a) {
    return os << a.st << (a.du < 0 ? " - " : " + ") << std::abs(a.du) << "eps";
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

std::ostream& operator<<(std::ostream& os, const DualQuaternion& q) {
    return os << q.st << " + " << q.du << "eps";
}

}  // namespace dqeig
