#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "dqeig/matrix.hpp"

namespace dqeig::testing {

inline Quaternion rand_quat(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double w = u(rng), x = u(rng), y = u(rng), z = u(rng);
    return {w, x, y, z};
}

inline DualQuaternion rand_dq(std::mt19937_64& rng) {
    const Quaternion s = rand_quat(rng);
    return {s, rand_quat(rng)};
}

inline DualNumber rand_dn(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double a = u(rng);
    return {a, u(rng)};
}

inline DQVector rand_dq_vector(std::size_t n, std::mt19937_64& rng) {
    DQVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rand_dq(rng);
    return v;
}

inline DQMatrix rand_dq_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    DQMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_dq(rng);
    return m;
}

inline double qdiff(const Quaternion& a, const Quaternion& b) {
    return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline double dqdiff(const DualQuaternion& a, const DualQuaternion& b) {
    return std::max(qdiff(a.st, b.st), qdiff(a.du, b.du));
}

inline double vdiff(const DQVector& a, const DQVector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, dqdiff(a[i], b[i]));
    return m;
}

inline double dcdiff(const DCMatrix& a, const DCMatrix& b) {
    return std::max((a.st - b.st).cwiseAbs().maxCoeff(), (a.du - b.du).cwiseAbs().maxCoeff());
}

}  // namespace dqeig::testing
