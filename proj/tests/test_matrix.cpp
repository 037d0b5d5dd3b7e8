#include <doctest.h>

#include <cmath>
#include <random>

#include "dqeig/errors.hpp"
#include "dqeig/matrix.hpp"
#include "support.hpp"

using namespace dqeig;
using namespace dqeig::testing;

namespace {

DQMatrix eps_identity(std::size_t n) {
    DQMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = DualQuaternion{Quaternion{}, Quaternion{1}};
    return m;
}

double max_entry_diff(const DQMatrix& a, const DQMatrix& b) { return max_abs_diff(a, b); }

}  // namespace

TEST_CASE("matrix products") {
    std::mt19937_64 rng(1);
    const DQMatrix a = rand_dq_matrix(3, 4, rng);
    CHECK(DQMatrix::identity(3) * a == a);

    const DQMatrix e = eps_identity(3);
    CHECK(e * e == DQMatrix(3, 3));

    const DQMatrix x = rand_dq_matrix(1, 1, rng), y = rand_dq_matrix(1, 1, rng);
    CHECK((x * y)(0, 0) == x(0, 0) * y(0, 0));

    CHECK_THROWS_AS(a * a, DimensionMismatch);

    for (int t = 0; t < 50; ++t) {
        const DQMatrix p = rand_dq_matrix(3, 4, rng), q = rand_dq_matrix(4, 2, rng), r = rand_dq_matrix(2, 3, rng);
        CHECK(max_entry_diff((p * q) * r, p * (q * r)) < 1e-11);
    }
}

TEST_CASE("conjugate transpose") {
    DQMatrix one(1, 1);
    one(0, 0) = DualQuaternion{Quaternion::i(), Quaternion::j()};
    CHECK(one.conj_transpose()(0, 0) == DualQuaternion{-Quaternion::i(), -Quaternion::j()});

    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        const DQMatrix a = rand_dq_matrix(3, 3, rng), b = rand_dq_matrix(3, 3, rng);
        CHECK(a.conj_transpose().conj_transpose() == a);
        CHECK(max_entry_diff((a * b).conj_transpose(), b.conj_transpose() * a.conj_transpose()) < 1e-12);
        const DQMatrix h = a + a.conj_transpose();
        CHECK(h.is_hermitian());
        CHECK(max_entry_diff(h.conj_transpose(), h) == 0.0);
    }
}

TEST_CASE("quadratic forms of Hermitian matrices are dual numbers") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const DQMatrix a = rand_dq_matrix(4, 4, rng);
        const DQMatrix h = a + a.conj_transpose();
        const DQVector x = rand_dq_vector(4, rng);
        const DualQuaternion f = inner(x, h * x);
        CHECK(std::max({std::abs(f.st.x), std::abs(f.st.y), std::abs(f.st.z)}) < 1e-12);
        CHECK(std::max({std::abs(f.du.x), std::abs(f.du.y), std::abs(f.du.z)}) < 1e-12);
    }
}

TEST_CASE("vector 2-norm") {
    DQVector e1(2);
    e1[0] = DualQuaternion::identity();
    CHECK(norm_2(e1) == DualNumber{1, 0});

    DQVector pure(2);
    pure[0] = DualQuaternion{Quaternion{}, Quaternion{0, 3}};
    pure[1] = DualQuaternion{Quaternion{}, Quaternion{0, 0, 4}};
    CHECK(norm_2(pure) == DualNumber{0, 5});

    DQVector x{DualQuaternion::identity(), DualQuaternion{Quaternion{}, Quaternion::i()}};
    CHECK(norm_2(x) == DualNumber{1, 0});
}

TEST_CASE("vector 2R-norm") {
    DQVector x{DualQuaternion::identity(), DualQuaternion{Quaternion{}, Quaternion{1}}};
    CHECK(norm_2R(x) == doctest::Approx(std::sqrt(2.0)));
    CHECK(norm_2R(DQVector(3)) == 0.0);

    DQVector pure{DualQuaternion{Quaternion{}, Quaternion{0, 3, 4}}};
    CHECK(norm_2R(pure) == doctest::Approx(5.0));

    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        const DQVector v = rand_dq_vector(5, rng);
        double s = 0.0;
        for (const auto& e : v.entries()) s += e.st.norm2() + e.du.norm2();
        CHECK(norm_2R(v) == doctest::Approx(std::sqrt(s)).epsilon(1e-14));
    }
}

TEST_CASE("matrix F and FR norms") {
    DQMatrix a = DQMatrix::identity(2) + eps_identity(2);
    const DualNumber f = norm_F(a);
    CHECK(f.st == doctest::Approx(std::sqrt(2.0)));
    CHECK(f.du == doctest::Approx(std::sqrt(2.0)));
    CHECK(norm_FR(a) == doctest::Approx(2.0));

    const DualNumber z = norm_F(eps_identity(2) * DualNumber{3, 0});
    CHECK(z.st == 0.0);
    CHECK(z.du == doctest::Approx(3.0 * std::sqrt(2.0)));

    CHECK(norm_F(DQMatrix(2, 2)) == DualNumber{0, 0});
}

TEST_CASE("dual complex norms match the dual quaternion ones on real data") {
    DCMatrix m = DCMatrix::identity(2);
    m.du = Eigen::MatrixXcd::Identity(2, 2);
    CHECK(norm_F(m).st == doctest::Approx(std::sqrt(2.0)));
    CHECK(norm_F(m).du == doctest::Approx(std::sqrt(2.0)));
    CHECK(norm_FR(m) == doctest::Approx(2.0));
}

TEST_CASE("unit 2-norm projection") {
    DQVector two(2);
    two[0] = DualQuaternion{Quaternion{2}};
    DQVector e1(2);
    e1[0] = DualQuaternion::identity();
    CHECK(project_unit_2norm(two) == e1);
    CHECK(project_unit_2norm(e1) == e1);

    DQVector pure{DualQuaternion{Quaternion{}, Quaternion{0, 3}}, DualQuaternion{Quaternion{}, Quaternion{0, 0, 4}}};
    const DQVector p = project_unit_2norm(pure);
    CHECK(vdiff(p, DQVector{DualQuaternion{Quaternion{0, 0.6}}, DualQuaternion{Quaternion{0, 0, 0.8}}}) < 1e-15);

    CHECK_THROWS_AS(project_unit_2norm(DQVector(3)), ZeroVector);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const DQVector u = project_unit_2norm(rand_dq_vector(4, rng));
        const DualNumber n = norm_2(u);
        CHECK(std::abs(n.st - 1.0) < 1e-12);
        CHECK(std::abs(n.du) < 1e-12);
        CHECK(vdiff(project_unit_2norm(u), u) < 1e-12);
    }
}

TEST_CASE("unitary predicate") {
    DQMatrix u(2, 2);
    u(0, 1) = DualQuaternion{Quaternion::k()};
    u(1, 0) = DualQuaternion{Quaternion::j()};
    CHECK(u.is_unitary());
    u(0, 0) = DualQuaternion{Quaternion{}, Quaternion{1e-3}};
    CHECK_FALSE(u.is_unitary());
}
