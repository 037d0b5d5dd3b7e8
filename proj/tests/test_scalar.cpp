#include <doctest.h>

#include <cmath>
#include <random>

#include "dqeig/errors.hpp"
#include "dqeig/scalar.hpp"
#include "support.hpp"

using namespace dqeig;
using dqeig::testing::dqdiff;
using dqeig::testing::qdiff;

TEST_CASE("dual number division") {
    const DualNumber a = DualNumber{1, 2} / DualNumber{2, 0};
    CHECK(a.st == doctest::Approx(0.5));
    CHECK(a.du == doctest::Approx(1.0));

    const DualNumber self = DualNumber{3, 7} / DualNumber{3, 7};
    CHECK(self.st == doctest::Approx(1.0));
    CHECK(std::abs(self.du) < 1e-15);

    const DualNumber degenerate = DualNumber{0, 6} / DualNumber{0, 3};
    CHECK(degenerate.st == 2.0);
    CHECK(degenerate.du == 0.0);
}

TEST_CASE("dual number division outside its domain") {
    CHECK_THROWS_AS(DualNumber(1, 0) / DualNumber(0, 1), DivisionUndefined);
    CHECK_THROWS_AS(DualNumber(0, 1) / DualNumber(0, 0), DivisionUndefined);
}

TEST_CASE("dual number products drop the eps^2 term") {
    const DualNumber e{0, 1};
    CHECK(e * e == DualNumber{0, 0});
    CHECK(DualNumber(2, 3) * DualNumber(4, 5) == DualNumber(8, 22));
}

TEST_CASE("dual number order") {
    CHECK(compare({1, 0}, {0, 100}) == Order::Greater);
    CHECK(compare({2, 1}, {2, 3}) == Order::Less);
    CHECK(compare({5, 5}, {5, 5}) == Order::Equal);
}

TEST_CASE("dual number order is total") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int t = 0; t < 500; ++t) {
        const DualNumber a(small(rng), small(rng)), b(small(rng), small(rng)), c(small(rng), small(rng));
        const Order ab = compare(a, b), ba = compare(b, a);
        CHECK((ab == Order::Equal) == (ba == Order::Equal));
        CHECK((ab == Order::Less) == (ba == Order::Greater));
        if (a < b && b < c) CHECK(a < c);
    }
}

TEST_CASE("dual number sqrt") {
    const DualNumber r = sqrt(DualNumber{4, 2});
    CHECK(r.st == doctest::Approx(2.0));
    CHECK(r.du == doctest::Approx(0.5));
}

TEST_CASE("quaternion multiplication table") {
    const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == Quaternion{-1});
    CHECK(j * j == Quaternion{-1});
    CHECK(k * k == Quaternion{-1});
    CHECK(i * j * k == Quaternion{-1});
    CHECK((Quaternion{1} + i) * (Quaternion{1} + j) == Quaternion{1, 1, 1, 1});
}

TEST_CASE("quaternion inverse") {
    CHECK(Quaternion{1}.inverse() == Quaternion{1});
    CHECK(Quaternion::k().inverse() == -Quaternion::k());
    CHECK(Quaternion{2}.inverse() == Quaternion{0.5});
    CHECK_THROWS_AS((void)Quaternion{}.inverse(), NotInvertible);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const Quaternion p = dqeig::testing::rand_quat(rng);
        CHECK(qdiff(p * p.inverse(), Quaternion{1}) < 1e-14 / std::min(1.0, p.norm2()));
        CHECK(qdiff(p.inverse() * p, Quaternion{1}) < 1e-14 / std::min(1.0, p.norm2()));
    }
}

TEST_CASE("quaternion ring laws and multiplicative norm") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        const Quaternion p = dqeig::testing::rand_quat(rng);
        const Quaternion q = dqeig::testing::rand_quat(rng);
        const Quaternion r = dqeig::testing::rand_quat(rng);
        CHECK(qdiff((p * q) * r, p * (q * r)) < 1e-12);
        CHECK(qdiff(p * (q + r), p * q + p * r) < 1e-12);
        CHECK(qdiff(p.conj() * p, Quaternion{p.norm2()}) < 1e-12);
        CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) <= 1e-12 * std::max(1.0, p.norm() * q.norm()));
    }
}

TEST_CASE("dual quaternion arithmetic") {
    std::mt19937_64 rng(7);
    const DualQuaternion p = dqeig::testing::rand_dq(rng);
    CHECK(DualQuaternion::identity() * p == p);

    const DualQuaternion e{Quaternion{}, Quaternion{1}};
    CHECK(e * e == DualQuaternion{});

    const DualQuaternion a{Quaternion::i(), Quaternion::j()};
    const DualQuaternion b{Quaternion::j()};
    CHECK(a * b == DualQuaternion{Quaternion::k(), Quaternion{-1}});

    const DualQuaternion c{Quaternion{0, 1, 2, 3}, Quaternion{4, 5, 6, 7}};
    CHECK(c.conj() == DualQuaternion{Quaternion{0, -1, -2, -3}, Quaternion{4, -5, -6, -7}});

    for (int t = 0; t < 1000; ++t) {
        const DualQuaternion x = dqeig::testing::rand_dq(rng);
        const DualQuaternion y = dqeig::testing::rand_dq(rng);
        const DualQuaternion z = dqeig::testing::rand_dq(rng);
        CHECK(dqdiff((x * y) * z, x * (y * z)) < 1e-12);
        CHECK(dqdiff(x * (y + z), x * y + x * z) < 1e-12);
        CHECK(dqdiff((x * y).conj(), y.conj() * x.conj()) < 1e-12);
    }
}

TEST_CASE("dual quaternion magnitude") {
    const DualNumber m1 = DualQuaternion{Quaternion::k()}.magnitude();
    CHECK(m1 == DualNumber{1, 0});

    const DualNumber m2 = DualQuaternion{Quaternion{}, Quaternion{0, 3, 0, 4}}.magnitude();
    CHECK(m2.st == 0.0);
    CHECK(m2.du == doctest::Approx(5.0));

    const DualNumber m3 = DualQuaternion{Quaternion{1}, Quaternion::i()}.magnitude();
    CHECK(m3 == DualNumber{1, 0});
}

TEST_CASE("dual quaternion inverse") {
    CHECK(DualQuaternion::identity().inverse() == DualQuaternion::identity());

    const DualQuaternion p{Quaternion{2}, Quaternion{0, 4}};
    const DualQuaternion inv = p.inverse();
    CHECK(dqdiff(inv, DualQuaternion{Quaternion{0.5}, Quaternion{0, -1}}) < 1e-15);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        const DualQuaternion u = project_unit(dqeig::testing::rand_dq(rng));
        CHECK(dqdiff(u.inverse(), u.conj()) < 1e-12);
        const DualQuaternion x = dqeig::testing::rand_dq(rng);
        const double scale = 1.0 / std::min(1.0, x.st.norm2() * x.st.norm2());
        CHECK(dqdiff(x.inverse() * x, DualQuaternion::identity()) < 1e-12 * scale);
        CHECK(dqdiff(x * x.inverse(), DualQuaternion::identity()) < 1e-12 * scale);
    }
    CHECK_THROWS_AS((void)DualQuaternion(Quaternion{}, Quaternion{1}).inverse(), NotAppreciable);
}

TEST_CASE("unit projection") {
    CHECK(project_unit(DualQuaternion{Quaternion{2}}) == DualQuaternion::identity());
    CHECK(project_unit(DualQuaternion{Quaternion{}, Quaternion{3}}) == DualQuaternion::identity());
    CHECK_THROWS_AS(project_unit(DualQuaternion{}), ZeroInput);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t) {
        const DualQuaternion u = project_unit(dqeig::testing::rand_dq(rng));
        CHECK(u.is_unit(1e-12));
        const DualNumber m = u.magnitude();
        CHECK(std::abs(m.st - 1.0) < 1e-12);
        CHECK(std::abs(m.du) < 1e-12);
        CHECK(dqdiff(project_unit(u), u) < 1e-12);
    }
}
