#include <doctest.h>

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "dqeig/errors.hpp"
#include "dqeig/hermitian_eig.hpp"
#include "dqeig/scalar.hpp"

using namespace dqeig;
using Eigen::MatrixXcd;

namespace {

const Complex I(0, 1);

MatrixXcd random_hermitian_c(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    return 0.5 * (a + a.adjoint());
}

// Roots of det(xI - H) through Faddeev-LeVerrier coefficients and the
// companion matrix, sorted descending.
std::vector<double> charpoly_roots(const MatrixXcd& h) {
    const Eigen::Index n = h.rows();
    std::vector<Complex> c(static_cast<std::size_t>(n + 1));
    c[static_cast<std::size_t>(n)] = 1.0;
    MatrixXcd m = MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = h * m + c[static_cast<std::size_t>(n - k + 1)] * MatrixXcd::Identity(n, n);
        c[static_cast<std::size_t>(n - k)] = -(h * m).trace() / static_cast<double>(k);
    }
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)].real();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    std::vector<double> roots;
    for (Eigen::Index i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i).real());
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

}  // namespace

TEST_CASE("small Hermitian examples") {
    MatrixXcd d(2, 2);
    d << 3, 0, 0, 1;
    auto e = eig_hermitian(d);
    CHECK(e.values(0) == 3.0);
    CHECK(e.values(1) == 1.0);
    CHECK((e.vectors - MatrixXcd::Identity(2, 2)).norm() == 0.0);

    MatrixXcd x(2, 2);
    x << 0, 1, 1, 0;
    e = eig_hermitian(x);
    CHECK(e.values(0) == doctest::Approx(1.0));
    CHECK(e.values(1) == doctest::Approx(-1.0));

    MatrixXcd y(2, 2);
    y << 2, I, -I, 2;
    e = eig_hermitian(y);
    CHECK(e.values(0) == doctest::Approx(3.0));
    CHECK(e.values(1) == doctest::Approx(1.0));
}

TEST_CASE("Hermitian solver errors") {
    MatrixXcd a(2, 2);
    a << 1, 2, 3, 4;
    CHECK_THROWS_AS(eig_hermitian(a), NotHermitian);
    CHECK_THROWS_AS(eig_hermitian(MatrixXcd(2, 3)), NotHermitian);
}

TEST_CASE("random Hermitian reconstruction, unitarity and trace") {
    std::mt19937_64 rng(31);
    for (Eigen::Index n : {1, 2, 5, 13, 30, 50}) {
        const MatrixXcd h = random_hermitian_c(n, rng);
        const auto e = eig_hermitian(h);
        const MatrixXcd rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        CHECK((h - rebuilt).norm() <= 1e-10 * std::max(1.0, h.norm()));
        CHECK((e.vectors.adjoint() * e.vectors - MatrixXcd::Identity(n, n)).norm() <= 1e-10);
        CHECK(std::abs(e.values.sum() - h.trace().real()) <= 1e-10 * std::max(1.0, h.norm()));
        for (Eigen::Index k = 1; k < n; ++k) CHECK(e.values(k - 1) >= e.values(k));
    }
}

TEST_CASE("eigenvalues agree with characteristic polynomial roots") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; ++t) {
        for (Eigen::Index n : {2, 3, 4}) {
            const MatrixXcd h = random_hermitian_c(n, rng);
            const auto e = eig_hermitian(h);
            const auto roots = charpoly_roots(h);
            for (Eigen::Index k = 0; k < n; ++k) CHECK(std::abs(e.values(k) - roots[static_cast<std::size_t>(k)]) < 1e-9);
        }
    }
}

TEST_CASE("degenerate spectra") {
    std::mt19937_64 rng(33);
    const MatrixXcd q = eig_hermitian(random_hermitian_c(6, rng)).vectors;
    Eigen::VectorXd d(6);
    d << 2, 2, 2, 0, -1, -1;
    const MatrixXcd h = q * d.cast<Complex>().asDiagonal() * q.adjoint();
    const auto e = eig_hermitian(h);
    for (Eigen::Index k = 0; k < 6; ++k) CHECK(std::abs(e.values(k) - d(k)) < 1e-12);
}

TEST_CASE("clustering") {
    Eigen::VectorXd a(3);
    a << 3, 3, 1;
    auto c = cluster_eigenvalues(a, 1e-8);
    REQUIRE(c.size() == 2);
    CHECK(c[0].value == 3.0);
    CHECK(c[0].multiplicity == 2);
    CHECK(c[1].value == 1.0);
    CHECK(c[1].first == 2);

    Eigen::VectorXd b(3);
    b << 2, 2 - 1e-12, 0;
    c = cluster_eigenvalues(b, 1e-8);
    REQUIRE(c.size() == 2);
    CHECK(c[0].value == doctest::Approx(2.0));
    CHECK(c[0].multiplicity == 2);

    Eigen::VectorXd s(3);
    s << 5, 4, 3;
    CHECK(cluster_eigenvalues(s, 1e-8).size() == 3);
}
