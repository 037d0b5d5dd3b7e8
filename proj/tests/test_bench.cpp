#include <doctest.h>

#include "dqeig/adjoint.hpp"
#include "dqeig/bench.hpp"
#include "dqeig/errors.hpp"
#include "dqeig/hermitian_eig.hpp"
#include "support.hpp"

using namespace dqeig;
using namespace dqeig::testing;

namespace {

VisibilityGraph identity_poses(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    VisibilityGraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.poses.assign(n, DualQuaternion::identity());
    return g;
}

}  // namespace

TEST_CASE("Laplacian of the empty graph and of K3") {
    CHECK(build_laplacian(identity_poses(4, {})) == DQMatrix(4, 4));

    const DQMatrix l = build_laplacian(identity_poses(3, {{0, 1}, {1, 2}, {0, 2}}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(l(i, j) == DualQuaternion{Quaternion{i == j ? 2.0 : -1.0}});
    const auto e = eig_hermitian(adjoint(l).st);
    CHECK(e.values(0) == doctest::Approx(3.0));
    CHECK(e.values(3) == doctest::Approx(3.0));
    CHECK(std::abs(e.values(5)) < 1e-12);
}

TEST_CASE("Laplacian structure") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const VisibilityGraph g = random_graph(8, 0.4, seed);
        const DQMatrix l = build_laplacian(g);
        CHECK(l.hermitian_deviation() == 0.0);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(l(i, i).du == Quaternion{});
            CHECK(l(i, i).st.x == 0.0);
        }
        // Unit poses give the classical spectrum, which is non-negative.
        const auto e = eig_hermitian(adjoint(l).st);
        CHECK(e.values(e.values.size() - 1) > -1e-12);
    }

    VisibilityGraph loop = identity_poses(2, {{1, 1}});
    CHECK_THROWS_AS(build_laplacian(loop), InvalidArgument);
    VisibilityGraph bad_pose = identity_poses(2, {{0, 1}});
    bad_pose.poses[0] = DualQuaternion{Quaternion{2}};
    CHECK_THROWS_AS(build_laplacian(bad_pose), InvalidArgument);
}

TEST_CASE("pentagon fixture") {
    const DQMatrix p = pentagon_fixture();
    CHECK(p.is_hermitian());
    for (std::size_t i = 0; i < 5; ++i) CHECK(p(i, i) == DualQuaternion{Quaternion{}, Quaternion{double(i + 1)}});
    CHECK(p(0, 2) == DualQuaternion{});
    CHECK(p(0, 4).st.norm() == doctest::Approx(1.0));
}

TEST_CASE("random graphs") {
    const VisibilityGraph g = random_graph(10, 0.2, 1);
    CHECK(g.edges.size() == 10);
    CHECK(g.sparsity() == doctest::Approx(0.2));
    for (const auto& p : g.poses) CHECK(p.is_unit(1e-12));
    CHECK_NOTHROW(g.validate());

    const VisibilityGraph again = random_graph(10, 0.2, 1);
    CHECK(again.edges == g.edges);
    CHECK(again.poses == g.poses);

    CHECK_THROWS_AS(random_graph(10, 0.95, 1), SparsityTooHigh);
    CHECK_NOTHROW(random_graph(10, 0.9, 1));
}

TEST_CASE("random Hermitian matrices") {
    const DQMatrix q = random_hermitian(6, 4);
    CHECK(q.hermitian_deviation() == 0.0);
    CHECK(q == random_hermitian(6, 4));
    CHECK_FALSE(q == random_hermitian(6, 5));

    const DQMatrix one = random_hermitian(1, 8);
    CHECK(one(0, 0).st.x == 0.0);
    CHECK(one(0, 0).st.y == 0.0);
    CHECK(one(0, 0).st.z == 0.0);
}

TEST_CASE("known-spectrum synthesis") {
    const auto ks = synth_known_spectrum({{3, 1}, {1, 0}}, 2);
    CHECK(ks.q.hermitian_deviation() == 0.0);
    const EigenResult r = eddcam_ea(ks.q);
    REQUIRE(r.eigenvalues().size() == 2);
    CHECK(r.eigenvalues()[0].st == doctest::Approx(3.0));
    CHECK(r.eigenvalues()[0].du == doctest::Approx(1.0));

    const auto flat = synth_known_spectrum({{2, 0.5}, {2, 0.5}, {2, 0.5}}, 3);
    const DQMatrix want = DQMatrix::identity(3) * DualNumber{2, 0.5};
    CHECK(max_abs_diff(flat.q, want) < 1e-14);

    const auto spec = random_spectrum(8, 0.1, 5);
    for (std::size_t k = 1; k < spec.size(); ++k) CHECK(spec[k - 1].st - spec[k].st >= 0.1);
}

TEST_CASE("benchmark determinism and row shapes") {
    BenchParams a;
    a.kind = BenchKind::Aitken;
    a.sizes = {4, 6};
    a.trials = 3;
    a.seed = 12;
    const auto r1 = run_benchmark(a);
    a.threads = 2;
    const auto r2 = run_benchmark(a);
    REQUIRE(r1.size() == 12);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t k = 0; k < r1.size(); ++k) {
        CHECK(r1[k].algorithm == r2[k].algorithm);
        CHECK(r1[k].seed == r2[k].seed);
        CHECK(r1[k].e_lambda == r2[k].e_lambda);
        CHECK(r1[k].iterations == r2[k].iterations);
        CHECK(r1[k].e_lambda >= 0.0);
    }
    CHECK(aggregate(r1, a.seed).size() == 4);

    BenchParams l = laplacian_defaults();
    l.trials = 2;
    l.sparsities = {0.1, 0.3};
    const auto rows = aggregate(run_benchmark(l), 0);
    CHECK(rows.size() == 6);
    for (const auto& row : rows) {
        CHECK(row.trials == 2);
        CHECK(row.failures == 0);
    }

    BenchParams p;
    p.kind = BenchKind::Pentagon;
    p.trials = 1;
    const auto pent = run_benchmark(p);
    REQUIRE(pent.size() == 2);
    CHECK(pent[0].algorithm == "eddcam");
    CHECK(pent[0].converged);
    CHECK(pent[1].algorithm == "pm");
    CHECK_FALSE(pent[1].converged);

    BenchParams none;
    none.trials = 0;
    CHECK_THROWS_AS(run_benchmark(none), InvalidArgument);
}
