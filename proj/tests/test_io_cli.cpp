#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dqeig/bench.hpp"
#include "dqeig/cli.hpp"
#include "dqeig/errors.hpp"
#include "dqeig/io.hpp"
#include "support.hpp"

using namespace dqeig;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("dqeig-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("matrix files round-trip bit-exactly") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> wide(-1e6, 1e6);
    for (int t = 0; t < 20; ++t) {
        DQMatrix q = dqeig::testing::rand_dq_matrix(4, 4, rng);
        q(0, 0).st.w = wide(rng) / 3.0;
        q(1, 2).du.z = 1e-300 / 7.0;
        CHECK(matrix_from_json(matrix_to_json(q)) == q);
    }
    TempDir dir;
    const DQMatrix p = pentagon_fixture();
    write_matrix_file(dir.file("p.json"), p);
    CHECK(read_matrix_file(dir.file("p.json")) == p);
}

TEST_CASE("malformed matrix files") {
    const std::string good = matrix_to_json(DQMatrix::identity(2));
    CHECK_THROWS_AS(matrix_from_json(good.substr(0, good.size() / 2)), ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"format":"dqh-2","n":1,"entries":[[1,0,0,0,0,0,0,0]]})"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"format":"dqh-1","n":2,"entries":[[1,0,0,0,0,0,0,0]]})"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"format":"dqh-1","n":1,"entries":[[1,0,0,0,0,0,0]]})"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(R"({"format":"dqh-1","n":1,"entries":[[1,0,0,"x",0,0,0,0]]})"), ParseError);
    CHECK_THROWS_AS(read_matrix_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("CSV layout") {
    std::ostringstream os;
    BenchRow row;
    row.algorithm = "dcam";
    row.n = 10;
    row.sparsity = 0.1;
    row.trials = 3;
    row.mean_e_lambda = 1.5e-7;
    row.mean_iters = 437.5;
    row.mean_seconds = 0.25;
    row.seed = 42;
    write_csv(os, {row});
    CHECK(os.str() ==
          "algorithm,n,sparsity,trials,mean_e_lambda,mean_iters,mean_seconds,seed\n"
          "dcam,10,0.1,3,1.5e-07,437.5,0.25,42\n");
}

TEST_CASE("cli solve") {
    TempDir dir;
    const std::string pent = dir.file("pent.json");
    REQUIRE(run({"fixture", "pentagon", "--out", pent}).code == 0);

    const Run ok = run({"solve", pent, "--alg", "eddcam"});
    CHECK(ok.code == 0);
    const auto doc = nlohmann::json::parse(ok.out);
    REQUIRE(doc["eigenvalues"].size() == 5);
    CHECK(doc["eigenvalues"][0][0].get<double>() == doctest::Approx(2.0));
    CHECK(doc["eigenvectors"][0].size() == 5);
    CHECK(doc["eigenvectors"][0][0].size() == 8);
    CHECK(doc["residual"].get<double>() < 1e-10);

    const Run pm = run({"solve", pent, "--alg", "pm", "--out", dir.file("pm.json")});
    CHECK(pm.code == 2);
    const auto pm_doc = nlohmann::json::parse(slurp(dir.file("pm.json")));
    CHECK_FALSE(pm_doc["converged"].get<bool>());
    CHECK(pm_doc["eigenvalues"].size() == 1);

    const std::string rnd = dir.file("rnd.json");
    REQUIRE(run({"fixture", "random", "--n", "6", "--seed", "3", "--out", rnd}).code == 0);
    for (const char* alg : {"dcam", "adcam", "dcama", "pm", "eddcam"}) {
        const Run r = run({"solve", rnd, "--alg", alg, "--max-iter", "50000"});
        CHECK_MESSAGE(r.code == 0, alg);
    }

    {
        std::ofstream f(dir.file("trunc.json"));
        const std::string text = slurp(pent);
        f << text.substr(0, text.size() / 3);
    }
    const Run bad = run({"solve", dir.file("trunc.json")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("parse error") != std::string::npos);

    {
        std::ofstream f(dir.file("nh.json"));
        f << R"({"format":"dqh-1","n":2,"entries":[[1,0,0,0,0,0,0,0],[1,0,0,0,0,0,0,0],[0,0,0,0,0,0,0,0],[1,0,0,0,0,0,0,0]]})";
    }
    CHECK(run({"solve", dir.file("nh.json")}).code == 1);
    CHECK(run({"solve", pent, "--alg", "nope"}).code == 1);
}

TEST_CASE("cli bench") {
    TempDir dir;
    const Run a = run({"bench", "aitken", "--sizes", "4,5", "--trials", "2", "--csv", dir.file("a.csv")});
    CHECK(a.code == 0);
    const std::string csv = slurp(dir.file("a.csv"));
    CHECK(csv.rfind("algorithm,n,sparsity,trials,mean_e_lambda,mean_iters,mean_seconds,seed\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);

    const Run l = run({"bench", "laplacian", "--sizes", "6", "--sparsities", "0.2,0.4", "--trials", "1", "--csv",
                       dir.file("l.csv")});
    CHECK(l.code == 0);
    const std::string lcsv = slurp(dir.file("l.csv"));
    CHECK(std::count(lcsv.begin(), lcsv.end(), '\n') == 7);

    CHECK(run({"bench", "aitken", "--trials", "0", "--csv", dir.file("z.csv")}).code == 1);
    CHECK(run({"bench", "aitken"}).code == 1);
}

TEST_CASE("cli pentagon") {
    const Run ok = run({"pentagon"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("0.6180 + 3.5257 eps") != std::string::npos);
    CHECK(ok.out.find("-1.6180 + 2.1493 eps") != std::string::npos);

    const Run js = run({"pentagon", "--json"});
    CHECK(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["matches_reference"].get<bool>());
    CHECK(doc["eigenvalues"][1][1].get<double>() == doctest::Approx(3.5257).epsilon(1e-4));

    const Run pm = run({"pentagon", "--alg", "pm"});
    CHECK(pm.code == 2);
    CHECK(pm.out.find("non-convergence") != std::string::npos);

    CHECK(run({"--help"}).code == 0);
}
