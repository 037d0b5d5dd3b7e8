#include "dqeig/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <tuple>

#include "dqeig/errors.hpp"
#include "dqeig/random.hpp"

namespace dqeig {

namespace {

// Pose table for the five-agent cycle, four decimals as published.
constexpr std::array<std::array<double, 8>, 5> kPentagonPoses{{
    {-0.5103, -0.2661, -0.2632, -0.7743, 0.2645, -0.4286, 0.4180, -0.1691},
    {0.2881, -0.6705, -0.2305, -0.6437, -0.3885, -0.5378, 0.2295, 0.3042},
    {-0.1236, 0.1789, -0.7519, -0.6223, -0.9227, -0.9461, 0.1770, -0.3027},
    {-0.5605, -0.2485, -0.6001, -0.5138, -0.2963, -0.3621, 0.6937, -0.3117},
    {-0.5946, -0.1002, -0.2584, -0.7547, -0.2488, 0.2520, 0.0635, 0.1408},
}};

DualQuaternion relative_pose(const DualQuaternion& qi, const DualQuaternion& qj) { return qi.conj() * qj; }

DualQuaternion random_dq(Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Quaternion s{normal(rng), normal(rng), normal(rng), normal(rng)};
    Quaternion d{normal(rng), normal(rng), normal(rng), normal(rng)};
    return {s, d};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void run_parallel(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

double total_iterations(const EigenResult& r) {
    double s = 0.0;
    for (auto k : r.iterations) s += static_cast<double>(k);
    return s;
}

// Runs one all-pairs solver and fills a record; solver failures become
// non-converged records instead of exceptions.
template <class Solve>
void solve_into(BenchRecord& rec, Solve&& solve) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        EigenResult r = solve();
        rec.wall_seconds = seconds_since(t0);
        rec.e_lambda = r.residual;
        rec.iterations = total_iterations(r);
        rec.converged = true;
    } catch (const InnerNoConvergence& e) {
        rec.wall_seconds = seconds_since(t0);
        rec.e_lambda = e.partial().pairs.empty() ? std::numeric_limits<double>::infinity() : e.partial().residual;
        rec.iterations = total_iterations(e.partial()) + static_cast<double>(e.trace().iterations);
        rec.converged = false;
    } catch (const Error&) {
        rec.wall_seconds = seconds_since(t0);
        rec.e_lambda = std::numeric_limits<double>::infinity();
        rec.converged = false;
    }
}

}  // namespace

double VisibilityGraph::sparsity() const {
    if (n == 0) return 0.0;
    return 2.0 * static_cast<double>(edges.size()) / static_cast<double>(n * n);
}

void VisibilityGraph::validate() const {
    if (poses.size() != n) throw InvalidArgument("pose count does not match agent count");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [i, j] : edges) {
        if (i == j) throw InvalidArgument("self-loop at agent " + std::to_string(i));
        if (i >= n || j >= n) throw InvalidArgument("edge endpoint out of range");
        if (!seen.insert({std::min(i, j), std::max(i, j)}).second) throw InvalidArgument("duplicate edge");
    }
    for (const auto& p : poses) {
        if (!p.is_unit(1e-12)) throw InvalidArgument("pose is not a unit dual quaternion");
    }
}

DQMatrix build_laplacian(const VisibilityGraph& g) {
    g.validate();
    DQMatrix l(g.n, g.n);
    std::vector<double> degree(g.n, 0.0);
    for (auto [i, j] : g.edges) {
        l(i, j) = DualQuaternion{} - relative_pose(g.poses[i], g.poses[j]);
        l(j, i) = l(i, j).conj();
        degree[i] += 1.0;
        degree[j] += 1.0;
    }
    for (std::size_t i = 0; i < g.n; ++i) l(i, i) = DualQuaternion{Quaternion{degree[i], 0, 0, 0}};
    return l;
}

DQMatrix pentagon_fixture() {
    constexpr std::size_t n = 5;
    std::array<DualQuaternion, n> q;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = kPentagonPoses[i];
        q[i] = project_unit(DualQuaternion{Quaternion{r[0], r[1], r[2], r[3]}, Quaternion{r[4], r[5], r[6], r[7]}});
    }
    DQMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        p(i, j) = relative_pose(q[i], q[j]);
        p(j, i) = relative_pose(q[j], q[i]);
        p(i, i) = DualQuaternion{Quaternion{}, Quaternion{static_cast<double>(i + 1), 0, 0, 0}};
    }
    return p;
}

std::vector<DualNumber> pentagon_reference() {
    return {{2.0, 3.0}, {0.6180, 3.5257}, {0.6180, 2.4743}, {-1.6180, 3.8507}, {-1.6180, 2.1493}};
}

VisibilityGraph random_graph(std::size_t n, double s, std::uint64_t seed) {
    if (!(s > 0.0 && s <= 1.0)) throw InvalidArgument("sparsity must lie in (0, 1]");
    const auto target = static_cast<std::size_t>(std::llround(s * static_cast<double>(n * n) / 2.0));
    const std::size_t capacity = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (target > capacity) {
        throw SparsityTooHigh("sparsity " + std::to_string(s) + " needs " + std::to_string(target) +
                              " edges, only " + std::to_string(capacity) + " available");
    }
    Rng rng(seed);
    VisibilityGraph g;
    g.n = n;
    std::vector<std::pair<std::size_t, std::size_t>> all;
    all.reserve(capacity);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(target);
    std::sort(all.begin(), all.end());
    g.edges = std::move(all);
    g.poses.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.poses.push_back(project_unit(random_dq(rng)));
    return g;
}

DQMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InvalidArgument("matrix size must be positive");
    Rng rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DQMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = DualQuaternion{Quaternion{u(rng), u(rng), u(rng), u(rng)},
                                     Quaternion{u(rng), u(rng), u(rng), u(rng)}};
    DQMatrix q = (a + a.conj_transpose()) * DualNumber{0.5, 0.0};
    // Exact symmetry: mirror the upper triangle.
    for (std::size_t i = 0; i < n; ++i) {
        q(i, i) = DualQuaternion{Quaternion{q(i, i).st.w, 0, 0, 0}, Quaternion{q(i, i).du.w, 0, 0, 0}};
        for (std::size_t j = i + 1; j < n; ++j) q(j, i) = q(i, j).conj();
    }
    return q;
}

std::vector<DualNumber> random_spectrum(std::size_t n, double min_gap, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    std::vector<DualNumber> out(n);
    double st = static_cast<double>(n) * unit(rng);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = DualNumber{st, sym(rng)};
        st -= min_gap + unit(rng);
    }
    return out;
}

KnownSpectrum synth_known_spectrum(const std::vector<DualNumber>& sigma, std::uint64_t seed) {
    const std::size_t n = sigma.size();
    if (n == 0) throw InvalidArgument("spectrum must be non-empty");
    Rng rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<DQVector> basis;
    for (std::size_t c = 0; c < n; ++c) {
        DQVector w(n);
        for (std::size_t i = 0; i < n; ++i)
            w[i] = DualQuaternion{Quaternion{normal(rng), normal(rng), normal(rng), normal(rng)}};
        const double scale = std::sqrt(w.st_norm2());
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : basis) w -= u * inner(u, w);
        if (std::sqrt(w.st_norm2()) <= 1e-8 * scale) {
            throw DegenerateRandomDraw("Gram-Schmidt lost rank at column " + std::to_string(c));
        }
        basis.push_back(project_unit_2norm(w));
    }
    KnownSpectrum ks;
    ks.sigma = sigma;
    std::stable_sort(ks.sigma.begin(), ks.sigma.end(), [](const DualNumber& a, const DualNumber& b) { return a > b; });
    DQMatrix q(n, n);
    for (std::size_t k = 0; k < n; ++k) q += outer(basis[k] * sigma[k], basis[k]);
    for (std::size_t i = 0; i < n; ++i) {
        q(i, i) = DualQuaternion{Quaternion{q(i, i).st.w, 0, 0, 0}, Quaternion{q(i, i).du.w, 0, 0, 0}};
        for (std::size_t j = i + 1; j < n; ++j) q(j, i) = q(i, j).conj();
    }
    ks.q = std::move(q);
    return ks;
}

BenchParams laplacian_defaults() {
    BenchParams p;
    p.kind = BenchKind::Laplacian;
    p.sizes = {10};
    p.sparsities = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    p.trials = 10;
    p.cfg.tol = 1e-10;
    p.cfg.aitken_trigger = 1e-3;
    p.cfg.max_iter = 100000;
    return p;
}

std::size_t bench_threads() {
    if (const char* env = std::getenv("DQEIG_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<BenchRecord> run_benchmark(const BenchParams& params) {
    params.cfg.validate();
    if (params.trials == 0) throw InvalidArgument("trials must be positive");
    const std::size_t threads = params.threads != 0 ? params.threads : bench_threads();

    struct Cell {
        std::size_t n;
        double s;
    };
    std::vector<Cell> cells;
    std::vector<std::string> algs;
    switch (params.kind) {
        case BenchKind::Aitken:
            for (auto n : params.sizes) cells.push_back({n, 0.0});
            algs = {"dcam", "adcam"};
            break;
        case BenchKind::Laplacian:
            for (auto n : params.sizes)
                for (auto s : params.sparsities) cells.push_back({n, s});
            algs = {"pm", "dcama", "eddcam"};
            break;
        case BenchKind::Pentagon:
            cells.push_back({5, 0.4});
            algs = {"eddcam", "pm"};
            break;
    }
    if (cells.empty()) throw InvalidArgument("benchmark has no cells");

    const std::size_t per_cell = algs.size() * params.trials;
    std::vector<BenchRecord> records(cells.size() * per_cell);
    auto slot = [&](std::size_t cell, std::size_t alg, std::size_t trial) -> BenchRecord& {
        return records[cell * per_cell + alg * params.trials + trial];
    };

    run_parallel(cells.size() * params.trials, threads, [&](std::size_t job) {
        const std::size_t cell = job / params.trials;
        const std::size_t trial = job % params.trials;
        const Cell& c = cells[cell];
        const std::uint64_t seed = mix_seed(params.seed, trial);
        PowerIterConfig cfg = params.cfg;
        cfg.seed = seed;
        for (std::size_t a = 0; a < algs.size(); ++a) {
            BenchRecord& r = slot(cell, a, trial);
            r.algorithm = algs[a];
            r.n = c.n;
            r.sparsity = c.s;
            r.seed = seed;
        }

        switch (params.kind) {
            case BenchKind::Aitken: {
                const DQMatrix q = random_hermitian(c.n, seed);
                const DQVector v0 = random_unit_vector(c.n, mix_seed(seed, 0xA17));
                for (std::size_t a = 0; a < 2; ++a) {
                    BenchRecord& r = slot(cell, a, trial);
                    const auto t0 = std::chrono::steady_clock::now();
                    const PowerResult pr = a == 0 ? dcam_pm(q, v0, cfg) : adcam_pm(q, v0, cfg);
                    r.wall_seconds = seconds_since(t0);
                    r.e_lambda = eigen_residual(q, pr.value, pr.vector);
                    r.iterations = static_cast<double>(pr.trace.iterations);
                    r.converged = pr.trace.converged;
                }
                break;
            }
            case BenchKind::Laplacian:
            case BenchKind::Pentagon: {
                const DQMatrix q = params.kind == BenchKind::Laplacian
                                       ? build_laplacian(random_graph(c.n, c.s, seed))
                                       : pentagon_fixture();
                for (std::size_t a = 0; a < algs.size(); ++a) {
                    BenchRecord& r = slot(cell, a, trial);
                    if (algs[a] == "pm") {
                        solve_into(r, [&] { return pm_deflation(q, cfg, params.deflate_tol); });
                    } else if (algs[a] == "dcama") {
                        solve_into(r, [&] { return dcama_pm(q, cfg, params.deflate_tol); });
                    } else {
                        solve_into(r, [&] { return eddcam_ea(q); });
                    }
                }
                break;
            }
        }
    });
    return records;
}

std::vector<BenchRow> aggregate(const std::vector<BenchRecord>& records, std::uint64_t seed) {
    std::vector<BenchRow> rows;
    std::map<std::tuple<std::string, std::size_t, double>, std::size_t> index;
    for (const auto& r : records) {
        const auto key = std::make_tuple(r.algorithm, r.n, r.sparsity);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, rows.size()).first;
            BenchRow row;
            row.algorithm = r.algorithm;
            row.n = r.n;
            row.sparsity = r.sparsity;
            row.seed = seed;
            rows.push_back(row);
        }
        BenchRow& row = rows[it->second];
        row.trials += 1;
        row.mean_e_lambda += r.e_lambda;
        row.mean_iters += r.iterations;
        row.mean_seconds += r.wall_seconds;
        if (!r.converged) row.failures += 1;
    }
    for (auto& row : rows) {
        const double t = static_cast<double>(row.trials);
        row.mean_e_lambda /= t;
        row.mean_iters /= t;
        row.mean_seconds /= t;
    }
    return rows;
}

}  // namespace dqeig
