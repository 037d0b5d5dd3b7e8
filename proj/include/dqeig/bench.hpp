#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dqeig/dual_spectral.hpp"
#include "dqeig/matrix.hpp"
#include "dqeig/power.hpp"

namespace dqeig {

struct VisibilityGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
    std::vector<DualQuaternion> poses;

    [[nodiscard]] double sparsity() const;
    /// Throws InvalidArgument on self-loops, out-of-range or duplicate edges,
    /// a pose count other than n, or a pose that is not unit within 1e-12.
    void validate() const;
};

/// L = D - A with a_ij = q_i* q_j on edges and D the (real) degree matrix.
DQMatrix build_laplacian(const VisibilityGraph& g);

/// The 5-agent cycle with unit-projected poses and i*eps on the diagonal.
DQMatrix pentagon_fixture();
/// Reference eigenvalues of pentagon_fixture(), descending.
std::vector<DualNumber> pentagon_reference();

/// Exactly round(s n^2 / 2) distinct edges chosen uniformly, random unit poses.
VisibilityGraph random_graph(std::size_t n, double s, std::uint64_t seed);

/// (A + A*)/2 with every real component of A uniform in [-1, 1].
DQMatrix random_hermitian(std::size_t n, std::uint64_t seed);

/// n dual numbers, descending, standard parts in [-n, n] at least min_gap apart,
/// dual parts uniform in [-1, 1].
std::vector<DualNumber> random_spectrum(std::size_t n, double min_gap, std::uint64_t seed);

struct KnownSpectrum {
    DQMatrix q;
    std::vector<DualNumber> sigma;  ///< sorted descending
};

/// V diag(sigma) V* with V a random unitary quaternion matrix.
/// Throws DegenerateRandomDraw when Gram-Schmidt loses rank.
KnownSpectrum synth_known_spectrum(const std::vector<DualNumber>& sigma, std::uint64_t seed);

enum class BenchKind { Aitken, Laplacian, Pentagon };

struct BenchParams {
    BenchKind kind = BenchKind::Aitken;
    std::vector<std::size_t> sizes{10};
    std::vector<double> sparsities{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    PowerIterConfig cfg{};
    double deflate_tol = kDefaultDeflateTol;
    /// 0 means "use DQEIG_THREADS, or all hardware threads".
    std::size_t threads = 0;
};

/// Settings used for the Laplacian table: tighter inner tolerance and a
/// larger iteration cap than the single-pair defaults.
BenchParams laplacian_defaults();

struct BenchRecord {
    std::string algorithm;
    std::size_t n = 0;
    double sparsity = 0.0;
    std::uint64_t seed = 0;
    double e_lambda = 0.0;
    double iterations = 0.0;
    double wall_seconds = 0.0;
    bool converged = true;
};

/// One record per (algorithm, cell, trial). Trial t of a cell uses
/// mix_seed(seed, t); records come back in a fixed order regardless of threading.
std::vector<BenchRecord> run_benchmark(const BenchParams& params);

struct BenchRow {
    std::string algorithm;
    std::size_t n = 0;
    double sparsity = 0.0;
    std::size_t trials = 0;
    double mean_e_lambda = 0.0;
    double mean_iters = 0.0;
    double mean_seconds = 0.0;
    std::uint64_t seed = 0;
    std::size_t failures = 0;
};

/// Averages records per (algorithm, n, sparsity) in first-seen order.
std::vector<BenchRow> aggregate(const std::vector<BenchRecord>& records, std::uint64_t seed);

/// Thread count from DQEIG_THREADS (0 or unset: hardware concurrency).
std::size_t bench_threads();

}  // namespace dqeig
