#pragma once

// Matrix files ("dqh-1" JSON), solver result documents and benchmark CSV.

#include <iosfwd>
#include <string>
#include <vector>

#include "dqeig/bench.hpp"
#include "dqeig/dual_spectral.hpp"
#include "dqeig/matrix.hpp"

namespace dqeig {

inline constexpr const char* kMatrixFormat = "dqh-1";
inline constexpr const char* kCsvHeader = "algorithm,n,sparsity,trials,mean_e_lambda,mean_iters,mean_seconds,seed";

/// {"format": "dqh-1", "n": N, "entries": [[q0,q1,q2,q3,d0,d1,d2,d3], ...]},
/// row-major. Doubles are written in shortest round-trip form.
std::string matrix_to_json(const DQMatrix& q);
/// Throws ParseError on malformed text, a wrong format tag, a bad entry
/// count or a non-numeric component.
DQMatrix matrix_from_json(const std::string& text);

DQMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const DQMatrix& q);

struct SolveReport {
    std::string algorithm;
    bool converged = true;
    std::string message;
    EigenResult result;
};

/// Eigenvalues as [st, du] (descending, repeated per eigenvector),
/// eigenvectors as arrays of 8-real entries, residual and iteration counts.
std::string report_to_json(const SolveReport& r);

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

/// Locale-independent shortest round-trip decimal.
std::string format_double(double x);

}  // namespace dqeig
