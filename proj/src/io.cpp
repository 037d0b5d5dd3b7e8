#include "dqeig/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dqeig/errors.hpp"

namespace dqeig {

namespace {

using nlohmann::json;

json entry_json(const DualQuaternion& e) {
    return json::array({e.st.w, e.st.x, e.st.y, e.st.z, e.du.w, e.du.x, e.du.y, e.du.z});
}

json vector_json(const DQVector& v) {
    json out = json::array();
    for (const auto& e : v.entries()) out.push_back(entry_json(e));
    return out;
}

double number_at(const json& arr, std::size_t k, std::size_t entry) {
    const json& x = arr[k];
    if (!x.is_number()) {
        throw ParseError("entry " + std::to_string(entry) + " component " + std::to_string(k) + " is not a number");
    }
    return x.get<double>();
}

}  // namespace

std::string matrix_to_json(const DQMatrix& q) {
    if (q.rows() != q.cols()) throw InvalidArgument("matrix files hold square matrices");
    json doc;
    doc["format"] = kMatrixFormat;
    doc["n"] = q.rows();
    json entries = json::array();
    for (const auto& e : q.entries()) {
        for (double c : {e.st.w, e.st.x, e.st.y, e.st.z, e.du.w, e.du.x, e.du.y, e.du.z}) {
            if (!std::isfinite(c)) throw InvalidArgument("matrix files cannot hold non-finite values");
        }
        entries.push_back(entry_json(e));
    }
    doc["entries"] = std::move(entries);
    return doc.dump();
}

DQMatrix matrix_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("matrix file must hold a JSON object");
    if (!doc.contains("format") || doc["format"] != kMatrixFormat) {
        throw ParseError(std::string("format tag must be \"") + kMatrixFormat + "\"");
    }
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) throw ParseError("n must be a non-negative integer");
    const auto n = doc["n"].get<std::size_t>();
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("entries must be an array");
    const json& entries = doc["entries"];
    if (entries.size() != n * n) {
        throw ParseError("expected " + std::to_string(n * n) + " entries, found " + std::to_string(entries.size()));
    }
    DQMatrix q(n, n);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const json& e = entries[k];
        if (!e.is_array() || e.size() != 8) throw ParseError("entry " + std::to_string(k) + " must hold 8 reals");
        q(k / n, k % n) = DualQuaternion{
            Quaternion{number_at(e, 0, k), number_at(e, 1, k), number_at(e, 2, k), number_at(e, 3, k)},
            Quaternion{number_at(e, 4, k), number_at(e, 5, k), number_at(e, 6, k), number_at(e, 7, k)}};
    }
    return q;
}

DQMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return matrix_from_json(ss.str());
}

void write_matrix_file(const std::string& path, const DQMatrix& q) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << matrix_to_json(q) << '\n';
    if (!out) throw InvalidArgument("failed writing " + path);
}

std::string report_to_json(const SolveReport& r) {
    json doc;
    doc["algorithm"] = r.algorithm;
    doc["converged"] = r.converged;
    if (!r.message.empty()) doc["message"] = r.message;
    json values = json::array();
    json vectors = json::array();
    for (const auto& p : r.result.pairs) {
        for (const auto& w : p.vectors) {
            values.push_back(json::array({p.value.st, p.value.du}));
            vectors.push_back(vector_json(w));
        }
    }
    doc["eigenvalues"] = std::move(values);
    doc["eigenvectors"] = std::move(vectors);
    doc["residual"] = std::isfinite(r.result.residual) ? json(r.result.residual) : json(nullptr);
    doc["iterations"] = r.result.iterations;
    return doc.dump(2);
}

std::string format_double(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return {buf.data(), res.ptr};
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.algorithm << ',' << r.n << ',' << format_double(r.sparsity) << ',' << r.trials << ','
           << format_double(r.mean_e_lambda) << ',' << format_double(r.mean_iters) << ','
           << format_double(r.mean_seconds) << ',' << r.seed << '\n';
    }
}

}  // namespace dqeig
