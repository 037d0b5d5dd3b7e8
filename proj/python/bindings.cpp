#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dqeig/bench.hpp"
#include "dqeig/dual_spectral.hpp"
#include "dqeig/errors.hpp"
#include "dqeig/io.hpp"
#include "dqeig/power.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace dqeig;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// Entries travel as (..., 8) float arrays: standard w x y z, then dual w x y z.
void put(double* out, const DualQuaternion& q) {
    out[0] = q.st.w; out[1] = q.st.x; out[2] = q.st.y; out[3] = q.st.z;
    out[4] = q.du.w; out[5] = q.du.x; out[6] = q.du.y; out[7] = q.du.z;
}

DualQuaternion get(const double* in) {
    return {Quaternion{in[0], in[1], in[2], in[3]}, Quaternion{in[4], in[5], in[6], in[7]}};
}

Array to_array(const DQMatrix& m) {
    Array a({m.rows(), m.cols(), std::size_t{8}});
    double* p = a.mutable_data();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) put(p + 8 * (i * m.cols() + j), m(i, j));
    return a;
}

Array to_array(const DQVector& v) {
    Array a({v.size(), std::size_t{8}});
    for (std::size_t i = 0; i < v.size(); ++i) put(a.mutable_data() + 8 * i, v[i]);
    return a;
}

DQMatrix matrix_from(const Array& a) {
    if (a.ndim() != 3 || a.shape(2) != 8 || a.shape(0) != a.shape(1))
        throw InvalidArgument("expected an array of shape (n, n, 8)");
    const auto n = static_cast<std::size_t>(a.shape(0));
    DQMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = get(a.data() + 8 * (i * n + j));
    return m;
}

DQVector vector_from(const Array& a) {
    if (a.ndim() != 2 || a.shape(1) != 8) throw InvalidArgument("expected an array of shape (n, 8)");
    DQVector v(static_cast<std::size_t>(a.shape(0)));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = get(a.data() + 8 * i);
    return v;
}

py::tuple dual(const DualNumber& d) { return py::make_tuple(d.st, d.du); }

py::dict result_dict(const EigenResult& r) {
    py::list values, vectors, iterations;
    for (const auto& p : r.pairs) {
        for (const auto& v : p.vectors) {
            values.append(dual(p.value));
            vectors.append(to_array(v));
        }
    }
    for (auto k : r.iterations) iterations.append(k);
    return py::dict("eigenvalues"_a = values, "eigenvectors"_a = vectors, "residual"_a = r.residual,
                    "iterations"_a = iterations);
}

py::dict power_dict(const PowerResult& r) {
    return py::dict("value"_a = dual(r.value), "vector"_a = to_array(r.vector), "converged"_a = r.trace.converged,
                    "iterations"_a = r.trace.iterations, "residual"_a = r.trace.final_residual);
}

PowerIterConfig config(double tol, std::size_t max_iter, std::uint64_t seed) {
    PowerIterConfig cfg;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    cfg.seed = seed;
    return cfg;
}

using FromStart = PowerResult (*)(const DQMatrix&, const DQVector&, const PowerIterConfig&);
using FromSeed = PowerResult (*)(const DQMatrix&, const PowerIterConfig&);

py::dict single(FromStart with_start, FromSeed with_seed, const Array& q, double tol, std::size_t max_iter,
                std::uint64_t seed, const std::optional<Array>& v0) {
    const DQMatrix m = matrix_from(q);
    const PowerIterConfig cfg = config(tol, max_iter, seed);
    return power_dict(v0 ? with_start(m, vector_from(*v0), cfg) : with_seed(m, cfg));
}

}  // namespace

PYBIND11_MODULE(_dqeig, m) {
    m.doc() = "Eigenvalue solvers for dual quaternion Hermitian matrices";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    static py::exception<NoConvergence> no_conv(m, "NoConvergence", base.ptr());
    static py::exception<NotHermitian> not_herm(m, "NotHermitian", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const NoConvergence& e) {
            py::set_error(no_conv, e.what());
        } catch (const NotHermitian& e) {
            py::set_error(not_herm, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def("random_hermitian", [](std::size_t n, std::uint64_t seed) { return to_array(random_hermitian(n, seed)); },
          "n"_a, "seed"_a = 0);
    m.def("pentagon_fixture", [] { return to_array(pentagon_fixture()); });
    m.def("pentagon_reference", [] {
        py::list out;
        for (const auto& d : pentagon_reference()) out.append(dual(d));
        return out;
    });
    m.def("synth_known_spectrum", [](const std::vector<std::pair<double, double>>& sigma, std::uint64_t seed) {
        std::vector<DualNumber> s;
        for (auto [a, b] : sigma) s.push_back({a, b});
        return to_array(synth_known_spectrum(s, seed).q);
    }, "sigma"_a, "seed"_a = 0);

    m.def("eddcam", [](const Array& q) { return result_dict(eddcam_ea(matrix_from(q))); }, "q"_a,
          "All eigenpairs through the dual complex adjoint.");
    m.def("dcam", [](const Array& q, double tol, std::size_t max_iter, std::uint64_t seed,
                     const std::optional<Array>& v0) { return single(dcam_pm, dcam_pm, q, tol, max_iter, seed, v0); },
          "q"_a, "tol"_a = 1e-6, "max_iter"_a = 5000, "seed"_a = 0, "v0"_a = py::none());
    m.def("adcam", [](const Array& q, double tol, std::size_t max_iter, std::uint64_t seed,
                      const std::optional<Array>& v0) { return single(adcam_pm, adcam_pm, q, tol, max_iter, seed, v0); },
          "q"_a, "tol"_a = 1e-6, "max_iter"_a = 5000, "seed"_a = 0, "v0"_a = py::none());
    m.def("power_method", [](const Array& q, double tol, std::size_t max_iter, std::uint64_t seed,
                             const std::optional<Array>& v0) {
        return single(power_method_baseline, power_method_baseline, q, tol, max_iter, seed, v0);
    }, "q"_a, "tol"_a = 1e-6, "max_iter"_a = 5000, "seed"_a = 0, "v0"_a = py::none());
    m.def("dcama", [](const Array& q, double tol, std::size_t max_iter, std::uint64_t seed) {
        return result_dict(dcama_pm(matrix_from(q), config(tol, max_iter, seed)));
    }, "q"_a, "tol"_a = 1e-6, "max_iter"_a = 5000, "seed"_a = 0);
    m.def("pm_deflation", [](const Array& q, double tol, std::size_t max_iter, std::uint64_t seed) {
        return result_dict(pm_deflation(matrix_from(q), config(tol, max_iter, seed)));
    }, "q"_a, "tol"_a = 1e-6, "max_iter"_a = 5000, "seed"_a = 0);

    m.def("aitken", [](double x0, double x1, double x2) { return aitken_extrapolate(x0, x1, x2); });
    m.def("to_json", [](const Array& q) { return matrix_to_json(matrix_from(q)); });
    m.def("from_json", [](const std::string& text) { return to_array(matrix_from_json(text)); });
}
