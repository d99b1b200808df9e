// Python bindings for the main operations: build resolutions, run the
// certification checks, compute characters, Ext tables and the direct Hom
// oracle. Kostant partitions are passed in the same "[[lo,hi],mult],..."
// form the CLI uses; structured results are converted from the canonical
// JSON encodings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "klrcalc/jsonio.hpp"
#include "klrcalc/verify.hpp"

namespace py = pybind11;
using namespace klrcalc;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
        case json::value_t::number_unsigned:
            return py::int_(j.get<long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (auto& x : j) out.append(to_py(x));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
            return out;
        }
        default:
            throw std::runtime_error("unsupported json value");
    }
}

Ring ring_of(const std::string& name) {
    if (name == "Q") return Ring::Q;
    if (name == "Z") return Ring::Z;
    if (name == "Fp") return Ring::Fp;
    throw std::invalid_argument("ring must be Q, Z or Fp");
}

ProjComplex complex_of(int a, int b, int m, const std::string& pi) {
    if (!pi.empty()) return build_P_pi(parse_partition(pi));
    return build_P_power(Root(a, b + 1), m);
}

}  // namespace

PYBIND11_MODULE(_klrcalc, mod) {
    mod.doc() = "KLR algebra standard module resolutions";

    mod.def(
        "resolve",
        [](int a, int b, int m, const std::string& pi) {
            return to_py(complex_json(complex_of(a, b, m, pi)));
        },
        py::arg("a") = 1, py::arg("b") = 1, py::arg("m") = 1,
        py::arg("pi") = "",
        "Projective resolution as {levels, boundaries}; pass a/b/m for a "
        "divided power of the root spanning vertices a..b+1, or pi as "
        "'[[lo,hi],mult],...'");

    mod.def(
        "character",
        [](int a, int b, int m, const std::string& pi, int cutoff) {
            StdModule mod_ = pi.empty() ? delta_power(Root(a, b + 1), m)
                                        : delta_pi(parse_partition(pi));
            return to_py(character_json(character(mod_, cutoff)));
        },
        py::arg("a") = 1, py::arg("b") = 1, py::arg("m") = 1,
        py::arg("pi") = "", py::arg("cutoff") = 12,
        "Graded character of the standard module as "
        "[{word, degree, dim}, ...]");

    mod.def(
        "ext",
        [](const std::string& pi, const std::string& sigma, int cutoff,
           const std::string& ring, int p) {
            auto kp = parse_partition(pi);
            auto ks = parse_partition(sigma);
            if (kp.weight() != ks.weight())
                throw std::invalid_argument("pi and sigma weights differ");
            return to_py(
                ext_json(ext_compute(kp, ks, cutoff, ring_of(ring), p)));
        },
        py::arg("pi"), py::arg("sigma"), py::arg("cutoff") = 12,
        py::arg("ring") = "Q", py::arg("p") = 0,
        "Ext table as [{n, degree, rank, torsion}, ...]");

    mod.def(
        "direct_hom",
        [](const std::string& pi, const std::string& sigma, int cutoff) {
            return direct_hom_dims(parse_partition(pi),
                                   parse_partition(sigma), cutoff);
        },
        py::arg("pi"), py::arg("sigma"), py::arg("cutoff") = 12,
        "Degreewise Hom dimensions from the resolution-free linear solve");

    mod.def(
        "verify",
        [](int a, int b, int m, int cutoff, const std::string& ring, int p) {
            Root al(a, b + 1);
            auto P = build_P_power(al, m);
            auto Q = build_Q(al, m);
            auto cmp = build_comparison(al, m);
            if (!check_d_squared(P).ok || !check_d_squared(Q).ok) return false;
            if (!check_chain_maps(P, Q, cmp).ok) return false;
            if (!check_splitting(al, m, cmp).ok) return false;
            Ring r = ring_of(ring);
            auto tab = homology_dims(P, cutoff, r, p);
            Character ch = character(delta_power(al, m), cutoff);
            for (auto& [key, dims] : tab.dims) {
                for (std::size_t n = 1; n < dims.size(); ++n)
                    if (dims[n] != 0) return false;
                if (dims[0] != ch.dim(key.first, key.second)) return false;
            }
            return true;
        },
        py::arg("a") = 1, py::arg("b") = 1, py::arg("m") = 1,
        py::arg("cutoff") = 8, py::arg("ring") = "Q", py::arg("p") = 0,
        "Run the symbolic certification checks and graded exactness for one "
        "divided power complex");

    mod.def(
        "lemma_suite",
        [](int max_d) {
            py::list out;
            for (auto& r : lemma_suite(max_d))
                out.append(py::make_tuple(r.name, r.ok, r.witness));
            return out;
        },
        py::arg("max_d") = 4,
        "Brute-force identity suite as (name, ok, witness) tuples");
}
