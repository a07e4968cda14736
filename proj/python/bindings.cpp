#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kinn/bijection.hpp"
#include "kinn/catalan.hpp"
#include "kinn/enumerate.hpp"
#include "kinn/render.hpp"
#include "kinn/serialize.hpp"
#include "kinn/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace py = pybind11;

namespace {

// Counts cross into Python as exact ints via their decimal form.
py::object to_pyint(const kinn::Count& c) {
    const std::string s = c.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_fraction(const kinn::Ratio& r) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_pyint(r.num()), to_pyint(r.den()));
}

kinn::Dissection parse_dissection(const std::string& text) {
    auto parsed = kinn::parse(text);
    if (auto* d = std::get_if<kinn::Dissection>(&parsed)) return *d;
    return std::get<kinn::KInN>(parsed).dissection();
}

kinn::KInN parse_marked(const std::string& text) {
    auto parsed = kinn::parse(text);
    if (auto* x = std::get_if<kinn::KInN>(&parsed)) return *x;
    throw std::invalid_argument("expected a serialization with a marked_face");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact counting, enumeration and verification of polygon dissections";

    m.def(
        "catalan", [](long long n) { return to_pyint(kinn::catalan(n)); }, py::arg("n"));
    m.def(
        "binomial", [](long long n, long long k) { return to_pyint(kinn::binomial(n, k)); },
        py::arg("n"), py::arg("k"));
    m.def(
        "f_closed", [](int k, int n) { return to_pyint(kinn::f_closed(k, n)); }, py::arg("k"),
        py::arg("n"));
    m.def(
        "convolution_lhs", [](int k, int n) { return to_pyint(kinn::convolution_lhs(k, n)); },
        py::arg("k"), py::arg("n"));
    m.def(
        "convolution_rhs", [](int k, int n) { return to_pyint(kinn::convolution_rhs(k, n)); },
        py::arg("k"), py::arg("n"));
    m.def(
        "weighted_catalan_sum", [](int n) { return to_pyint(kinn::weighted_catalan_sum(n)); },
        py::arg("n"));
    m.def(
        "lemma_pq_sum", [](int p, int q) { return to_pyint(kinn::lemma_pq_sum(p, q)); },
        py::arg("p"), py::arg("q"));
    m.def(
        "average_cycles_closed",
        [](int k, int n) { return to_fraction(kinn::average_cycles_closed(k, n)); }, py::arg("k"),
        py::arg("n"));
    m.def(
        "average_cycles_bruteforce",
        [](int k, int n) { return to_fraction(kinn::average_cycles_bruteforce(k, n)); },
        py::arg("k"), py::arg("n"));
    m.def(
        "count_k_in_n", [](int k, int n) { return to_pyint(kinn::count_k_in_n_bruteforce(k, n)); },
        py::arg("k"), py::arg("n"));

    m.def(
        "triangulations",
        [](int n, std::optional<std::uint64_t> limit) {
            std::vector<std::string> lines;
            if (limit && *limit == 0) return lines;
            kinn::enumerate_triangulations(n, [&](const kinn::Triangulation& t) {
                lines.push_back(kinn::serialize(t));
                return !limit || lines.size() < *limit;
            });
            return lines;
        },
        py::arg("n"), py::arg("limit") = py::none());
    m.def(
        "k_in_n_dissections",
        [](int k, int n, std::optional<std::uint64_t> limit) {
            std::vector<std::string> lines;
            if (limit && *limit == 0) return lines;
            kinn::enumerate_k_in_n(k, n, [&](const kinn::KInN& x) {
                lines.push_back(kinn::serialize(x));
                return !limit || lines.size() < *limit;
            });
            return lines;
        },
        py::arg("k"), py::arg("n"), py::arg("limit") = py::none());
    m.def(
        "count_k_cycles",
        [](const std::string& text, int k) {
            return to_pyint(kinn::count_k_cycles(parse_dissection(text), k));
        },
        py::arg("triangulation"), py::arg("k"));

    m.def(
        "canonicalize",
        [](const std::string& text) {
            auto parsed = kinn::parse(text);
            return std::visit([](const auto& value) { return kinn::serialize(value); }, parsed);
        },
        py::arg("text"));
    m.def(
        "render_svg", [](const std::string& text) {
            auto parsed = kinn::parse(text);
            return std::visit([](const auto& value) { return kinn::render_svg(value); }, parsed);
        },
        py::arg("text"));

    m.def(
        "vertex_decomposition",
        [](const std::string& text, int v) {
            const kinn::VertexMarkedKInN marked(parse_marked(text), v);
            return kinn::serialize(kinn::vertex_mark_forward(marked));
        },
        py::arg("text"), py::arg("v"));
    m.def(
        "diagonal_decomposition",
        [](const std::string& text, int a, int b) {
            const kinn::DiagonalMarkedKInN marked(parse_marked(text), kinn::Diagonal(a, b));
            return kinn::serialize(kinn::diagonal_mark_forward(marked));
        },
        py::arg("text"), py::arg("a"), py::arg("b"));

    m.def(
        "verify_json",
        [](const std::string& identity, std::optional<int> n_max, std::optional<int> k_max,
           std::optional<int> q_max) {
            kinn::VerifyRange range;
            range.n_max = n_max;
            range.k_max = k_max;
            range.q_max = q_max;
            return kinn::report_json(kinn::verify_identity(kinn::identity_from_string(identity), range));
        },
        py::arg("identity"), py::arg("n_max") = py::none(), py::arg("k_max") = py::none(),
        py::arg("q_max") = py::none());

    m.def("identities", [] {
        std::vector<std::string> names;
        for (kinn::Identity id : kinn::all_identities()) names.push_back(kinn::to_string(id));
        return names;
    });
}
