// Python bindings. Rationals cross the boundary as exact "p/q" strings.
#include "cli.hpp"
#include "cob/case_studies.hpp"
#include "cob/fixtures.hpp"
#include "cob/oracle.hpp"
#include "cob/registry.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace cob;

namespace {

using StrGrid = std::vector<std::vector<std::string>>;

StrGrid to_strings(const Grid& g) {
    StrGrid out;
    for (const auto& row : g) {
        std::vector<std::string> r;
        for (const auto& q : row) r.push_back(exact::to_string(q));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& q : v) out.push_back(exact::to_string(q));
    return out;
}

BasisSpec basis(const std::string& descriptor, int m, int n, int partner_step = 1) {
    return cli::resolve(cli::parse_descriptor(descriptor), m, n, partner_step);
}

int partner_step(const std::string& a, const std::string& b) {
    int step = 1;
    for (const auto& s : {a, b}) {
        auto d = cli::parse_descriptor(s);
        if (d.family != Family::Monomial && !d.alternating && !d.superposed) step = std::max(step, families::step(d.family));
    }
    return step;
}

py::dict coord_dict(const registry::CoordVector& v) {
    py::dict d;
    d["basis"] = describe(v.basis);
    d["coords"] = to_strings(v.coords);
    return d;
}

}  // namespace

PYBIND11_MODULE(_cob, m) {
    m.doc() = "Exact change-of-basis matrices between polynomial bases";

    py::register_exception<CobError>(m, "CobError", PyExc_ValueError);
    py::register_exception<cli::UsageError>(m, "UsageError", PyExc_ValueError);

    m.def("grammar", &cli::grammar_help, "Describe the basis descriptor grammar.");

    m.def(
        "describe",
        [](const std::string& descriptor, int m_, int n) { return describe(basis(descriptor, m_, n)); },
        py::arg("descriptor"), py::arg("m"), py::arg("n"), "Resolve a descriptor on the window [m, n].");

    m.def(
        "parse_polynomial",
        [](const std::string& text) { return exact::to_pairs(exact::parse_polynomial(text)); }, py::arg("text"),
        "Parse a polynomial in x into ascending (degree, 'p/q') pairs.");

    m.def(
        "basis_polynomials",
        [](const std::string& descriptor, int m_, int n) {
            std::vector<std::string> out;
            for (const auto& p : basis_polynomials(basis(descriptor, m_, n))) out.push_back(p.to_string());
            return out;
        },
        py::arg("descriptor"), py::arg("m"), py::arg("n"), "The elements of a basis, in order.");

    m.def(
        "matrix",
        [](const std::string& from, const std::string& to, int n, int m_) {
            int step = partner_step(from, to);
            return to_strings(registry::cob(basis(from, m_, n, step), basis(to, m_, n, step)).entries);
        },
        py::arg("from_basis"), py::arg("to_basis"), py::arg("n"), py::arg("m") = 0,
        "Change-of-basis matrix; column j holds the coordinates of element j of from_basis.");

    m.def(
        "convert",
        [](const std::string& poly, const std::string& to, std::optional<int> n, std::optional<int> m_) {
            Polynomial p = exact::parse_polynomial(poly);
            auto d = cli::parse_descriptor(to);
            py::list out;
            if (!n && !m_ && !d.alternating && !d.superposed && !d.trunc) {
                for (const auto& v : registry::convert_parts(p, d.family, d.orientation.value_or(Orientation::Descending)))
                    out.append(coord_dict(v));
                return out;
            }
            if (p.is_zero()) throw CobError("the zero polynomial has no degree and cannot be converted");
            if (!n && !m_ && !d.trunc && families::is_classical(d.family) && p.min_degree() > 0)
                d.trunc = families::TruncSource{false, 0};
            int hi = n.value_or(p.degree()), lo = m_.value_or(p.min_degree());
            int step = d.family == Family::Monomial && exact::poly_parity(p) != Parity::None && hi > lo ? 2 : 1;
            out.append(coord_dict(registry::convert(p, cli::resolve(d, lo, hi, step))));
            return out;
        },
        py::arg("polynomial"), py::arg("to_basis"), py::arg("n") = py::none(), py::arg("m") = py::none(),
        "Coordinates of a polynomial; split into parity parts when the family needs it.");

    m.def(
        "reconstruct",
        [](const std::string& descriptor, int m_, int n, const std::vector<std::string>& coords) {
            registry::CoordVector v;
            v.basis = basis(descriptor, m_, n);
            for (const auto& c : coords) v.coords.push_back(exact::parse_rational(c));
            return registry::reconstruct(v).to_string();
        },
        py::arg("descriptor"), py::arg("m"), py::arg("n"), py::arg("coords"), "Polynomial from basis coordinates.");

    m.def(
        "verify_groupoid",
        [](const std::vector<std::string>& descriptors, int m_, int n) {
            std::vector<BasisSpec> specs;
            for (const auto& d : descriptors) specs.push_back(basis(d, m_, n));
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& e : registry::verify_category(specs).entries) out.emplace_back(e.law, e.passed, e.detail);
            return out;
        },
        py::arg("descriptors"), py::arg("m"), py::arg("n"), "Identity, inverse, closure and functor law checks.");

    m.def(
        "fixtures",
        [] {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& r : fixtures::check_all()) out.emplace_back(r.id, r.passed, r.detail);
            return out;
        },
        "Check every reference matrix.");

    m.def(
        "oracle_sweep",
        [](int max_n, const std::string& filter) {
            auto r = oracle::sweep(max_n, filter);
            return std::make_tuple(r.windows, r.failures, r.messages);
        },
        py::arg("max_n"), py::arg("filter") = "", "Formula versus brute-force matrices for all windows up to max_n.");

    m.def(
        "lb_matrix", [](int n) { return to_strings(case_studies::lb_matrix(n).entries); }, py::arg("n"),
        "Shifted Legendre to ascending Bernstein matrix of degree n.");
    m.def(
        "lb_element", [](int n, int i, int j) { return exact::to_string(case_studies::lb_element(n, i, j)); },
        py::arg("n"), py::arg("i"), py::arg("j"));
    m.def(
        "alqudah_coeff", [](int n, int k) { return exact::to_string(case_studies::alqudah_coeff(n, k)); },
        py::arg("n"), py::arg("k"), "Coefficient of b^n_(n-k) in U_n(2x - 1).");
}
