#include "cli.hpp"

#include "cob/case_studies.hpp"
#include "cob/fixtures.hpp"
#include "cob/oracle.hpp"
#include "cob/registry.hpp"

#include <json.hpp>

#include <sstream>

namespace cob::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("invalid " + what + ": '" + s + "'");
    return v;
}

std::string coords_text(const std::vector<Rational>& coords, int decimals) {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? " " : "") << exact::to_string(coords[i]);
    if (decimals >= 0) {
        os << "  ~";
        for (const auto& c : coords) os << " " << exact::to_decimal(c, decimals);
    }
    return os.str();
}

// Runs body, mapping input errors to exit code 2 with a one-line diagnostic.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const CobError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
}

const char* const kDefaultGroupoid[] = {"x",         "b:desc",    "b:asc", "r:desc:alt", "r:asc:alt",
                                        "t:desc:alt@+0", "pstar:desc@+0"};

}  // namespace

Descriptor parse_descriptor(const std::string& text) {
    Descriptor d;
    d.text = text;
    std::string body = text;
    auto at = body.find('@');
    if (at != std::string::npos) {
        std::string t = body.substr(at + 1);
        body = body.substr(0, at);
        if (t.empty()) throw UsageError("empty truncation source in '" + text + "'");
        if (t[0] == '+')
            d.trunc = families::TruncSource{false, parse_int(t.substr(1), "truncation offset")};
        else
            d.trunc = families::TruncSource{true, parse_int(t, "truncation degree")};
        if (d.trunc->value < 0) throw UsageError("truncation source must be non-negative in '" + text + "'");
    }
    auto parts = split(body, ':');
    if (parts.empty() || parts[0].empty()) throw UsageError("missing family in descriptor '" + text + "'");
    try {
        d.family = families::parse_family(parts[0]);
    } catch (const CobError& e) {
        throw UsageError(std::string(e.what()) + " (run 'cobtool list' for the families)");
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        if (p == "asc" || p == "desc") {
            if (d.orientation) throw UsageError("orientation given twice in '" + text + "'");
            d.orientation = p == "asc" ? Orientation::Ascending : Orientation::Descending;
        } else if (p == "alt") {
            d.alternating = true;
        } else if (p == "sup" || p == "sup+" || p == "sup-") {
            d.superposed = true;
            d.sup_sign = p == "sup-" ? -1 : 1;
        } else {
            throw UsageError("unknown descriptor modifier ':" + p + "' in '" + text + "'");
        }
    }
    if (d.alternating && d.superposed) throw UsageError("':alt' and ':sup' cannot be combined");
    if ((d.alternating || d.superposed) && !families::has_definite_parity(d.family))
        throw UsageError("alternation and superposition need a family with definite parity");
    if (d.trunc && !families::is_classical(d.family))
        throw UsageError("only classical families can be truncated ('" + text + "')");
    if (d.trunc && (d.alternating || d.superposed) && !(d.trunc->fixed == false && d.trunc->value == 0))
        throw UsageError("alternating and superposed bases truncate each element to its own window; use '@+0'");
    return d;
}

BasisSpec resolve(const Descriptor& d, int m, int n, int partner_step) {
    if (m < 0 || n < m) throw UsageError("window needs 0 <= m <= n (got m=" + std::to_string(m) +
                                         ", n=" + std::to_string(n) + ")");
    Orientation o = d.orientation.value_or(Orientation::Descending);
    BasisSpec spec;
    if (d.family == Family::Monomial) {
        spec = monomial_basis(m, n, partner_step);
    } else if (d.alternating) {
        spec = alternating_basis(d.family, o, m, n, d.trunc.has_value());
    } else if (d.superposed) {
        spec = superposed_basis(d.family, o, m, n, d.sup_sign, d.trunc.has_value());
    } else if (d.trunc) {
        spec = truncated_basis(d.family, o, m, n, *d.trunc);
    } else {
        spec = family_basis(d.family, o, m, n);
    }
    try {
        validate_basis(spec);
    } catch (const CobError& e) {
        std::string hint = families::is_classical(d.family) && !d.trunc ? " (append '@+0' to truncate)" : "";
        throw UsageError(std::string(e.what()) + hint);
    }
    return spec;
}

std::string grammar_help() {
    return "Basis descriptors: family[:asc|:desc][:alt][:sup|:sup-][@N|@+o]\n"
           "  family   x|monomial, b|bernstein, r|zernike, t|chebyshev-t, u|chebyshev-u,\n"
           "           v|chebyshev-v, p|legendre, pstar|shifted-legendre, l|laguerre, h|hermite\n"
           "  :asc     ascending basis (elements share the top degree n)\n"
           "  :desc    descending basis (elements share the bottom degree m); the default\n"
           "  :alt     alternating basis of a definite-parity family\n"
           "  :sup     superposed basis (:sup- uses the sign -1)\n"
           "  @N       truncate F_N to each element's degree window\n"
           "  @+o      truncate F_(top+o) to each element's degree window\n"
           "The window is given by --m (lowest degree) and --n (highest degree).\n";
}

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw UsageError("unknown format '" + name + "' (text, csv or json)");
}

int cmd_matrix(const MatrixRequest& req, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Descriptor from = parse_descriptor(req.from);
        Descriptor to = parse_descriptor(req.to);
        int step_from = from.family == Family::Monomial ? 0 : (from.alternating || from.superposed ? 1 : families::step(from.family));
        int step_to = to.family == Family::Monomial ? 0 : (to.alternating || to.superposed ? 1 : families::step(to.family));
        int step = std::max({step_from, step_to, 1});
        BasisSpec a = resolve(from, req.m, req.n, step);
        BasisSpec b = resolve(to, req.m, req.n, step);
        CobMatrix mat = registry::cob(a, b);
        switch (req.format) {
            case Format::Text: out << to_text(mat, req.decimals); break;
            case Format::Csv: out << to_csv(mat); break;
            case Format::Json: out << to_json(mat) << "\n"; break;
        }
        return static_cast<int>(Ok);
    });
}

int cmd_convert(const ConvertRequest& req, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Polynomial p = exact::parse_polynomial(req.polynomial);
        if (p.is_zero()) throw UsageError("the zero polynomial has no degree and cannot be converted");
        Descriptor to = parse_descriptor(req.to);
        std::vector<registry::CoordVector> parts;
        bool plain = !to.alternating && !to.superposed && !to.trunc;
        if (!req.n && !req.m && plain) {
            parts = registry::convert_parts(p, to.family, to.orientation.value_or(Orientation::Descending));
        } else {
            // Without an explicit window the tight window is used, which cuts the
            // lower-degree terms of classical elements.
            if (!req.n && !req.m && !to.trunc && families::is_classical(to.family) && p.min_degree() > 0)
                to.trunc = families::TruncSource{false, 0};
            int n = req.n.value_or(p.degree());
            int m = req.m.value_or(p.min_degree());
            int step = to.family == Family::Monomial && exact::poly_parity(p) != Parity::None && n > m ? 2 : 1;
            parts.push_back(registry::convert(p, resolve(to, m, n, step)));
        }
        if (req.format == Format::Json) {
            nlohmann::json j;
            j["polynomial"] = p.to_string();
            j["parts"] = nlohmann::json::array();
            for (const auto& v : parts) {
                nlohmann::json c = nlohmann::json::array();
                for (const auto& q : v.coords) c.push_back(exact::to_string(q));
                j["parts"].push_back({{"basis", describe(v.basis)}, {"coords", c}});
            }
            out << j.dump(2) << "\n";
        } else if (req.format == Format::Csv) {
            for (const auto& v : parts) {
                out << describe(v.basis);
                for (const auto& q : v.coords) out << "," << exact::to_string(q);
                out << "\n";
            }
        } else {
            for (const auto& v : parts) out << describe(v.basis) << ": " << coords_text(v.coords, req.decimals) << "\n";
        }
        return static_cast<int>(Ok);
    });
}

int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (req.suite == "fixtures") {
            int failed = 0;
            for (const auto& r : fixtures::check_all()) {
                if (!r.passed) ++failed;
                if (!r.passed || req.verbose)
                    out << (r.passed ? "PASS " : "FAIL ") << r.id << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
            }
            out << fixtures::all().size() - failed << "/" << fixtures::all().size() << " fixtures reproduced\n";
            return failed ? Failure : Ok;
        }
        if (req.suite == "groupoid") {
            std::vector<BasisSpec> specs;
            std::vector<std::string> names = req.bases;
            if (names.empty()) names.assign(std::begin(kDefaultGroupoid), std::end(kDefaultGroupoid));
            for (const auto& name : names) specs.push_back(resolve(parse_descriptor(name), req.m, req.n, 1));
            auto report = registry::verify_category(specs);
            int failed = 0;
            for (const auto& e : report.entries) {
                if (!e.passed) ++failed;
                if (!e.passed || req.verbose)
                    out << (e.passed ? "PASS " : "FAIL ") << e.law << (e.detail.empty() ? "" : " (" + e.detail + ")")
                        << "\n";
            }
            out << report.entries.size() - failed << "/" << report.entries.size() << " law checks passed over "
                << specs.size() << " bases\n";
            return failed ? Failure : Ok;
        }
        if (req.suite == "oracle") {
            if (req.max_n < 0) throw UsageError("--max-n must be non-negative");
            auto r = oracle::sweep(req.max_n);
            for (const auto& msg : r.messages) out << "FAIL " << msg << "\n";
            out << r.windows - r.failures << "/" << r.windows << " windows match the oracle (n <= " << req.max_n << ")\n";
            return r.ok() ? Ok : Failure;
        }
        throw UsageError("unknown suite '" + req.suite + "' (fixtures, groupoid or oracle)");
    });
}

int cmd_list(std::ostream& out) {
    struct Row {
        const char* name;
        const char* alias;
        Family family;
    };
    const Row rows[] = {{"monomial", "x", Family::Monomial},
                        {"bernstein", "b", Family::Bernstein},
                        {"zernike", "r", Family::ZernikeRadial},
                        {"chebyshev-t", "t", Family::ChebyshevT},
                        {"chebyshev-u", "u", Family::ChebyshevU},
                        {"chebyshev-v", "v", Family::ChebyshevV},
                        {"legendre", "p", Family::Legendre},
                        {"shifted-legendre", "pstar", Family::ShiftedLegendre},
                        {"laguerre", "l", Family::Laguerre},
                        {"hermite", "h", Family::HermitePhysicist}};
    for (const auto& r : rows) {
        out << r.name << " (" << r.alias << ")";
        if (families::has_definite_parity(r.family)) out << "  definite parity";
        if (families::is_classical(r.family)) out << "  truncatable";
        out << "\n";
    }
    out << "\n" << grammar_help();
    return Ok;
}

}  // namespace cob::cli
