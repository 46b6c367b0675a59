#include "cob/registry.hpp"

#include "cob/transforms.hpp"

#include <sstream>

namespace cob::registry {

namespace fam = families;

namespace {

constexpr auto Desc = Orientation::Descending;

CobMatrix expanded_hub(const BasisSpec& spec) {
    int size = basis_size(spec);
    auto polys = basis_polynomials(spec);
    if (static_cast<int>(polys.size()) != size) throw DomainError("basis size does not match its window");
    Grid g(size, std::vector<Rational>(size));
    for (int j = 0; j < size; ++j)
        for (const auto& [deg, c] : polys[j].terms()) {
            if (deg < spec.m || deg > spec.n || (deg - spec.m) % spec.d != 0)
                throw DomainError("basis element " + std::to_string(j) + " has a term of degree " +
                                  std::to_string(deg) + " outside the span");
            g[(deg - spec.m) / spec.d][j] = c;
        }
    return make_matrix(std::move(g));
}

bool is_identity(const CobMatrix& m) {
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            if (m.entries[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

CobMatrix inverse(const CobMatrix& m) {
    return detect_shape(m.entries) == Shape::Full ? invert_general(m) : invert_triangular(m);
}

Grid product(const Grid& a, const Grid& b) {
    int n = static_cast<int>(a.size());
    Grid g(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (int j = 0; j < n; ++j) g[i][j] += a[i][k] * b[k][j];
    return g;
}

}  // namespace

CobMatrix hub_matrix(const BasisSpec& spec) {
    CobMatrix out;
    bool plain = !spec.trunc && !spec.superposed && spec.family != Family::Custom;
    MatrixKind kind{spec.orientation, spec.orientation, spec.d == 2 ? ParityKind::Definite : ParityKind::NotDefinite};
    if (spec.family == Family::Monomial) {
        out = identity_matrix(basis_size(spec));
    } else if (plain && spec.family == Family::Bernstein) {
        out = build_matrix(kind, fam::cf_bernstein_to_monomial(), spec.n, spec.m);
    } else if (plain && spec.family == Family::ZernikeRadial && !spec.alternating) {
        out = build_matrix(kind, fam::cf_zernike_to_monomial(), spec.n, spec.m);
    } else if (plain && spec.family == Family::ZernikeRadial) {
        MatrixKind k1{spec.orientation, spec.orientation, ParityKind::NotDefinite};
        out = build_matrix(k1, alternating_cf(fam::cf_zernike_to_monomial(), spec.orientation), spec.n, spec.m);
    } else {
        out = expanded_hub(spec);
    }
    out.shape = detect_shape(out.entries);
    out.domain_basis = spec;
    out.range_basis = monomial_basis(spec.m, spec.n, spec.d);
    return out;
}

CobMatrix cob(const BasisSpec& from, const BasisSpec& to) {
    if (!same_span(from, to))
        throw DomainError("incompatible spans: " + describe(from) + " and " + describe(to));
    CobMatrix a = hub_matrix(from);
    CobMatrix b = inverse(hub_matrix(to));
    CobMatrix out = matmul(b, a);
    out.domain_basis = from;
    out.range_basis = to;
    return out;
}

CoordVector convert(const Polynomial& p, const BasisSpec& to) {
    if (p.is_zero()) throw DomainError("the zero polynomial has no degree and cannot be converted");
    for (const auto& [deg, c] : p.terms()) {
        if (deg > to.n) throw DomainError("degree " + std::to_string(deg) + " exceeds the span's maximum degree " +
                                          std::to_string(to.n));
        if (deg < to.m) throw DomainError("degree " + std::to_string(deg) + " is below the span's minimum degree " +
                                          std::to_string(to.m));
        if ((deg - to.m) % to.d != 0)
            throw DomainError("degree " + std::to_string(deg) + " has the wrong parity for a span of " +
                              exact::to_string(to.m % 2 ? Parity::Odd : Parity::Even) + " degrees");
    }
    int size = basis_size(to);
    std::vector<Rational> mono(size);
    for (const auto& [deg, c] : p.terms()) mono[(deg - to.m) / to.d] = c;
    CobMatrix inv = inverse(hub_matrix(to));
    CoordVector v;
    v.basis = to;
    v.coords.assign(size, Rational(0));
    for (int i = 0; i < size; ++i)
        for (int k = 0; k < size; ++k) v.coords[i] += inv.entries[i][k] * mono[k];
    return v;
}

Polynomial reconstruct(const CoordVector& v) {
    auto polys = basis_polynomials(v.basis);
    if (polys.size() != v.coords.size()) throw DomainError("coordinate vector length does not match its basis");
    Polynomial p;
    for (std::size_t j = 0; j < polys.size(); ++j) p += polys[j] * v.coords[j];
    return p;
}

std::vector<CoordVector> convert_parts(const Polynomial& p, Family family, Orientation o, bool strict) {
    if (p.is_zero()) throw DomainError("the zero polynomial has no degree and cannot be converted");
    std::vector<Polynomial> parts;
    if (fam::has_definite_parity(family) && exact::poly_parity(p) == Parity::None) {
        if (strict) throw DomainError("polynomial has no definite parity but the target family does");
        auto [even, odd] = exact::poly_split_parity(p);
        parts = {even, odd};
    } else {
        parts = {p};
    }
    std::vector<CoordVector> out;
    for (const auto& part : parts) {
        BasisSpec spec = family_basis(family, o, part.min_degree(), part.degree());
        if (family == Family::Monomial && exact::poly_parity(part) != Parity::None && part.degree() > part.min_degree())
            spec.d = 2;
        // Classical elements carry lower-degree terms that a raised window must cut off.
        if (fam::is_classical(family) && spec.m >= spec.d) spec.trunc = fam::TruncSource{false, 0};
        out.push_back(convert(part, spec));
    }
    return out;
}

bool LawReport::all_passed() const {
    for (const auto& e : entries)
        if (!e.passed) return false;
    return true;
}

std::string LawReport::to_string() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.passed ? "PASS " : "FAIL ") << e.law;
        if (!e.detail.empty()) os << " (" << e.detail << ")";
        os << "\n";
    }
    return os.str();
}

LawReport verify_category(const std::vector<BasisSpec>& bases) {
    LawReport r;
    auto add = [&](std::string law, bool ok, std::string detail = "") {
        r.entries.push_back({std::move(law), ok, std::move(detail)});
    };
    int count = static_cast<int>(bases.size());
    for (int a = 0; a < count; ++a)
        add("identity " + describe(bases[a]), is_identity(cob(bases[a], bases[a])));
    if (count < 2) return r;

    std::vector<std::vector<CobMatrix>> m(count);
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) m[a].push_back(cob(bases[a], bases[b]));

    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) {
            if (a == b) continue;
            std::string pair = describe(bases[a]) + " -> " + describe(bases[b]);
            add("inverse " + pair, is_identity(matmul(m[b][a], m[a][b])));
            const BasisSpec& x = bases[a];
            const BasisSpec& y = bases[b];
            bool plain = !x.alternating && !y.alternating && !x.superposed && !y.superposed &&
                         x.family != Family::Custom && y.family != Family::Custom;
            bool mono = x.family == Family::Monomial || y.family == Family::Monomial;
            if (plain && (x.orientation == y.orientation || mono)) {
                Orientation o = x.family == Family::Monomial ? y.orientation : x.orientation;
                Shape s = detect_shape(m[a][b].entries);
                bool ok = o == Desc ? (s == Shape::UpperTri || s == Shape::AltUpper)
                                    : (s == Shape::LowerTri || s == Shape::AltLower);
                add("triangularity " + pair, ok || m[a][b].dim == 1, to_string(s));
            }
            if (x.alternating && y.alternating && x.orientation == y.orientation) {
                Shape s = detect_shape(m[a][b].entries);
                add("alternation " + pair, s == Shape::AltUpper || s == Shape::AltLower || m[a][b].dim == 1,
                    to_string(s));
            }
        }

    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
            for (int c = 0; c < count; ++c) {
                if (a == b || b == c || a == c) continue;
                std::string triple = describe(bases[a]) + " -> " + describe(bases[b]) + " -> " + describe(bases[c]);
                add("closure " + triple, matmul(m[b][c], m[a][b]) == m[a][c]);
                bool assoc = matmul(matmul(m[c][a], m[b][c]), m[a][b]) == matmul(m[c][a], matmul(m[b][c], m[a][b]));
                add("associativity " + triple, assoc);

                const CobMatrix& f = m[a][b];
                const CobMatrix& g = m[b][c];
                Shape sf = detect_shape(f.entries), sg = detect_shape(g.entries);
                bool up = (sf == Shape::UpperTri || sf == Shape::AltUpper) && (sg == Shape::UpperTri || sg == Shape::AltUpper);
                bool lo = (sf == Shape::LowerTri || sf == Shape::AltLower) && (sg == Shape::LowerTri || sg == Shape::AltLower);
                if (!(up || lo) || f.dim < 2) continue;
                bool ok = true;
                std::string detail;
                for (int k1 = 0; k1 < f.dim && ok; ++k1)
                    for (int k2 = 0; k1 + k2 < f.dim && ok; ++k2) {
                        if (k1 + k2 == 0) continue;
                        auto t = [&](const CobMatrix& x) { return transforms::truncate_matrix(x, k1, k2); };
                        CobMatrix tgf = t(matmul(g, f));
                        if (!(product(t(g).entries, t(f).entries) == tgf.entries)) {
                            ok = false;
                            detail = "T(gf) != T(g)T(f) at k1=" + std::to_string(k1) + ", k2=" + std::to_string(k2);
                        } else if (!is_identity(t(m[a][a]))) {
                            ok = false;
                            detail = "T(id) is not the identity";
                        } else if (!(invert_triangular(t(f)).entries == t(invert_triangular(f)).entries)) {
                            ok = false;
                            detail = "T(f^-1) != T(f)^-1 at k1=" + std::to_string(k1) + ", k2=" + std::to_string(k2);
                        }
                    }
                add("truncation functor " + triple, ok, detail);
            }
    return r;
}

BasisId Registry::add(const BasisSpec& spec) {
    validate_basis(spec);
    std::lock_guard<std::mutex> lock(mu_);
    specs_.push_back(spec);
    return static_cast<BasisId>(specs_.size() - 1);
}

BasisSpec Registry::spec(BasisId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (id < 0 || id >= static_cast<BasisId>(specs_.size())) throw DomainError("unknown basis id");
    return specs_[id];
}

std::size_t Registry::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return specs_.size();
}

CobMatrix Registry::cob(BasisId from, BasisId to) const { return registry::cob(spec(from), spec(to)); }

CoordVector Registry::convert(const Polynomial& p, BasisId to) const { return registry::convert(p, spec(to)); }

LawReport Registry::verify_category(const std::vector<BasisId>& ids) const {
    std::vector<BasisSpec> specs;
    for (BasisId id : ids) specs.push_back(spec(id));
    return registry::verify_category(specs);
}

}  // namespace cob::registry
