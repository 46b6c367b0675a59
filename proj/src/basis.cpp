#include "cob/basis.hpp"

#include <sstream>
#include <utility>

namespace cob {

using families::TruncSource;

std::string to_string(Orientation o) { return o == Orientation::Ascending ? "asc" : "desc"; }

int basis_size(const BasisSpec& spec) { return (spec.n - spec.m) / spec.d + 1; }

bool same_span(const BasisSpec& a, const BasisSpec& b) { return a.m == b.m && a.n == b.n && a.d == b.d; }

namespace {

void check_window(int m, int n, int d) {
    if (m < 0 || n < m) throw DomainError("basis window requires 0 <= m <= n");
    if (d != 1 && d != 2) throw DomainError("basis step must be 1 or 2");
    if (d == 2 && (n - m) % 2 != 0) throw DomainError("a step-2 window needs m and n of equal parity");
}

Polynomial classical_element(const BasisSpec& spec, int top, int bottom) {
    if (!spec.trunc) return families::classical_poly(spec.family, top);
    int s = spec.trunc->fixed ? spec.trunc->value : top + spec.trunc->value;
    if (s < top) throw DomainError("truncation source degree below the element's top degree");
    return exact::poly_truncate(families::classical_poly(spec.family, s), top, bottom);
}

Polynomial element(const BasisSpec& spec, int top, int bottom) {
    switch (spec.family) {
        case Family::Monomial: return Polynomial::monomial(spec.orientation == Orientation::Ascending ? bottom : top);
        case Family::Bernstein: return families::bernstein_poly(top, bottom);
        case Family::ZernikeRadial: return families::zernike_poly(top, bottom);
        default: return classical_element(spec, top, bottom);
    }
}

// Same parity as p, chosen from {a, a+1}.
int matching(int a, int p) { return ((a - p) % 2 == 0) ? a : a + 1; }
// Same parity as p, chosen from {a, a-1}.
int matching_down(int a, int p) { return ((a - p) % 2 == 0) ? a : a - 1; }

std::vector<Polynomial> alternating_elements(const BasisSpec& spec) {
    std::vector<Polynomial> out;
    for (int j = 0; j <= spec.n - spec.m; ++j) {
        if (spec.orientation == Orientation::Descending) {
            int top = spec.m + j;
            out.push_back(element(spec, top, matching(spec.m, top)));
        } else {
            int bottom = spec.m + j;
            out.push_back(element(spec, matching_down(spec.n, bottom), bottom));
        }
    }
    return out;
}

int rank(std::vector<std::vector<Rational>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace

BasisSpec monomial_basis(int m, int n, int d) {
    check_window(m, n, d);
    BasisSpec s;
    s.family = Family::Monomial;
    s.m = m;
    s.n = n;
    s.d = d;
    return s;
}

BasisSpec family_basis(Family f, Orientation o, int m, int n) {
    if (f == Family::Custom) throw DomainError("use custom_basis for explicit polynomials");
    int d = families::step(f);
    check_window(m, n, d);
    BasisSpec s;
    s.family = f;
    s.orientation = o;
    s.m = m;
    s.n = n;
    s.d = d;
    return s;
}

BasisSpec truncated_basis(Family f, Orientation o, int m, int n, TruncSource src) {
    if (!families::is_classical(f)) throw DomainError("only classical families can be truncated");
    BasisSpec s = family_basis(f, o, m, n);
    s.trunc = src;
    return s;
}

BasisSpec alternating_basis(Family f, Orientation o, int m, int n, bool truncate) {
    if (!families::has_definite_parity(f)) throw DomainError("alternation needs a family with definite parity");
    check_window(m, n, 1);
    BasisSpec s;
    s.family = f;
    s.orientation = o;
    s.m = m;
    s.n = n;
    s.d = 1;
    s.alternating = true;
    if (truncate) {
        if (!families::is_classical(f)) throw DomainError("only classical families can be truncated");
        s.trunc = TruncSource{false, 0};
    }
    return s;
}

BasisSpec superposed_basis(Family f, Orientation o, int m, int n, int sign, bool truncate) {
    if (sign != 1 && sign != -1) throw DomainError("superposition sign must be +1 or -1");
    BasisSpec s = alternating_basis(f, o, m, n, truncate);
    s.alternating = false;
    s.superposed = true;
    s.sup_sign = sign;
    return s;
}

BasisSpec custom_basis(std::vector<Polynomial> polys, Orientation o, std::string label) {
    if (polys.empty()) throw DomainError("a custom basis needs at least one polynomial");
    int lo = -1, hi = -1;
    bool all_same_parity = true;
    int parity = -1;
    for (const auto& p : polys) {
        if (p.is_zero()) throw DomainError("a basis cannot contain the zero polynomial");
        for (const auto& [deg, c] : p.terms()) {
            if (lo < 0 || deg < lo) lo = deg;
            if (deg > hi) hi = deg;
            if (parity < 0) parity = deg % 2;
            if (deg % 2 != parity) all_same_parity = false;
        }
    }
    BasisSpec s;
    s.family = Family::Custom;
    s.orientation = o;
    s.m = lo;
    s.n = hi;
    s.d = (all_same_parity && hi > lo) ? 2 : 1;
    s.custom = std::move(polys);
    s.label = std::move(label);
    return s;
}

std::vector<Polynomial> basis_polynomials(const BasisSpec& spec) {
    check_window(spec.m, spec.n, spec.d);
    if (spec.family == Family::Custom) return spec.custom;
    if (spec.alternating || spec.superposed) {
        auto alt = alternating_elements(spec);
        if (!spec.superposed) return alt;
        std::vector<Polynomial> out(alt.size());
        int last = static_cast<int>(alt.size()) - 1;
        Rational s = spec.sup_sign;
        for (int j = 0; j <= last; ++j) {
            if (spec.orientation == Orientation::Descending)
                out[j] = j == 0 ? alt[0] : alt[j] + alt[j - 1] * s;
            else
                out[j] = j == last ? alt[last] : alt[j] + alt[j + 1] * s;
        }
        return out;
    }
    std::vector<Polynomial> out;
    for (int j = 0; j < basis_size(spec); ++j) {
        int step = spec.m + spec.d * j;
        if (spec.orientation == Orientation::Descending)
            out.push_back(element(spec, step, spec.m));
        else
            out.push_back(element(spec, spec.n, step));
    }
    return out;
}

void validate_basis(const BasisSpec& spec) {
    check_window(spec.m, spec.n, spec.d);
    if (spec.d != families::step(spec.family) && !spec.alternating && !spec.superposed &&
        spec.family != Family::Custom && spec.family != Family::Monomial)
        throw DomainError("basis step does not match the family's parity");
    auto polys = basis_polynomials(spec);
    int size = basis_size(spec);
    if (static_cast<int>(polys.size()) != size)
        throw DomainError("basis has " + std::to_string(polys.size()) + " elements but the window needs " +
                          std::to_string(size));
    std::vector<std::vector<Rational>> rows(size, std::vector<Rational>(size));
    for (int j = 0; j < size; ++j) {
        for (const auto& [deg, c] : polys[j].terms()) {
            if (deg < spec.m || deg > spec.n || (deg - spec.m) % spec.d != 0)
                throw DomainError("basis element " + std::to_string(j) + " has a term of degree " +
                                  std::to_string(deg) + " outside the span");
            rows[(deg - spec.m) / spec.d][j] = c;
        }
    }
    if (rank(rows) != size) throw DomainError("basis elements are linearly dependent");
}

std::string describe(const BasisSpec& spec) {
    std::ostringstream os;
    os << (spec.family == Family::Custom ? spec.label : families::to_string(spec.family));
    if (spec.family != Family::Monomial) os << ":" << to_string(spec.orientation);
    if (spec.alternating) os << ":alt";
    if (spec.superposed) os << (spec.sup_sign < 0 ? ":sup-" : ":sup");
    if (spec.trunc) {
        if (spec.trunc->fixed)
            os << "@" << spec.trunc->value;
        else
            os << "@+" << spec.trunc->value;
    }
    os << "[" << spec.m << ".." << spec.n;
    if (spec.d == 2) os << "/2";
    os << "]";
    return os.str();
}

}  // namespace cob
