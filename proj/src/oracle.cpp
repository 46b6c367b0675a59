#include "cob/oracle.hpp"

#include <sstream>

namespace cob::oracle {

using families::CoeffFn;
using families::TruncSource;
namespace fam = families;

std::string OracleReport::to_string() const {
    if (matched) return "matched";
    std::ostringstream os;
    os << "mismatch";
    if (first_mismatch)
        os << " at (" << first_mismatch->i << ", " << first_mismatch->j << "): expected "
           << first_mismatch->expected.get_str() << ", got " << first_mismatch->got.get_str();
    return os.str();
}

Grid monomial_coordinates(const std::vector<Polynomial>& polys, const BasisSpec& span) {
    int size = basis_size(span);
    Grid g(size, std::vector<Rational>(polys.size()));
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (const auto& [deg, c] : polys[j].terms()) {
            if (deg < span.m || deg > span.n || (deg - span.m) % span.d != 0)
                throw DomainError("term of degree " + std::to_string(deg) + " lies outside the span [" +
                                  std::to_string(span.m) + ".." + std::to_string(span.n) + "]");
            g[(deg - span.m) / span.d][j] = c;
        }
    return g;
}

CobMatrix oracle_matrix(const BasisSpec& from, const BasisSpec& to) {
    if (!same_span(from, to)) throw DomainError("oracle_matrix: the bases span different spaces");
    CobMatrix t = make_matrix(monomial_coordinates(basis_polynomials(to), to));
    Grid f = monomial_coordinates(basis_polynomials(from), to);
    Shape ts = detect_shape(t.entries);
    bool triangular = ts != Shape::Full;
    Grid tinv = (triangular ? invert_triangular(t) : invert_general(t)).entries;
    int n = t.dim;
    Grid c(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (tinv[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (f[k][j] != 0) c[i][j] += tinv[i][k] * f[k][j];
        }
    CobMatrix out = make_matrix(std::move(c));
    out.shape = detect_shape(out.entries);
    out.domain_basis = from;
    out.range_basis = to;
    return out;
}

OracleReport compare(const CobMatrix& formula, const CobMatrix& oracle) {
    if (formula.dim != oracle.dim) throw DomainError("compare: dimension mismatch");
    OracleReport r;
    for (int i = 0; i < formula.dim; ++i)
        for (int j = 0; j < formula.dim; ++j)
            if (formula.entries[i][j] != oracle.entries[i][j]) {
                r.matched = false;
                r.first_mismatch = Mismatch{i, j, oracle.entries[i][j], formula.entries[i][j]};
                return r;
            }
    return r;
}

namespace {

constexpr auto Asc = Orientation::Ascending;
constexpr auto Desc = Orientation::Descending;
constexpr auto NP = ParityKind::NotDefinite;
constexpr auto DP = ParityKind::Definite;

bool any(int, int) { return true; }
bool same_parity(int m, int n) { return (n - m) % 2 == 0; }

BasisSpec mono(int m, int n) { return monomial_basis(m, n, 1); }
BasisSpec mono2(int m, int n) { return monomial_basis(m, n, 2); }

BasisSpec trunc_desc(Family f, int m, int n) { return truncated_basis(f, Desc, m, n, TruncSource{false, 0}); }
BasisSpec trunc_asc(Family f, int m, int n) { return truncated_basis(f, Asc, m, n, TruncSource{true, n}); }

CoeffFn trunc_asc_cf(Family f, int n) {
    return fam::cf_truncated(fam::cf_classical_to_monomial(f), TruncSource{true, n});
}

// Shifted Chebyshev U (U_k(2x - 1)), k = 0..n, as a custom descending basis.
BasisSpec shifted_u_basis(int, int n) {
    std::vector<Polynomial> polys;
    for (int k = 0; k <= n; ++k)
        polys.push_back(exact::poly_compose_affine(fam::classical_poly(Family::ChebyshevU, k), 2, -1));
    return custom_basis(std::move(polys), Desc, "shifted-chebyshev-u");
}

Binding simple(std::string name, MatrixKind kind, std::function<bool(int, int)> valid,
               std::function<CoeffFn(int, int)> cf, std::function<BasisSpec(int, int)> from,
               std::function<BasisSpec(int, int)> to) {
    Binding b;
    b.name = std::move(name);
    b.kind = kind;
    b.valid = std::move(valid);
    b.formula = [kind, cf](int m, int n) { return build_matrix(kind, cf(m, n), n, m); };
    b.from = std::move(from);
    b.to = std::move(to);
    return b;
}

Binding composed(std::string name, MatrixKind kind, std::function<bool(int, int)> valid,
                 std::function<CoeffFn(int, int)> cf1, std::function<CoeffFn(int, int)> cf2,
                 std::function<BasisSpec(int, int)> from, std::function<BasisSpec(int, int)> to) {
    Binding b;
    b.name = std::move(name);
    b.kind = kind;
    b.valid = std::move(valid);
    b.formula = [kind, cf1, cf2](int m, int n) {
        CoeffFn c = compose_cf(kind, cf1(m, n), cf2(m, n), Window{m, n});
        return kind.mixed() ? build_mixed_matrix(kind, c, n, m) : build_matrix(kind, c, n, m);
    };
    b.from = std::move(from);
    b.to = std::move(to);
    return b;
}

template <class F>
std::function<CoeffFn(int, int)> fixed(F make) {
    return [make](int, int) { return make(); };
}

std::vector<Binding> make_catalogue() {
    std::vector<Binding> c;
    const MatrixKind dd{Desc, Desc, NP}, aa{Asc, Asc, NP}, ddp{Desc, Desc, DP}, aap{Asc, Asc, DP};
    const MatrixKind da{Desc, Asc, NP}, ad{Asc, Desc, NP}, dap{Desc, Asc, DP}, adp{Asc, Desc, DP};

    auto bern = [](Orientation o) { return [o](int m, int n) { return family_basis(Family::Bernstein, o, m, n); }; };
    auto zern = [](Orientation o) {
        return [o](int m, int n) { return family_basis(Family::ZernikeRadial, o, m, n); };
    };

    // Bernstein.
    c.push_back(simple("bernstein->monomial desc", dd, any, fixed(fam::cf_bernstein_to_monomial), bern(Desc), mono));
    c.push_back(simple("bernstein->monomial asc", aa, any, fixed(fam::cf_bernstein_to_monomial), bern(Asc), mono));
    c.push_back(simple("monomial->bernstein asc", aa, any, fixed(fam::cf_monomial_to_bernstein_asc), mono, bern(Asc)));
    c.push_back(
        simple("monomial->bernstein desc", dd, any, fixed(fam::cf_monomial_to_bernstein_desc), mono, bern(Desc)));

    // Zernike radial.
    c.push_back(
        simple("zernike->monomial desc", ddp, same_parity, fixed(fam::cf_zernike_to_monomial), zern(Desc), mono2));
    c.push_back(
        simple("zernike->monomial asc", aap, same_parity, fixed(fam::cf_zernike_to_monomial), zern(Asc), mono2));
    c.push_back(simple("monomial->zernike desc", ddp, same_parity, fixed(fam::cf_monomial_to_zernike_desc), mono2,
                       zern(Desc)));
    c.push_back(simple("monomial->zernike asc", aap, same_parity, fixed(fam::cf_monomial_to_zernike_asc), mono2,
                       zern(Asc)));
    c.push_back(simple("monomial->zernike desc (jacobi route)", ddp, same_parity,
                       fixed(fam::cf_monomial_to_zernike_asc_jacobi), mono2, zern(Desc)));

    // Laguerre, shifted Legendre, Chebyshev V, shifted Chebyshev U.
    c.push_back(simple("laguerre->monomial desc", dd, any, fixed([] { return fam::cf_laguerre().first; }),
                       [](int m, int n) { return trunc_desc(Family::Laguerre, m, n); }, mono));
    c.push_back(simple("monomial->laguerre desc", dd, any, fixed([] { return fam::cf_laguerre().second; }), mono,
                       [](int m, int n) { return trunc_desc(Family::Laguerre, m, n); }));
    c.push_back(simple("shifted-legendre->monomial desc", dd, any, fixed(fam::cf_shifted_legendre_to_monomial),
                       [](int m, int n) { return trunc_desc(Family::ShiftedLegendre, m, n); }, mono));
    c.push_back(simple("shifted-legendre->monomial desc (sum)", dd, any,
                       fixed(fam::cf_shifted_legendre_to_monomial_sum),
                       [](int m, int n) { return trunc_desc(Family::ShiftedLegendre, m, n); }, mono));
    c.push_back(simple("chebyshev-v->monomial desc", dd, any, fixed(fam::cf_chebyshev_v_to_monomial),
                       [](int m, int n) { return trunc_desc(Family::ChebyshevV, m, n); }, mono));
    c.push_back(simple("shifted-chebyshev-u->monomial desc", dd, [](int m, int) { return m == 0; },
                       fixed(fam::cf_shifted_chebyshev_u_to_monomial), shifted_u_basis, mono));

    // Classical families read from recurrences, their inverses and truncations.
    for (Family f : {Family::ChebyshevT, Family::ChebyshevU, Family::ChebyshevV, Family::Legendre,
                     Family::ShiftedLegendre, Family::Laguerre, Family::HermitePhysicist}) {
        bool par = fam::has_definite_parity(f);
        MatrixKind kd = par ? ddp : dd, ka = par ? aap : aa;
        auto valid = par ? std::function<bool(int, int)>(same_parity) : std::function<bool(int, int)>(any);
        auto monos = par ? std::function<BasisSpec(int, int)>(mono2) : std::function<BasisSpec(int, int)>(mono);
        std::string nm = fam::to_string(f);
        auto tdesc = [f](int m, int n) { return trunc_desc(f, m, n); };
        auto tasc = [f](int m, int n) { return trunc_asc(f, m, n); };
        auto to_mono = [f](int, int) { return fam::cf_classical_to_monomial(f); };
        auto to_mono_asc = [f](int, int n) { return trunc_asc_cf(f, n); };
        c.push_back(simple(nm + "->monomial desc", kd, valid, to_mono, tdesc, monos));
        c.push_back(simple(nm + "@n->monomial asc", ka, valid, to_mono_asc, tasc, monos));
        c.push_back(simple("monomial->" + nm + " desc (inverted)", kd, valid,
                           [f](int, int) { return inverse_cf(fam::cf_classical_to_monomial(f), Orientation::Descending); },
                           monos, tdesc));
        c.push_back(simple("monomial->" + nm + "@n asc (inverted)", ka, valid,
                           [f](int, int n) { return inverse_cf(trunc_asc_cf(f, n), Orientation::Ascending); }, monos,
                           tasc));
        int d = par ? 2 : 1;
        c.push_back(simple(
            nm + "@+" + std::to_string(2 * d) + "->monomial desc", kd, valid,
            [f, d](int, int) {
                return fam::cf_truncated(fam::cf_classical_to_monomial(f), TruncSource{false, 2 * d});
            },
            [f, d](int m, int n) { return truncated_basis(f, Desc, m, n, TruncSource{false, 2 * d}); }, monos));
        c.push_back(simple(
            nm + "@n+" + std::to_string(2 * d) + "->monomial asc", ka, valid,
            [f, d](int, int n) {
                return fam::cf_truncated(fam::cf_classical_to_monomial(f), TruncSource{true, n + 2 * d});
            },
            [f, d](int m, int n) { return truncated_basis(f, Asc, m, n, TruncSource{true, n + 2 * d}); }, monos));
    }

    // Hermite band functions.
    c.push_back(simple("monomial->hermite@n asc (band)", aap, same_parity,
                       [](int, int n) { return fam::cf_hermite_band(n); }, mono2,
                       [](int m, int n) { return trunc_asc(Family::HermitePhysicist, m, n); }));

    // Alternating bases.
    for (Orientation o : {Desc, Asc}) {
        std::string on = to_string(o);
        MatrixKind k1{o, o, NP};
        c.push_back(simple(
            "zernike:alt->monomial " + on, k1, any,
            [o](int, int) { return alternating_cf(fam::cf_zernike_to_monomial(), o); },
            [o](int m, int n) { return alternating_basis(Family::ZernikeRadial, o, m, n); }, mono));
        c.push_back(simple(
            "monomial->zernike:alt " + on, k1, any,
            [o](int, int) {
                return alternating_cf(o == Desc ? fam::cf_monomial_to_zernike_desc() : fam::cf_monomial_to_zernike_asc(),
                                      o);
            },
            mono, [o](int m, int n) { return alternating_basis(Family::ZernikeRadial, o, m, n); }));
        c.push_back(simple(
            "chebyshev-t:alt->monomial " + on, k1, any,
            [o](int, int) { return alternating_cf(fam::cf_classical_to_monomial(Family::ChebyshevT), o); },
            [o](int m, int n) { return alternating_basis(Family::ChebyshevT, o, m, n, true); }, mono));
    }

    // The eight kinds of composition.
    c.push_back(composed(
        "bernstein desc->laguerre desc", dd, any, fixed([] { return fam::cf_laguerre().second; }),
        fixed(fam::cf_bernstein_to_monomial), bern(Desc), [](int m, int n) { return trunc_desc(Family::Laguerre, m, n); }));
    c.push_back(composed("chebyshev-v@n asc->bernstein asc", aa, any, fixed(fam::cf_monomial_to_bernstein_asc),
                         [](int, int n) { return trunc_asc_cf(Family::ChebyshevV, n); },
                         [](int m, int n) { return trunc_asc(Family::ChebyshevV, m, n); }, bern(Asc)));
    c.push_back(composed(
        "zernike desc->chebyshev-t desc", ddp, same_parity,
        fixed([] { return inverse_cf(fam::cf_classical_to_monomial(Family::ChebyshevT), Desc); }),
        fixed(fam::cf_zernike_to_monomial), zern(Desc),
        [](int m, int n) { return trunc_desc(Family::ChebyshevT, m, n); }));
    c.push_back(composed("zernike asc->hermite@n asc", aap, same_parity,
                         [](int, int n) { return fam::cf_hermite_band(n); }, fixed(fam::cf_zernike_to_monomial),
                         zern(Asc), [](int m, int n) { return trunc_asc(Family::HermitePhysicist, m, n); }));
    c.push_back(composed("shifted-legendre desc->bernstein asc", da, any, fixed(fam::cf_monomial_to_bernstein_asc),
                         fixed(fam::cf_shifted_legendre_to_monomial),
                         [](int m, int n) { return trunc_desc(Family::ShiftedLegendre, m, n); }, bern(Asc)));
    c.push_back(composed("bernstein asc->laguerre desc", ad, any, fixed([] { return fam::cf_laguerre().second; }),
                         fixed(fam::cf_bernstein_to_monomial), bern(Asc),
                         [](int m, int n) { return trunc_desc(Family::Laguerre, m, n); }));
    c.push_back(composed(
        "zernike desc->chebyshev-t@n asc", dap, same_parity,
        [](int, int n) { return inverse_cf(trunc_asc_cf(Family::ChebyshevT, n), Asc); },
        fixed(fam::cf_zernike_to_monomial), zern(Desc),
        [](int m, int n) { return trunc_asc(Family::ChebyshevT, m, n); }));
    c.push_back(composed("chebyshev-t@n asc->zernike desc", adp, same_parity, fixed(fam::cf_monomial_to_zernike_desc),
                         [](int, int n) { return trunc_asc_cf(Family::ChebyshevT, n); },
                         [](int m, int n) { return trunc_asc(Family::ChebyshevT, m, n); }, zern(Desc)));
    return c;
}

}  // namespace

const std::vector<Binding>& catalogue() {
    static const std::vector<Binding> c = make_catalogue();
    return c;
}

SweepResult sweep(int max_n, const std::string& filter) {
    SweepResult r;
    for (const auto& b : catalogue()) {
        if (!filter.empty() && b.name.find(filter) == std::string::npos) continue;
        for (int n = 0; n <= max_n; ++n)
            for (int m = 0; m <= n; ++m) {
                if (!b.valid(m, n)) continue;
                ++r.windows;
                std::string where = b.name + " [m=" + std::to_string(m) + ", n=" + std::to_string(n) + "]: ";
                try {
                    OracleReport rep = compare(b.formula(m, n), oracle_matrix(b.from(m, n), b.to(m, n)));
                    if (!rep.matched) {
                        ++r.failures;
                        r.messages.push_back(where + rep.to_string());
                    }
                } catch (const std::exception& e) {
                    ++r.failures;
                    r.messages.push_back(where + e.what());
                }
            }
    }
    return r;
}

}  // namespace cob::oracle
