// Acceptance runner: one PASS or FAIL line per criterion, exit status 1 if any fails.
#include "cob/case_studies.hpp"
#include "cob/fixtures.hpp"
#include "cob/oracle.hpp"
#include "cob/registry.hpp"
#include "cob/transforms.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace cob;
namespace fam = cob::families;
namespace tr = cob::transforms;
namespace reg = cob::registry;
namespace cs = cob::case_studies;

namespace {

constexpr auto Asc = Orientation::Ascending;
constexpr auto Desc = Orientation::Descending;

// Collects failed checks for one criterion.
struct Tally {
    long checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() >= 5) failures.back() = what + " (and more)";
    }
    bool ok() const { return failures.empty(); }
};

bool is_identity(const CobMatrix& m) { return m == identity_matrix(m.dim); }

std::string window(int m, int n) { return "[m=" + std::to_string(m) + ", n=" + std::to_string(n) + "]"; }

std::vector<Rational> q(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* x : xs) out.push_back(exact::parse_rational(x));
    return out;
}

void criterion_fixtures(Tally& t) {
    const auto& all = fixtures::all();
    t.expect(all.size() >= 18, "fewer than 18 fixtures");
    for (const auto& r : fixtures::check_all()) t.expect(r.passed, r.id + ": " + r.detail);
}

void criterion_oracle(Tally& t) {
    auto r = oracle::sweep(12);
    t.checks += r.windows;
    for (const auto& msg : r.messages) t.expect(false, msg);
    t.expect(r.windows > 0, "empty sweep");
}

void criterion_inverse(Tally& t) {
    for (const auto& b : oracle::catalogue()) {
        if (b.kind.mixed()) continue;
        for (int n = 0; n <= 16; ++n)
            for (int m = 0; m <= n; ++m) {
                if (!b.valid(m, n)) continue;
                CobMatrix f = b.formula(m, n);
                if (detect_shape(f.entries) == Shape::Full) continue;
                CobMatrix inv = invert_triangular(f);
                t.expect(is_identity(matmul(f, inv)) && is_identity(matmul(inv, f)), b.name + " " + window(m, n));
            }
    }
}

void criterion_theorems(Tally& t) {
    // Truncation commutes with products and inverses on every valid (k1, k2).
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    for (int dim = 2; dim <= 12; ++dim)
        for (bool upper : {true, false}) {
            auto random_tri = [&] {
                Grid g(dim, std::vector<Rational>(dim));
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        if (upper ? j >= i : j <= i) g[i][j] = exact::make_rational(num(rng), den(rng));
                for (int i = 0; i < dim; ++i)
                    if (g[i][i] == 0) g[i][i] = 1;
                return make_matrix(std::move(g));
            };
            CobMatrix a = random_tri(), b = random_tri();
            CobMatrix ab = matmul(a, b), ainv = invert_triangular(a);
            for (int k1 = 0; k1 < dim; ++k1)
                for (int k2 = 0; k1 + k2 < dim; ++k2) {
                    if (k1 + k2 == 0) continue;
                    std::string at = "dim " + std::to_string(dim) + " k1=" + std::to_string(k1) +
                                     " k2=" + std::to_string(k2);
                    CobMatrix ta = tr::truncate_matrix(a, k1, k2);
                    t.expect(tr::truncate_matrix(ab, k1, k2) == matmul(ta, tr::truncate_matrix(b, k1, k2)),
                             "truncated product " + at);
                    t.expect(tr::truncate_matrix(ainv, k1, k2) == invert_triangular(ta), "truncated inverse " + at);
                }
        }

    // Band inverse for bases of truncations of one polynomial.
    for (Family f : {Family::Laguerre, Family::ChebyshevV, Family::ShiftedLegendre, Family::ChebyshevT,
                     Family::HermitePhysicist, Family::Legendre})
        for (int N = 1; N <= 12; ++N) {
            int d = fam::step(f);
            for (int n = 0; n <= N; ++n)
                for (int m = (N - n) % d; m <= n; m += d) {
                    if ((n - m) % d || (N - n) % d) continue;
                    BasisSpec s = truncated_basis(f, Asc, m, n, {true, N});
                    CobMatrix h = reg::hub_matrix(s);
                    if (h.dim < 2) continue;
                    t.expect(band_inverse(h) == invert_triangular(h),
                             "band inverse " + fam::to_string(f) + "@" + std::to_string(N) + " " + window(m, n));
                }
        }

    // Alternating inverse agrees with exact inversion; superposition round trip.
    for (auto o : {Desc, Asc})
        for (int n = 1; n <= 12; ++n)
            for (int m = 0; m < n; ++m) {
                tr::AlternatingSpec spec{o, m, n};
                CobMatrix a = tr::build_alternating_matrix(spec, fam::cf_zernike_to_monomial());
                auto inv_cf = o == Desc ? fam::cf_monomial_to_zernike_desc() : fam::cf_monomial_to_zernike_asc();
                t.expect(tr::invert_alternating(a, inv_cf, spec) == invert_triangular(a),
                         "alternating inverse " + to_string(o) + " " + window(m, n));
                for (int sign : {1, -1})
                    t.expect(tr::alternate_from_superposed(tr::superpose_matrix(a, o, sign), o, sign) == a,
                             "superposition round trip " + window(m, n));
            }

    // Groupoid and functor laws.
    std::vector<BasisSpec> bases{monomial_basis(3, 9),
                                 family_basis(Family::Bernstein, Desc, 3, 9),
                                 family_basis(Family::Bernstein, Asc, 3, 9),
                                 alternating_basis(Family::ZernikeRadial, Desc, 3, 9),
                                 alternating_basis(Family::ZernikeRadial, Asc, 3, 9),
                                 alternating_basis(Family::ChebyshevT, Desc, 3, 9, true),
                                 truncated_basis(Family::ShiftedLegendre, Desc, 3, 9, {false, 0}),
                                 superposed_basis(Family::ZernikeRadial, Asc, 3, 9)};
    for (const auto& e : reg::verify_category(bases).entries) t.expect(e.passed, e.law + " " + e.detail);

    // Superposition does not respect products.
    auto c = tr::superposition_counterexample();
    t.expect(c.functor_law_fails(), "superposition counterexample does not fail the functor law");
}

void criterion_case_studies(Tally& t) {
    for (int n = 0; n <= 12; ++n) {
        t.expect(cs::lb_matrix(n) == cs::lb_matrix_composed(n), "composed lb matrix n=" + std::to_string(n));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                std::string at = "(" + std::to_string(n) + "," + std::to_string(i) + "," + std::to_string(j) + ")";
                Rational e = cs::lb_element(n, i, j);
                t.expect(e == cs::lb_element_farouki(n, i, j), "farouki " + at);
                if (n >= i + j) t.expect(e == cs::lb_element_pfq1(n, i, j), "restricted 3F2 " + at);
            }
    }
    auto closed = fam::cf_shifted_legendre_to_monomial();
    auto sum = fam::cf_shifted_legendre_to_monomial_sum();
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k)
            t.expect(closed(n, 0, k) == sum(n, 0, k), "shifted Legendre closed form n=" + std::to_string(n));

    for (int n = 2; n <= 12; ++n) {
        CobMatrix m = cs::lb_matrix(n);
        auto col = [&](int j) {
            std::vector<Rational> c;
            for (int i = 0; i <= n; ++i) c.push_back(m.at(i, j));
            return c;
        };
        auto a = col(0), b = col(1);
        for (int j = 0; j + 2 <= n; ++j) {
            auto c = cs::lb_column_step(n, j, a, b);
            t.expect(c == col(j + 2), "column recurrence regeneration n=" + std::to_string(n));
            a = b;
            b = c;
        }
        auto r0 = m.entries[0], r1 = m.entries[1];
        for (int i = 0; i + 2 <= n; ++i) {
            auto r2 = cs::lb_row_step(n, i, r0, r1);
            t.expect(r2 == m.entries[i + 2], "row recurrence regeneration n=" + std::to_string(n));
            r0 = r1;
            r1 = r2;
        }
    }

    for (int n = 1; n <= 10; ++n)
        for (int i = 0; i <= n; ++i) {
            std::string at = " n=" + std::to_string(n) + " i=" + std::to_string(i);
            t.expect(cs::lb_penultimate(n, i) == cs::lb_element(n, i, n - 1), "penultimate column" + at);
            t.expect(cs::lb_last(n, i) == cs::lb_element(n, i, n), "last column" + at);
            t.expect(cs::lb_element(n, i, 1) == cs::lb_penultimate(n, i) / cs::lb_element(n, i, n),
                     "ratio corollary" + at);
            for (int j = 0; j <= n; ++j) {
                Rational e = cs::lb_element(n, i, j);
                std::string atj = at + " j=" + std::to_string(j);
                t.expect(cs::lb_element(n, n - i, j) == (j % 2 ? -e : e), "symmetry" + atj);
                t.expect(cs::lb_lagrange_column(n, j)(Rational(i)) == e, "Lagrange column" + atj);
                if (cs::lb_has_column_closed_form(n, j))
                    t.expect(cs::lb_column_closed_form(n, j, i) == e, "closed column" + atj);
                if (i <= 3) t.expect(cs::lb_row_closed_form(n, i, j) == e, "closed row" + atj);
            }
        }

    for (int n = 0; n <= 10; ++n) {
        t.expect(cs::alqudah_coeff(n, 0) == n + 1, "S[0] n=" + std::to_string(n));
        if (n >= 1)
            t.expect(cs::alqudah_coeff(n, 1) == -exact::make_rational((n + 1) * (2 * n + 1), 3),
                     "S[1] n=" + std::to_string(n));
        for (int k = 0; k <= n; ++k)
            t.expect(cs::alqudah_alpha3(n, n, k) == cs::alqudah_coeff(n, k),
                     "alpha3(n,n,k) n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

void criterion_conversions(Tally& t) {
    Polynomial p = exact::parse_polynomial("16x^7-12x^5+5x^4+3x^2");
    auto basc = reg::convert(p, family_basis(Family::Bernstein, Asc, 2, 7));
    t.expect(basc.coords == q({"1/7", "3/7", "1", "11/7", "6/7", "12"}), "Bernstein ascending");
    auto bdesc = reg::convert(p, family_basis(Family::Bernstein, Desc, 2, 7));
    t.expect(bdesc.coords == q({"12", "-18", "43/2", "-74/5", "16/3", "-16/21"}), "Bernstein descending");
    auto zasc = reg::convert_parts(p, Family::ZernikeRadial, Asc);
    t.expect(zasc.size() == 2 && zasc[0].coords == q({"-1", "9"}) && zasc[1].coords == q({"2", "2"}),
             "Zernike ascending");
    auto zdesc = reg::convert_parts(p, Family::ZernikeRadial, Desc);
    t.expect(zdesc.size() == 2 && zdesc[0].coords == q({"27/4", "5/4"}) && zdesc[1].coords == q({"12/7", "16/7"}),
             "Zernike descending");
    for (const auto& v : {basc, bdesc}) t.expect(reg::reconstruct(v) == p, "reconstruction " + describe(v.basis));
    if (zasc.size() == 2 && zdesc.size() == 2) {
        t.expect(reg::reconstruct(zasc[0]) + reg::reconstruct(zasc[1]) == p, "Zernike ascending sum");
        t.expect(reg::reconstruct(zdesc[0]) + reg::reconstruct(zdesc[1]) == p, "Zernike descending sum");
        t.expect(reg::reconstruct(zasc[1]) + reg::reconstruct(zdesc[0]) == p, "combined representation");
    }

    Polynomial lhs = fam::classical_poly(Family::ChebyshevT, 8) * exact::make_rational(7, 4) +
                     fam::classical_poly(Family::ChebyshevT, 6) * exact::make_rational(73, 32) -
                     fam::classical_poly(Family::ChebyshevT, 4) * exact::make_rational(5, 16) +
                     fam::classical_poly(Family::ChebyshevT, 2) * exact::make_rational(39, 32) +
                     fam::classical_poly(Family::ChebyshevT, 0) * exact::make_rational(1, 16);
    Polynomial rhs = fam::zernike_poly(8, 2) * Rational(4) - fam::zernike_poly(4, 0) * Rational(2) +
                     fam::zernike_poly(6, 2) * Rational(3);
    t.expect(lhs == rhs, "wavefront identity");
    auto tc = reg::convert(rhs, family_basis(Family::ChebyshevT, Desc, 0, 8));
    t.expect(tc.coords == q({"1/16", "39/32", "-5/16", "73/32", "7/4"}), "wavefront Chebyshev coordinates");
}

void criterion_recurrences(Tally& t) {
    for (int n = 0; n <= 12; ++n) {
        std::string at = " n=" + std::to_string(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (j + 2 <= n) t.expect(cs::reccol_residual(n, i, j) == 0, "column recurrence" + at);
                if (i + 2 <= n) t.expect(cs::recrow_residual(n, i, j) == 0, "row recurrence" + at);
            }
        for (int k = 0; k < n; ++k) t.expect(cs::alqudah_reck_residual(n, k) == 0, "Chebyshev U recurrence" + at);
        for (int l = 0; 2 * l + 1 <= n; ++l) {
            t.expect(cs::receven_residual(n, l) == 0, "even recurrence" + at);
            t.expect(cs::recodd_residual(n, l) == 0, "odd recurrence" + at);
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        double budget_seconds;
        std::function<void(Tally&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "golden fixtures", 5, criterion_fixtures},
        {2, "oracle equivalence for n <= 12", 60, criterion_oracle},
        {3, "inverse identity for triangular builds n <= 16", 0, criterion_inverse},
        {4, "theorem suites", 0, criterion_theorems},
        {5, "case studies", 0, criterion_case_studies},
        {6, "end-to-end conversions and wavefront identity", 0, criterion_conversions},
        {7, "recurrences by direct evaluation for n <= 12", 0, criterion_recurrences},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds)
            t.failures.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds));
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (t.ok() ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " ("
             << t.checks << " checks, " << secs << " s)";
        std::cout << line.str() << "\n";
        for (const auto& f : t.failures) std::cout << "    " << f << "\n";
        if (!t.ok()) ++failed;
    }
    return failed ? 1 : 0;
}
