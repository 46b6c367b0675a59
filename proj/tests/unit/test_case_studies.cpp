#include "cob/case_studies.hpp"

#include <doctest.h>

using namespace cob;
using namespace cob::case_studies;
using exact::make_rational;

TEST_CASE("reference degree-5 matrix") {
    CHECK(lb_matrix(5).entries == parse_grid({{"1", "-1", "1", "-1", "1", "-1"},
                                              {"1", "-3/5", "-1/5", "7/5", "-3", "5"},
                                              {"1", "-1/5", "-4/5", "4/5", "2", "-10"},
                                              {"1", "1/5", "-4/5", "-4/5", "2", "10"},
                                              {"1", "3/5", "-1/5", "-7/5", "-3", "-5"},
                                              {"1", "1", "1", "1", "1", "1"}}));
    CHECK(lb_matrix(1).entries == parse_grid({{"1", "-1"}, {"1", "1"}}));
    CHECK(lb_element(0, 0, 0) == 1);
    CHECK_THROWS_AS(lb_element(3, 4, 0), DomainError);
}

TEST_CASE("independent element routes agree") {
    for (int n = 0; n <= 12; ++n) {
        CHECK(lb_matrix(n) == lb_matrix_composed(n));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                CHECK(lb_element(n, i, j) == lb_element_farouki(n, i, j));
                CHECK(lb_element(n, i, j) == lb_alpha(n, j, n - i));
                if (n >= i + j) CHECK(lb_element_pfq1(n, i, j) == lb_element(n, i, j));
            }
    }
    CHECK_THROWS_AS(lb_element_pfq1(4, 3, 2), DomainError);
}

TEST_CASE("matrix invariants") {
    for (int n = 1; n <= 12; ++n)
        for (int i = 0; i <= n; ++i) {
            CHECK(lb_element(n, i, 0) == 1);
            CHECK(lb_element(n, i, 1) == make_rational(2 * i, n) - 1);
            CHECK(lb_element(n, i, n) == lb_last(n, i));
            for (int j = 0; j <= n; ++j)
                CHECK(lb_element(n, n - i, j) == (j % 2 ? -1 : 1) * lb_element(n, i, j));
        }
}

TEST_CASE("recurrences regenerate the matrix") {
    for (int n = 2; n <= 12; ++n) {
        CobMatrix m = lb_matrix(n);
        auto column = [&](int j) {
            std::vector<Rational> c;
            for (int i = 0; i <= n; ++i) c.push_back(m.at(i, j));
            return c;
        };
        std::vector<Rational> a = column(0), b = column(1);
        for (int j = 0; j + 2 <= n; ++j) {
            auto c = lb_column_step(n, j, a, b);
            CHECK(c == column(j + 2));
            a = b;
            b = c;
        }
        std::vector<Rational> r0 = m.entries[0], r1 = m.entries[1];
        for (int i = 0; i + 2 <= n; ++i) {
            auto r2 = lb_row_step(n, i, r0, r1);
            CHECK(r2 == m.entries[i + 2]);
            r0 = r1;
            r1 = r2;
        }
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                if (j <= n - 2) CHECK(reccol_residual(n, i, j) == 0);
                if (i <= n - 2) CHECK(recrow_residual(n, i, j) == 0);
            }
    }
    CHECK_THROWS(lb_column_step(4, 3, {}, {}));
}

TEST_CASE("recurrences in n for the shifted Legendre coefficients") {
    for (int n = 0; n <= 12; ++n)
        for (int l = 0; 2 * l + 1 <= n; ++l) {
            CHECK(receven_residual(n, l) == 0);
            CHECK(recodd_residual(n, l) == 0);
        }
}

TEST_CASE("column and row forms") {
    CHECK(lb_lagrange_column(5, 3) == exact::parse_polynomial("1/3x^3 - 5/2x^2 + 137/30x - 1"));
    CHECK(lb_lagrange_column(3, 0) == exact::parse_polynomial("1"));
    for (int n = 1; n <= 10; ++n)
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                CHECK(lb_lagrange_column(n, j)(Rational(i)) == lb_element(n, i, j));
                if (lb_has_column_closed_form(n, j)) CHECK(lb_column_closed_form(n, j, i) == lb_element(n, i, j));
                for (int r = 0; r <= std::min(3, n); ++r) CHECK(lb_row_closed_form(n, r, j) == lb_element(n, r, j));
            }
            CHECK(lb_penultimate(n, i) == lb_element(n, i, n - 1));
            CHECK(lb_element(n, i, 1) == lb_penultimate(n, i) / lb_element(n, i, n));
        }
    CHECK(lb_penultimate(6, 3) == 0);
    CHECK_THROWS(lb_penultimate(0, 0));
    // Column 2 for n = 6: (n^2 - (6i + 1)n + 6i^2) / (n(n - 1)).
    for (int i = 0; i <= 6; ++i) CHECK(lb_column_closed_form(6, 2, i) == make_rational(36 - (6 * i + 1) * 6 + 6 * i * i, 30));
    // Column 3 at i = 0 is -1.
    CHECK(lb_column_closed_form(8, 3, 0) == -1);
}

TEST_CASE("Legendre difference identity") {
    for (int n = 1; n <= 8; ++n)
        for (auto x : {Rational(0), make_rational(1, 2), Rational(1), make_rational(-2, 3)}) {
            auto [lhs, rhs] = lb_legendre_difference_identity(n, x);
            CHECK(lhs == rhs);
            if (x == 1) CHECK(lhs == 0);
        }
    auto [a, b] = lb_legendre_difference_identity(1, make_rational(1, 2));
    CHECK(a == make_rational(-1, 2));
    auto [c, d] = lb_legendre_difference_identity(2, Rational(0));
    CHECK(c == make_rational(-1, 2));
    CHECK(d == c);
}

TEST_CASE("shifted Chebyshev U to Bernstein") {
    CHECK(alqudah_coeff(2, 0) == 3);
    CHECK(alqudah_coeff(2, 1) == -5);
    CHECK(alqudah_coeff(2, 2) == 3);
    for (int n = 0; n <= 10; ++n) {
        CHECK(alqudah_coeff(n, 0) == n + 1);
        if (n >= 1) CHECK(alqudah_coeff(n, 1) == -make_rational((n + 1) * (2 * n + 1), 3));
        for (int k = 0; k <= n; ++k) {
            CHECK(alqudah_alpha3(n, n, k) == alqudah_coeff(n, k));
            CHECK(alqudah_alpha3_diagonal(n, k) == alqudah_coeff(n, k));
            if (k < n) CHECK(alqudah_reck_residual(n, k) == 0);
        }
    }
}

TEST_CASE("terminating hypergeometric sum") {
    // 3F2(-1, 1, 1; 1, 1; 1) = 1 - 1 = 0; 3F2(-2, 1, 1; 1, 1; 1) = 1 - 2 + 1 = 0.
    CHECK(hypergeometric_3f2(Rational(-1), Rational(1), Rational(1), Rational(1), Rational(1)) == 0);
    CHECK(hypergeometric_3f2(Rational(-2), Rational(3), Rational(1), Rational(1), Rational(1)) ==
          Rational(1) - Rational(6) + Rational(6));
    CHECK_THROWS(hypergeometric_3f2(make_rational(1, 2), Rational(1), Rational(1), Rational(1), Rational(1)));
    CHECK(lb_gosper_note().find("3F2") != std::string_view::npos);
}
