#include "cob/exact.hpp"

#include <doctest.h>

using namespace cob;
using exact::make_rational;

TEST_CASE("rationals are canonical and print as p/q") {
    CHECK(exact::to_string(make_rational(6, 4)) == "3/2");
    CHECK(exact::to_string(make_rational(-4, 2)) == "-2");
    CHECK(exact::to_string(make_rational(3, -9)) == "-1/3");
    CHECK(exact::parse_rational("10/4") == make_rational(5, 2));
    CHECK(exact::parse_rational("-7") == -7);
    CHECK_THROWS(exact::parse_rational("1/0"));
    CHECK_THROWS(exact::parse_rational("abc"));
    CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("decimal display rounds half away from zero") {
    CHECK(exact::to_decimal(make_rational(1, 3), 3) == "0.333");
    CHECK(exact::to_decimal(make_rational(-2, 3), 2) == "-0.67");
    CHECK(exact::to_decimal(make_rational(1, 8), 2) == "0.13");
    CHECK(exact::to_decimal(Rational(5), 0) == "5");
}

TEST_CASE("combinatorial helpers") {
    CHECK(exact::factorial(0) == 1);
    CHECK(exact::factorial(10) == 3628800);
    CHECK(exact::double_factorial(7) == 105);
    CHECK(exact::double_factorial(0) == 1);
    CHECK(exact::double_factorial(8) == 384);
    CHECK(exact::binom(7, 3) == 35);
    CHECK(exact::binom(3, 5) == 0);
    CHECK(exact::binom(4, -1) == 0);
    CHECK(exact::binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
    CHECK(exact::binomial(Rational(-1), 3) == -1);
    CHECK(exact::pochhammer(Rational(3), 0) == 1);
    CHECK(exact::pochhammer(Rational(3), 4) == 360);
    CHECK(exact::pochhammer(Rational(-2), 3) == 0);
    CHECK(exact::pochhammer(Rational(5), -1) == make_rational(1, 4));
    CHECK(exact::pow_int(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(exact::pow_int(Rational(2), -2) == make_rational(1, 4));
}

TEST_CASE("polynomial parsing and printing") {
    Polynomial p = exact::parse_polynomial("16x^7-12x^5+5x^4+3x^2");
    CHECK(p.degree() == 7);
    CHECK(p.min_degree() == 2);
    CHECK(p.coeff(5) == -12);
    CHECK(p.coeff(3) == 0);
    CHECK(exact::parse_polynomial(p.to_string()) == p);
    CHECK(exact::parse_polynomial("1/2x^3 - x") == Polynomial{{3, make_rational(1, 2)}, {1, Rational(-1)}});
    CHECK(exact::parse_polynomial("2*x^2 + 3/4") == Polynomial{{2, Rational(2)}, {0, make_rational(3, 4)}});
    CHECK(exact::parse_polynomial("x - x").is_zero());
    CHECK_THROWS(exact::parse_polynomial("x^"));
    CHECK_THROWS(exact::parse_polynomial("y^2"));
    CHECK_THROWS(exact::parse_polynomial(""));
}

TEST_CASE("polynomial arithmetic") {
    Polynomial a = exact::parse_polynomial("x + 1");
    Polynomial b = exact::parse_polynomial("x - 1");
    CHECK(a * b == exact::parse_polynomial("x^2 - 1"));
    CHECK(a + b == exact::parse_polynomial("2x"));
    CHECK((a - a).is_zero());
    CHECK(a.shifted(2) == exact::parse_polynomial("x^3 + x^2"));
    CHECK(exact::poly_eval(a * b, Rational(3)) == 8);
    CHECK(exact::poly_compose_affine(exact::parse_polynomial("x^2"), Rational(2), Rational(-1)) ==
          exact::parse_polynomial("4x^2 - 4x + 1"));
}

TEST_CASE("parity and truncation") {
    Polynomial p = exact::parse_polynomial("16x^7-12x^5+5x^4+3x^2");
    CHECK(exact::poly_parity(p) == Parity::None);
    auto [even, odd] = exact::poly_split_parity(p);
    CHECK(even == exact::parse_polynomial("5x^4+3x^2"));
    CHECK(odd == exact::parse_polynomial("16x^7-12x^5"));
    CHECK(exact::poly_parity(even) == Parity::Even);
    CHECK(exact::poly_parity(odd) == Parity::Odd);
    Polynomial t7 = exact::parse_polynomial("64x^7 - 112x^5 + 56x^3 - 7x");
    CHECK(exact::poly_truncate(t7, 5, 3) == exact::parse_polynomial("-112x^5 + 56x^3"));
    CHECK_THROWS_AS(exact::poly_truncate(exact::parse_polynomial("x^7 + x"), 5, 3), EmptyTruncation);
    CHECK_THROWS_AS(exact::poly_truncate(t7, 6, 4), DomainError);
}

TEST_CASE("machine form round trip") {
    Polynomial p = exact::parse_polynomial("-1/3x^4 + 2x");
    auto pairs = exact::to_pairs(p);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == std::pair<int, std::string>{1, "2"});
    CHECK(pairs[1] == std::pair<int, std::string>{4, "-1/3"});
    CHECK(exact::from_pairs(pairs) == p);
}
