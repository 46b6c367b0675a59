#include "cob/registry.hpp"

#include <doctest.h>

#include <thread>

using namespace cob;
using exact::make_rational;
using exact::parse_polynomial;
namespace reg = cob::registry;

constexpr auto Asc = Orientation::Ascending;
constexpr auto Desc = Orientation::Descending;

namespace {
std::vector<Rational> q(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* x : xs) out.push_back(exact::parse_rational(x));
    return out;
}
}  // namespace

TEST_CASE("change of basis routes through the monomials") {
    auto z = family_basis(Family::ZernikeRadial, Desc, 3, 9);
    auto x = monomial_basis(3, 9, 2);
    CHECK(reg::cob(z, x).entries == parse_grid({{"1", "-4", "10", "-20"},
                                                {"0", "5", "-30", "105"},
                                                {"0", "0", "21", "-168"},
                                                {"0", "0", "0", "84"}}));
    CHECK(reg::cob(z, z) == identity_matrix(4));
    CobMatrix f = reg::cob(z, x);
    CHECK(describe(f.domain_basis) == describe(z));
    CHECK(describe(f.range_basis) == describe(x));
    CHECK_THROWS_AS(reg::cob(z, monomial_basis(3, 9)), DomainError);
}

TEST_CASE("reference representations of 16x^7 - 12x^5 + 5x^4 + 3x^2") {
    Polynomial p = parse_polynomial("16x^7-12x^5+5x^4+3x^2");
    auto asc = reg::convert(p, family_basis(Family::Bernstein, Asc, 2, 7));
    CHECK(asc.coords == q({"1/7", "3/7", "1", "11/7", "6/7", "12"}));
    auto desc = reg::convert(p, family_basis(Family::Bernstein, Desc, 2, 7));
    // Element j is b^(2+j)_2.
    CHECK(desc.coords == q({"12", "-18", "43/2", "-74/5", "16/3", "-16/21"}));
    CHECK(reg::reconstruct(asc) == p);
    CHECK(reg::reconstruct(desc) == p);

    auto zasc = reg::convert_parts(p, Family::ZernikeRadial, Asc);
    REQUIRE(zasc.size() == 2);
    CHECK(zasc[0].coords == q({"-1", "9"}));  // R_4^2, R_4^4
    CHECK(zasc[1].coords == q({"2", "2"}));   // R_7^5, R_7^7
    auto zdesc = reg::convert_parts(p, Family::ZernikeRadial, Desc);
    REQUIRE(zdesc.size() == 2);
    CHECK(zdesc[0].coords == q({"27/4", "5/4"}));  // R_2^2, R_4^2
    CHECK(zdesc[1].coords == q({"12/7", "16/7"}));  // R_5^5, R_7^5
    CHECK(reg::reconstruct(zasc[1]) + reg::reconstruct(zdesc[0]) == p);
    CHECK_THROWS_AS(reg::convert_parts(p, Family::ZernikeRadial, Asc, true), DomainError);
}

TEST_CASE("conversion errors name the problem") {
    auto b = family_basis(Family::Bernstein, Asc, 2, 5);
    CHECK_THROWS_WITH_AS(reg::convert(Polynomial{}, b), doctest::Contains("zero polynomial"), DomainError);
    CHECK_THROWS_WITH_AS(reg::convert(parse_polynomial("x^6"), b), doctest::Contains("exceeds"), DomainError);
    CHECK_THROWS_WITH_AS(reg::convert(parse_polynomial("x"), b), doctest::Contains("below"), DomainError);
    auto z = family_basis(Family::ZernikeRadial, Asc, 2, 6);
    CHECK_THROWS_WITH_AS(reg::convert(parse_polynomial("x^3"), z), doctest::Contains("parity"), DomainError);
}

TEST_CASE("classical families on raised windows are truncated by convert_parts") {
    Polynomial p = parse_polynomial("5x^4+3x^2");
    auto parts = reg::convert_parts(p, Family::ChebyshevT, Desc);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].basis.trunc.has_value());
    CHECK(parts[0].coords == q({"4", "5/8"}));
    CHECK(reg::reconstruct(parts[0]) == p);
}

TEST_CASE("wavefront identity in Chebyshev T and Zernike") {
    namespace fam = cob::families;
    Polynomial w = fam::zernike_poly(8, 2) * Rational(4) - fam::zernike_poly(4, 0) * Rational(2) +
                   fam::zernike_poly(6, 2) * Rational(3);
    auto t = reg::convert(w, family_basis(Family::ChebyshevT, Desc, 0, 8));
    CHECK(t.coords == q({"1/16", "39/32", "-5/16", "73/32", "7/4"}));
    CHECK(reg::reconstruct(t) == w);
}

TEST_CASE("groupoid and functor laws") {
    std::vector<BasisSpec> bases{monomial_basis(3, 9),
                                 family_basis(Family::Bernstein, Desc, 3, 9),
                                 family_basis(Family::Bernstein, Asc, 3, 9),
                                 alternating_basis(Family::ZernikeRadial, Desc, 3, 9),
                                 alternating_basis(Family::ChebyshevT, Desc, 3, 9, true),
                                 truncated_basis(Family::Laguerre, Desc, 3, 9, {false, 0})};
    auto report = reg::verify_category(bases);
    CHECK(report.all_passed());
    int functor = 0, closure = 0;
    for (const auto& e : report.entries) {
        functor += e.law.rfind("truncation functor", 0) == 0;
        closure += e.law.rfind("closure", 0) == 0;
    }
    CHECK(functor > 0);
    CHECK(closure == 6 * 5 * 4);
    CHECK(report.to_string().find("FAIL") == std::string::npos);
}

TEST_CASE("registry handles") {
    reg::Registry r;
    auto a = r.add(family_basis(Family::ZernikeRadial, Asc, 3, 9));
    auto b = r.add(monomial_basis(3, 9, 2));
    CHECK(r.size() == 2);
    CHECK(r.cob(b, a).entries == parse_grid({{"-1/20", "0", "0", "0"},
                                             {"1/4", "1/21", "0", "0"},
                                             {"-7/10", "-1/3", "-1/8", "0"},
                                             {"3/2", "9/7", "9/8", "1"}}));
    CHECK(r.convert(parse_polynomial("x^9"), a).coords.back() == 1);
    CHECK(r.verify_category({a, b}).all_passed());
    CHECK_THROWS_AS(r.spec(7), DomainError);
    CHECK_THROWS_AS(r.add(family_basis(Family::Laguerre, Desc, 2, 4)), DomainError);
}

TEST_CASE("registry is safe to share between threads") {
    reg::Registry r;
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&r, t] {
            for (int n = 1; n <= 5; ++n) r.add(family_basis(Family::Bernstein, t % 2 ? Asc : Desc, 0, n));
        });
    for (auto& th : pool) th.join();
    CHECK(r.size() == 20);
}
