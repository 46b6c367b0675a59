#include "cob/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace cob;

constexpr auto Asc = Orientation::Ascending;
constexpr auto Desc = Orientation::Descending;

TEST_CASE("oracle reproduces a reference matrix from explicit polynomials") {
    CobMatrix m = oracle::oracle_matrix(monomial_basis(3, 9, 2), family_basis(Family::ZernikeRadial, Asc, 3, 9));
    CHECK(m.entries == parse_grid({{"-1/20", "0", "0", "0"},
                                   {"1/4", "1/21", "0", "0"},
                                   {"-7/10", "-1/3", "-1/8", "0"},
                                   {"3/2", "9/7", "9/8", "1"}}));
}

TEST_CASE("monomial coordinates reject terms outside the span") {
    auto span = monomial_basis(2, 4);
    CHECK(oracle::monomial_coordinates({exact::parse_polynomial("x^3 + 2x^2")}, span) ==
          parse_grid({{"2"}, {"1"}, {"0"}}));
    CHECK_THROWS_AS(oracle::monomial_coordinates({exact::parse_polynomial("x")}, span), DomainError);
}

TEST_CASE("compare reports the first mismatch") {
    CobMatrix a = make_matrix(parse_grid({{"1", "2"}, {"0", "1"}}));
    CobMatrix b = make_matrix(parse_grid({{"1", "3"}, {"0", "1"}}));
    CHECK(oracle::compare(a, a).matched);
    auto r = oracle::compare(a, b);
    CHECK_FALSE(r.matched);
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->i == 0);
    CHECK(r.first_mismatch->j == 1);
    CHECK(r.first_mismatch->expected == 3);
}

TEST_CASE("catalogue covers all eight matrix kinds") {
    std::set<std::string> kinds;
    for (const auto& b : oracle::catalogue()) kinds.insert(to_string(b.kind));
    CHECK(kinds.size() == all_kinds().size());
}

TEST_CASE("small sweep agrees everywhere") {
    auto r = oracle::sweep(6);
    CHECK(r.windows > 0);
    CHECK(r.failures == 0);
    CHECK(r.ok());
    auto z = oracle::sweep(6, "zernike");
    CHECK(z.windows > 0);
    CHECK(z.windows < r.windows);
}

TEST_CASE("oracle solves full mixed matrices") {
    auto from = family_basis(Family::ShiftedLegendre, Desc, 0, 4);
    auto to = family_basis(Family::Bernstein, Asc, 0, 4);
    CobMatrix m = oracle::oracle_matrix(from, to);
    CHECK(detect_shape(m.entries) == Shape::Full);
    CHECK(m.at(4, 4) == 1);
    CHECK(m.at(0, 1) == -1);
}
