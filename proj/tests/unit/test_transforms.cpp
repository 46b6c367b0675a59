#include "cob/transforms.hpp"

#include <doctest.h>

using namespace cob;
namespace fam = cob::families;
namespace tr = cob::transforms;

constexpr auto Asc = Orientation::Ascending;
constexpr auto Desc = Orientation::Descending;

TEST_CASE("matrix truncation removes leading and trailing rows and columns") {
    CobMatrix l = build_matrix({Desc, Desc, ParityKind::NotDefinite}, fam::cf_classical_to_monomial(Family::Laguerre), 5, 0);
    CobMatrix t = tr::truncate_matrix(l, 2, 1);
    CHECK(t.entries == parse_grid({{"1/2", "3/2", "3"}, {"0", "-1/6", "-2/3"}, {"0", "0", "1/24"}}));
    CHECK_THROWS_AS(tr::truncate_matrix(l, 3, 3), DomainError);
    CHECK_THROWS_AS(tr::truncate_matrix(l, -1, 1), DomainError);
    CHECK_THROWS_AS(tr::truncate_matrix(make_matrix(parse_grid({{"1", "2"}, {"3", "4"}})), 1, 0), DomainError);
}

TEST_CASE("number of truncations") {
    // Pairs (k1, k2) with 0 < k1 + k2 < b: 2 + 3 + ... + b.
    CHECK(tr::count_truncations(2) == 2);
    CHECK(tr::count_truncations(4) == 9);
    CHECK(tr::count_truncations(6) == 20);
    CHECK_THROWS(tr::count_truncations(1));
}

TEST_CASE("alternating matrix layout") {
    CobMatrix a = tr::build_alternating_matrix({Desc, 2, 8}, fam::cf_zernike_to_monomial());
    CHECK(a.dim == 7);
    CHECK(a.at(0, 2) == -3);
    CHECK(a.at(1, 3) == -4);
    CHECK(a.at(6, 6) == 56);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if ((i + j) % 2) CHECK(a.at(i, j) == 0);
    CHECK(detect_shape(a.entries) == Shape::AltUpper);
}

TEST_CASE("alternating inverse theorem") {
    for (auto o : {Desc, Asc})
        for (int m = 0; m <= 3; ++m)
            for (int n = m + 1; n <= 9; ++n) {
                tr::AlternatingSpec spec{o, m, n};
                CobMatrix a = tr::build_alternating_matrix(spec, fam::cf_zernike_to_monomial());
                auto inv_cf = o == Desc ? fam::cf_monomial_to_zernike_desc() : fam::cf_monomial_to_zernike_asc();
                CobMatrix inv = tr::invert_alternating(a, inv_cf, spec);
                CHECK(inv == invert_triangular(a));
            }
    tr::AlternatingSpec spec{Desc, 2, 6};
    CobMatrix a = tr::build_alternating_matrix(spec, fam::cf_zernike_to_monomial());
    CHECK_THROWS_AS(tr::invert_alternating(a, fam::cf_zernike_to_monomial(), spec), DomainError);
}

TEST_CASE("superposition and alternation are converse column operations") {
    for (auto o : {Desc, Asc})
        for (int sign : {1, -1})
            for (int n = 2; n <= 8; ++n) {
                CobMatrix a = tr::build_alternating_matrix({o, 1, n}, fam::cf_zernike_to_monomial());
                CobMatrix s = tr::superpose_matrix(a, o, sign);
                CHECK(tr::alternate_from_superposed(s, o, sign) == a);
            }
    CobMatrix a = tr::build_alternating_matrix({Desc, 0, 3}, fam::cf_zernike_to_monomial());
    CHECK_THROWS_AS(tr::superpose_matrix(a, Desc, 2), DomainError);
}

TEST_CASE("superposition is not a functor") {
    auto c = tr::superposition_counterexample();
    CHECK(c.mn.entries == parse_grid({{"2", "0", "0"}, {"0", "4", "0"}, {"23", "0", "6"}}));
    CHECK(c.s_m_s_n.entries == parse_grid({{"2", "0", "0"}, {"8", "4", "0"}, {"29", "12", "6"}}));
    CHECK(c.functor_law_fails());
}

TEST_CASE("compose_alternating matches the matrix product") {
    MatrixKind dd{Desc, Desc, ParityKind::NotDefinite};
    for (int n = 3; n <= 8; ++n) {
        int m = 1;
        CobMatrix zalt = tr::build_alternating_matrix({Desc, m, n}, fam::cf_zernike_to_monomial());
        auto back = tr::compose_alternating(fam::cf_monomial_to_zernike_desc(), fam::cf_zernike_to_monomial(), Desc,
                                            true, true);
        CHECK(build_matrix(dd, back, n, m) == identity_matrix(n - m + 1));
        auto to_bern = tr::compose_alternating(fam::cf_monomial_to_bernstein_desc(), fam::cf_zernike_to_monomial(),
                                               Desc, false, true);
        CobMatrix direct = matmul(build_matrix(dd, fam::cf_monomial_to_bernstein_desc(), n, m), zalt);
        CHECK(build_matrix(dd, to_bern, n, m) == direct);
    }
}
