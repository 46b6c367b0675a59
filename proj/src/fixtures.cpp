#include "cob/fixtures.hpp"

#include "cob/registry.hpp"
#include "cob/transforms.hpp"

namespace cob::fixtures {

namespace fam = families;

namespace {

constexpr auto A = Orientation::Ascending;
constexpr auto D = Orientation::Descending;
constexpr auto N = ParityKind::NotDefinite;
constexpr auto P = ParityKind::Definite;

MatrixKind kind(Orientation domain, Orientation range, ParityKind parity) { return {domain, range, parity}; }

// Lagrange interpolation polynomials on the nodes 0..n.
BasisSpec lagrange_basis(int n) {
    std::vector<Polynomial> polys;
    for (int v = 0; v <= n; ++v) {
        Polynomial p = Polynomial::constant(1);
        for (int u = 0; u <= n; ++u) {
            if (u == v) continue;
            p = p * Polynomial{{1, Rational(1)}, {0, Rational(-u)}} * exact::make_rational(1, v - u);
        }
        polys.push_back(p);
    }
    return custom_basis(polys, Orientation::Descending, "lagrange");
}

// The rising factorials (-x)_j for j = 0..n.
BasisSpec falling_basis(int n) {
    std::vector<Polynomial> polys{Polynomial::constant(1)};
    for (int j = 1; j <= n; ++j) polys.push_back(polys.back() * Polynomial{{1, Rational(-1)}, {0, Rational(j - 1)}});
    return custom_basis(polys, Orientation::Descending, "rising(-x)");
}

CobMatrix lb_product(int n) {
    return matmul(build_matrix(kind(A, A, N), fam::cf_monomial_to_bernstein_asc(), n, 0),
                  build_matrix(kind(D, D, N), fam::cf_shifted_legendre_to_monomial(), n, 0));
}

}  // namespace

const std::vector<Fixture>& all() {
    static const std::vector<Fixture> table = {
        {"laguerre-monomial-to-laguerre-3x3", "Monomials x..x^3 to descending Laguerre polynomials (n=3, m=1)",
         {{"-1", "-4", "-18"}, {"0", "2", "18"}, {"0", "0", "-6"}},
         [] { return build_matrix(kind(D, D, N), fam::cf_laguerre().second, 3, 1); }},
        {"bernstein-asc-to-monomial-5x5", "Ascending Bernstein b^7_3..b^7_7 to monomials (n=7, m=3)",
         {{"35", "0", "0", "0", "0"}, {"-140", "35", "0", "0", "0"}, {"210", "-105", "21", "0", "0"}, {"-140", "105", "-42", "7", "0"}, {"35", "-35", "21", "-7", "1"}},
         [] { return registry::cob(family_basis(Family::Bernstein, A, 3, 7), monomial_basis(3, 7)); }},
        {"chebyshev-t-even-to-monomial-4x4", "Even Chebyshev T_0..T_6 to even monomials",
         {{"1", "-1", "1", "-1"}, {"0", "2", "-8", "18"}, {"0", "0", "8", "-48"}, {"0", "0", "0", "32"}},
         [] { return registry::cob(family_basis(Family::ChebyshevT, D, 0, 6), monomial_basis(0, 6, 2)); }},
        {"monomial-to-zernike-asc-4x4", "Odd monomials x^3..x^9 to ascending Zernike R_9^3..R_9^9",
         {{"-1/20", "0", "0", "0"}, {"1/4", "1/21", "0", "0"}, {"-7/10", "-1/3", "-1/8", "0"}, {"3/2", "9/7", "9/8", "1"}},
         [] { return registry::cob(monomial_basis(3, 9, 2), family_basis(Family::ZernikeRadial, A, 3, 9)); }},
        {"laguerre-band-to-monomial-4x4", "Ascending truncated L_10 on x^3..x^6 to monomials (band matrix)",
         {{"-20", "0", "0", "0"}, {"35/4", "35/4", "0", "0"}, {"-21/10", "-21/10", "-21/10", "0"}, {"7/24", "7/24", "7/24", "7/24"}},
         [] { return registry::cob(truncated_basis(Family::Laguerre, A, 3, 6, {true, 10}), monomial_basis(3, 6)); }},
        {"monomial-to-laguerre-band-4x4", "Inverse of the Laguerre band matrix by the band rule",
         {{"-1/20", "0", "0", "0"}, {"1/20", "4/35", "0", "0"}, {"0", "-4/35", "-10/21", "0"}, {"0", "0", "10/21", "24/7"}},
         [] { return band_inverse(registry::cob(truncated_basis(Family::Laguerre, A, 3, 6, {true, 10}), monomial_basis(3, 6))); }},
        {"bernstein-asc-to-monomial-4x4", "Ascending Bernstein b^3_0..b^3_3 to monomials",
         {{"1", "0", "0", "0"}, {"-3", "3", "0", "0"}, {"3", "-6", "3", "0"}, {"-1", "3", "-3", "1"}},
         [] { return build_matrix(kind(A, A, N), fam::cf_bernstein_to_monomial(), 3, 0); }},
        {"monomial-to-bernstein-desc-4x4", "Monomials x^3..x^6 to descending Bernstein b^3_3..b^6_3",
         {{"1", "1", "1", "1"}, {"0", "-1/4", "-1/2", "-3/4"}, {"0", "0", "1/10", "3/10"}, {"0", "0", "0", "-1/20"}},
         [] { return build_matrix(kind(D, D, N), fam::cf_monomial_to_bernstein_desc(), 6, 3); }},
        {"zernike-desc-to-monomial-4x4", "Descending Zernike R_3^3..R_9^3 to odd monomials",
         {{"1", "-4", "10", "-20"}, {"0", "5", "-30", "105"}, {"0", "0", "21", "-168"}, {"0", "0", "0", "84"}},
         [] { return build_matrix(kind(D, D, P), fam::cf_zernike_to_monomial(), 9, 3); }},
        {"monomial-to-zernike-desc-4x4", "Even monomials 1..x^6 to descending Zernike R_0^0..R_6^0",
         {{"1", "1/2", "1/3", "1/4"}, {"0", "1/2", "1/2", "9/20"}, {"0", "0", "1/6", "1/4"}, {"0", "0", "0", "1/20"}},
         [] { return build_matrix(kind(D, D, P), fam::cf_monomial_to_zernike_desc(), 6, 0); }},
        {"composed-dnd-4x4", "Truncated shifted Legendre (descending, x^4..x^7) to descending Bernstein",
         {{"70", "-378", "1302", "-3498"}, {"0", "-252/5", "924/5", "-2904/5"}, {"0", "0", "308/5", "-572/5"}, {"0", "0", "0", "-3432/35"}},
         [] { return registry::cob(truncated_basis(Family::ShiftedLegendre, D, 4, 7, {false, 0}), family_basis(Family::Bernstein, D, 4, 7)); }},
        {"composed-and-4x4", "Truncated V_6 (ascending, x^3..x^6) to ascending Bernstein b^6_3..b^6_6",
         {{"8/5", "0", "0", "0"}, {"16/15", "-16/3", "0", "0"}, {"-16", "-32", "-16/3", "0"}, {"-16", "-48", "32", "64"}},
         [] { return registry::cob(truncated_basis(Family::ChebyshevV, A, 3, 6, {true, 6}), family_basis(Family::Bernstein, A, 3, 6)); }},
        {"monomial-to-truncated-t-desc-4x4", "Odd monomials x^3..x^9 to descending truncated Chebyshev T",
         {{"1/4", "5/16", "21/64", "21/64"}, {"0", "1/16", "7/64", "9/64"}, {"0", "0", "1/64", "9/256"}, {"0", "0", "0", "1/256"}},
         [] { return registry::cob(monomial_basis(3, 9, 2), truncated_basis(Family::ChebyshevT, D, 3, 9, {false, 0})); }},
        {"composed-ddd-4x4", "Descending Zernike R_3^3..R_9^3 to descending truncated Chebyshev T",
         {{"1/4", "9/16", "1/64", "1/4"}, {"0", "5/16", "27/64", "0"}, {"0", "0", "21/64", "21/64"}, {"0", "0", "0", "21/64"}},
         [] { return registry::cob(family_basis(Family::ZernikeRadial, D, 3, 9), truncated_basis(Family::ChebyshevT, D, 3, 9, {false, 0})); }},
        {"composed-ad-4x4", "Ascending Zernike R_9^3..R_9^9 to ascending truncated Hermite H_9",
         {{"1/4032", "0", "0", "0"}, {"31/16128", "1/2304", "0", "0"}, {"37/2304", "13/2304", "1/1152", "0"}, {"7/48", "37/576", "77/4608", "1/512"}},
         [] { return registry::cob(family_basis(Family::ZernikeRadial, A, 3, 9), truncated_basis(Family::HermitePhysicist, A, 3, 9, {true, 9})); }},
        {"mixed-truncated-t-4x4", "Ascending truncated T_7 (x..x^7) to descending Chebyshev T_1..T_7",
         {{"0", "7", "-35", "35"}, {"0", "0", "-14", "21"}, {"0", "0", "0", "7"}, {"1", "1", "1", "1"}},
         [] { return registry::cob(truncated_basis(Family::ChebyshevT, A, 1, 7, {true, 7}), family_basis(Family::ChebyshevT, D, 1, 7)); }},
        {"monomial-to-bernstein-asc-6x6", "Monomials 1..x^5 to ascending Bernstein b^5_0..b^5_5",
         {{"1", "0", "0", "0", "0", "0"}, {"1", "1/5", "0", "0", "0", "0"}, {"1", "2/5", "1/10", "0", "0", "0"}, {"1", "3/5", "3/10", "1/10", "0", "0"}, {"1", "4/5", "3/5", "2/5", "1/5", "0"}, {"1", "1", "1", "1", "1", "1"}},
         [] { return build_matrix(kind(A, A, N), fam::cf_monomial_to_bernstein_asc(), 5, 0); }},
        {"shifted-legendre-to-monomial-6x6", "Shifted Legendre P*_0..P*_5 to monomials",
         {{"1", "-1", "1", "-1", "1", "-1"}, {"0", "2", "-6", "12", "-20", "30"}, {"0", "0", "6", "-30", "90", "-210"}, {"0", "0", "0", "20", "-140", "560"}, {"0", "0", "0", "0", "70", "-630"}, {"0", "0", "0", "0", "0", "252"}},
         [] { return build_matrix(kind(D, D, N), fam::cf_shifted_legendre_to_monomial(), 5, 0); }},
        {"shifted-legendre-to-bernstein-6x6", "Shifted Legendre P*_0..P*_5 to ascending Bernstein b^5_0..b^5_5",
         {{"1", "-1", "1", "-1", "1", "-1"}, {"1", "-3/5", "-1/5", "7/5", "-3", "5"}, {"1", "-1/5", "-4/5", "4/5", "2", "-10"}, {"1", "1/5", "-4/5", "-4/5", "2", "10"}, {"1", "3/5", "-1/5", "-7/5", "-3", "-5"}, {"1", "1", "1", "1", "1", "1"}},
         [] { return lb_product(5); }},
        {"lagrange-to-monomial-6x6", "Lagrange interpolation polynomials on 0..5 to monomials",
         {{"1", "0", "0", "0", "0", "0"}, {"-137/60", "5", "-5", "10/3", "-5/4", "1/5"}, {"15/8", "-77/12", "107/12", "-13/2", "61/24", "-5/12"}, {"-17/24", "71/24", "-59/12", "49/12", "-41/24", "7/24"}, {"1/8", "-7/12", "13/12", "-1", "11/24", "-1/12"}, {"-1/120", "1/24", "-1/12", "1/12", "-1/24", "1/120"}},
         [] { return registry::cob(lagrange_basis(5), monomial_basis(0, 5)); }},
        {"falling-to-monomial-6x6", "Polynomials (-i)_j, j = 0..5, to monomials",
         {{"1", "0", "0", "0", "0", "0"}, {"0", "-1", "-1", "-2", "-6", "-24"}, {"0", "0", "1", "3", "11", "50"}, {"0", "0", "0", "-1", "-6", "-35"}, {"0", "0", "0", "0", "1", "10"}, {"0", "0", "0", "0", "0", "-1"}},
         [] { return registry::cob(falling_basis(5), monomial_basis(0, 5)); }},
        {"monomial-to-falling-6x6", "Monomials to the polynomials (-i)_j, j = 0..5",
         {{"1", "0", "0", "0", "0", "0"}, {"0", "-1", "-1", "-1", "-1", "-1"}, {"0", "0", "1", "3", "7", "15"}, {"0", "0", "0", "-1", "-6", "-25"}, {"0", "0", "0", "0", "1", "10"}, {"0", "0", "0", "0", "0", "-1"}},
         [] { return registry::cob(monomial_basis(0, 5), falling_basis(5)); }},
        {"lagrange-to-falling-6x6", "Lagrange interpolation polynomials to (-i)_j, as a product",
         {{"1", "0", "0", "0", "0", "0"}, {"1", "-1", "0", "0", "0", "0"}, {"1/2", "-1", "1/2", "0", "0", "0"}, {"1/6", "-1/2", "1/2", "-1/6", "0", "0"}, {"1/24", "-1/6", "1/4", "-1/6", "1/24", "0"}, {"1/120", "-1/24", "1/12", "-1/12", "1/24", "-1/120"}},
         [] { return matmul(registry::cob(monomial_basis(0, 5), falling_basis(5)), registry::cob(lagrange_basis(5), monomial_basis(0, 5))); }},
        {"laguerre-to-monomial-6x6", "Laguerre L_0..L_5 to monomials",
         {{"1", "1", "1", "1", "1", "1"}, {"0", "-1", "-2", "-3", "-4", "-5"}, {"0", "0", "1/2", "3/2", "3", "5"}, {"0", "0", "0", "-1/6", "-2/3", "-5/3"}, {"0", "0", "0", "0", "1/24", "5/24"}, {"0", "0", "0", "0", "0", "-1/120"}},
         [] { return build_matrix(kind(D, D, N), fam::cf_laguerre().first, 5, 0); }},
        {"laguerre-to-monomial-truncated-3x3", "tr_{2,1} of the Laguerre to monomial matrix",
         {{"1/2", "3/2", "3"}, {"0", "-1/6", "-2/3"}, {"0", "0", "1/24"}},
         [] { return transforms::truncate_matrix(build_matrix(kind(D, D, N), fam::cf_laguerre().first, 5, 0), 2, 1); }},
        {"monomial-to-laguerre-6x6", "Monomials to Laguerre L_0..L_5",
         {{"1", "1", "2", "6", "24", "120"}, {"0", "-1", "-4", "-18", "-96", "-600"}, {"0", "0", "2", "18", "144", "1200"}, {"0", "0", "0", "-6", "-96", "-1200"}, {"0", "0", "0", "0", "24", "600"}, {"0", "0", "0", "0", "0", "-120"}},
         [] { return build_matrix(kind(D, D, N), fam::cf_laguerre().second, 5, 0); }},
        {"monomial-to-laguerre-truncated-3x3", "tr_{2,1} of the monomial to Laguerre matrix",
         {{"2", "18", "144"}, {"0", "-6", "-96"}, {"0", "0", "24"}},
         [] { return transforms::truncate_matrix(build_matrix(kind(D, D, N), fam::cf_laguerre().second, 5, 0), 2, 1); }},
        {"bernstein-desc-to-monomial-3x3", "Descending Bernstein b^2_2, b^3_2, b^4_2 to x^2..x^4",
         {{"1", "3", "6"}, {"0", "-3", "-12"}, {"0", "0", "6"}},
         [] { return build_matrix(kind(D, D, N), fam::cf_bernstein_to_monomial(), 4, 2); }},
        {"bernstein-desc-to-truncated-laguerre-3x3", "Descending Bernstein to truncated Laguerre on x^2..x^4",
         {{"2", "-48", "660"}, {"0", "18", "-504"}, {"0", "0", "144"}},
         [] { return matmul(transforms::truncate_matrix(build_matrix(kind(D, D, N), fam::cf_laguerre().second, 5, 0), 2, 1), build_matrix(kind(D, D, N), fam::cf_bernstein_to_monomial(), 4, 2)); }},
        {"zernike-desc-even-to-monomial-4x4", "Descending Zernike R_2^2..R_8^2 to even monomials",
         {{"1", "-3", "6", "-10"}, {"0", "4", "-20", "60"}, {"0", "0", "15", "-105"}, {"0", "0", "0", "56"}},
         [] { return build_matrix(kind(D, D, P), fam::cf_zernike_to_monomial(), 8, 2); }},
        {"zernike-alt-desc-to-monomial-7x7", "Descending alternating Zernike (n=8, m=2) to monomials",
         {{"1", "0", "-3", "0", "6", "0", "-10"}, {"0", "1", "0", "-4", "0", "10", "0"}, {"0", "0", "4", "0", "-20", "0", "60"}, {"0", "0", "0", "5", "0", "-30", "0"}, {"0", "0", "0", "0", "15", "0", "-105"}, {"0", "0", "0", "0", "0", "21", "0"}, {"0", "0", "0", "0", "0", "0", "56"}},
         [] { return transforms::build_alternating_matrix({D, 2, 8}, fam::cf_zernike_to_monomial()); }},
        {"zernike-alt-asc-to-t-alt-desc-6x6", "Ascending alternating Zernike to descending alternating Chebyshev T (n=5, m=0)",
         {{"1/4", "0", "0", "0", "3/8", "0"}, {"0", "1/4", "0", "1/8", "0", "5/8"}, {"0", "0", "1/2", "0", "1/2", "0"}, {"0", "1/8", "0", "9/16", "0", "5/16"}, {"3/4", "0", "1/2", "0", "1/8", "0"}, {"0", "5/8", "0", "5/16", "0", "1/16"}},
         [] { return registry::cob(alternating_basis(Family::ZernikeRadial, A, 0, 5), alternating_basis(Family::ChebyshevT, D, 0, 5)); }},
        {"monomial-to-zernike-alt-asc-7x7", "Monomials x^3..x^9 to ascending alternating Zernike",
         {{"-1/20", "0", "0", "0", "0", "0", "0"}, {"0", "1/15", "0", "0", "0", "0", "0"}, {"1/4", "0", "1/21", "0", "0", "0", "0"}, {"0", "-2/5", "0", "-1/7", "0", "0", "0"}, {"-7/10", "0", "-1/3", "0", "-1/8", "0", "0"}, {"0", "4/3", "0", "8/7", "0", "1", "0"}, {"3/2", "0", "9/7", "0", "9/8", "0", "1"}},
         [] { return transforms::build_alternating_matrix({A, 3, 9}, fam::cf_monomial_to_zernike_asc()); }},
        {"monomial-to-zernike-alt-desc-7x7", "Monomials x^2..x^8 to descending alternating Zernike, by the alternating inverse",
         {{"1", "0", "3/4", "0", "3/5", "0", "1/2"}, {"0", "1", "0", "4/5", "0", "2/3", "0"}, {"0", "0", "1/4", "0", "1/3", "0", "5/14"}, {"0", "0", "0", "1/5", "0", "2/7", "0"}, {"0", "0", "0", "0", "1/15", "0", "1/8"}, {"0", "0", "0", "0", "0", "1/21", "0"}, {"0", "0", "0", "0", "0", "0", "1/56"}},
         [] { return transforms::invert_alternating(transforms::build_alternating_matrix({D, 2, 8}, fam::cf_zernike_to_monomial()), fam::cf_monomial_to_zernike_desc(), {D, 2, 8}); }},
        {"monomial-to-zernike-sup-asc-4x4", "Monomials x^2..x^5 to the superposed ascending Zernike basis",
         {{"-1/3", "0", "0", "0"}, {"1/3", "-1/4", "0", "0"}, {"1", "1/4", "1", "0"}, {"-1", "1", "-1", "1"}},
         [] { return invert_triangular(transforms::superpose_matrix(transforms::build_alternating_matrix({A, 2, 5}, fam::cf_zernike_to_monomial()))); }},
        {"truncated-laguerre-to-monomial-4x4", "Descending truncated Laguerre L_{k+1} on x^2..x^5 to monomials",
         {{"3/2", "3", "5", "15/2"}, {"0", "-2/3", "-5/3", "-10/3"}, {"0", "0", "5/24", "5/8"}, {"0", "0", "0", "-1/20"}},
         [] { return registry::cob(truncated_basis(Family::Laguerre, D, 2, 5, {false, 1}), monomial_basis(2, 5)); }},
        {"truncated-laguerre-to-zernike-sup-4x4", "Truncated Laguerre to the superposed ascending Zernike basis",
         {{"-1/2", "-1", "-5/3", "-5/2"}, {"1/2", "7/6", "25/12", "10/3"}, {"3/2", "17/6", "115/24", "175/24"}, {"-3/2", "-11/3", "-55/8", "-1381/120"}},
         [] { return registry::cob(truncated_basis(Family::Laguerre, D, 2, 5, {false, 1}), superposed_basis(Family::ZernikeRadial, A, 2, 5)); }},
        {"monomial-to-zernike-sup-asc-5x5", "Monomials x^3..x^7 to the superposed ascending Zernike basis",
         {{"1/10", "0", "0", "0", "0"}, {"-1/10", "-1/5", "0", "0", "0"}, {"-2/5", "1/5", "-1/6", "0", "0"}, {"2/5", "1", "1/6", "1", "0"}, {"1", "-1", "1", "-1", "1"}},
         [] { return registry::cob(monomial_basis(3, 7), superposed_basis(Family::ZernikeRadial, A, 3, 7)); }},
        {"bernstein-to-zernike-sup-5x5", "Ascending Bernstein b^7_3..b^7_7 to the superposed ascending Zernike basis",
         {{"7/2", "0", "0", "0", "0"}, {"49/2", "-7", "0", "0", "0"}, {"-77", "49/2", "-7/2", "0", "0"}, {"-231", "245/2", "-77/2", "7", "0"}, {"560", "-280", "84", "-14", "1"}},
         [] { return matmul(registry::cob(monomial_basis(3, 7), superposed_basis(Family::ZernikeRadial, A, 3, 7)), build_matrix(kind(A, A, N), fam::cf_bernstein_to_monomial(), 7, 3)); }},
        {"superposition-counterexample-product-3x3", "Product MN of the alternating counterexample pair",
         {{"2", "0", "0"}, {"0", "4", "0"}, {"23", "0", "6"}},
         [] { return transforms::superposition_counterexample().mn; }},
        {"superposition-counterexample-sm-3x3", "S(M) for the counterexample",
         {{"1", "0", "0"}, {"2", "2", "0"}, {"4", "3", "3"}},
         [] { return transforms::superposition_counterexample().s_m; }},
        {"superposition-counterexample-sn-3x3", "S(N) for the counterexample",
         {{"2", "0", "0"}, {"2", "2", "0"}, {"5", "2", "2"}},
         [] { return transforms::superposition_counterexample().s_n; }},
        {"superposition-counterexample-smsn-3x3", "S(M)S(N) for the counterexample, which differs from S(MN)",
         {{"2", "0", "0"}, {"8", "4", "0"}, {"29", "12", "6"}},
         [] { return transforms::superposition_counterexample().s_m_s_n; }},
    };
    return table;
}

FixtureResult check(const Fixture& f) {
    FixtureResult r{f.id, false, ""};
    try {
        CobMatrix got = f.build();
        Grid want = parse_grid(f.expected);
        if (static_cast<int>(want.size()) != got.dim) {
            r.detail = "dimension " + std::to_string(got.dim) + ", expected " + std::to_string(want.size());
            return r;
        }
        for (int i = 0; i < got.dim; ++i)
            for (int j = 0; j < got.dim; ++j)
                if (got.entries[i][j] != want[i][j]) {
                    r.detail = "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is " +
                               exact::to_string(got.entries[i][j]) + ", expected " + exact::to_string(want[i][j]);
                    return r;
                }
        r.passed = true;
    } catch (const std::exception& e) {
        r.detail = e.what();
    }
    return r;
}

std::vector<FixtureResult> check_all() {
    std::vector<FixtureResult> out;
    for (const auto& f : all()) out.push_back(check(f));
    return out;
}

}  // namespace cob::fixtures
