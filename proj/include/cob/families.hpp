// Basis polynomial constructors and connection-coefficient functions.
#pragma once

#include "cob/exact.hpp"

#include <functional>
#include <string>
#include <utility>

namespace cob {

enum class Family {
    Monomial,
    Bernstein,
    ZernikeRadial,
    ChebyshevT,
    ChebyshevU,
    ChebyshevV,
    Legendre,
    ShiftedLegendre,
    Laguerre,
    HermitePhysicist,
    Custom,
};

namespace families {

std::string to_string(Family f);
Family parse_family(const std::string& name);

// Families whose members all have definite parity (degree step 2).
bool has_definite_parity(Family f);
int step(Family f);

// Families indexed by a single degree n (F_n), as opposed to (n, m).
bool is_classical(Family f);

enum class Direction { ToMonomial, FromMonomialAscending, FromMonomialDescending, Composite };

std::string to_string(Direction d);

// An evaluable coefficient function (n, m, k) -> Rational.
//
// For a to-monomial function, value(n, m, k) is the coefficient of x^(n - d*k)
// in the basis polynomial indexed by (n, m). For from-monomial functions, k
// indexes the target basis polynomial whose varying degree is n - d*k.
struct CoeffFn {
    Family family = Family::Monomial;
    Direction direction = Direction::ToMonomial;
    int d = 1;  // degree step: 2 for definite parity
    std::string name;
    std::function<Rational(int, int, int)> eval;

    Rational operator()(int n, int m, int k) const { return eval(n, m, k); }
};

// Basis polynomials.
Polynomial bernstein_poly(int n, int m);
Polynomial zernike_poly(int n, int m);
// T, U, V, P, P*, L or H of degree n, from three-term recurrences.
Polynomial classical_poly(Family f, int n);

// Bernstein.
CoeffFn cf_bernstein_to_monomial();
CoeffFn cf_monomial_to_bernstein_asc();
CoeffFn cf_monomial_to_bernstein_desc();

// Zernike radial.
CoeffFn cf_zernike_to_monomial();
CoeffFn cf_monomial_to_zernike_desc();
CoeffFn cf_monomial_to_zernike_asc();
// Second route through Jacobi polynomials. It evaluates the monomial to
// descending Zernike mapping, so it is checked against cf_monomial_to_zernike_desc.
CoeffFn cf_monomial_to_zernike_asc_jacobi();

// Laguerre: {to_monomial, from_monomial}. The from-monomial function is descending.
std::pair<CoeffFn, CoeffFn> cf_laguerre();

// Shifted Legendre to monomials, closed form and the original finite sum.
CoeffFn cf_shifted_legendre_to_monomial();
CoeffFn cf_shifted_legendre_to_monomial_sum();

// Chebyshev third kind to monomials.
CoeffFn cf_chebyshev_v_to_monomial();

// Shifted Chebyshev second kind U_n(2x-1) to monomials.
CoeffFn cf_shifted_chebyshev_u_to_monomial();

// Monomials to the ascending basis of truncations of H_N (a band function).
CoeffFn cf_hermite_band(int N);

// Coefficients read from classical_poly for any classical family.
CoeffFn cf_classical_to_monomial(Family f);

// Where the polynomial in a truncated family comes from.
struct TruncSource {
    bool fixed = false;  // true: always F_value; false: F_(top + value)
    int value = 0;
    friend bool operator==(const TruncSource&, const TruncSource&) = default;
};

// Coefficient function of a truncated classical family, derived from the base
// to-monomial function by shifting k to the source polynomial's index.
CoeffFn cf_truncated(const CoeffFn& base_to_monomial, TruncSource src);

}  // namespace families
}  // namespace cob
