// Shifted Legendre to ascending Bernstein matrices and the shifted Chebyshev U
// to Bernstein coefficients.
//
// Index convention: the matrix of degree n has rows i and columns j in 0..n.
// Column j holds the Bernstein coordinates of the shifted Legendre polynomial
// P*_j, and row i corresponds to b^n_i. The element is alpha(n, j, n - i).
#pragma once

#include "cob/matrices.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace cob::case_studies {

// Terminating 3F2(a1, a2, a3; b1, b2; 1). One numerator parameter must be a
// non-positive integer; a denominator that reaches zero first is an error.
Rational hypergeometric_3f2(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                            const Rational& b2);

// m_{i,j} = (-1)^j 3F2(-j, 1 + j, -i; 1, -n; 1).
Rational lb_element(int n, int i, int j);

// Farouki's sum: 1/C(n,i) sum_v (-1)^(j+v) C(j,v)^2 C(n-j,i-v), v from max(0,i+j-n) to min(i,j).
Rational lb_element_farouki(int n, int i, int j);

// The composed coefficient function alpha(n, j, k); the matrix element is alpha(n, j, n - i).
Rational lb_alpha(int n, int j, int k);

// The restricted hypergeometric form, defined only when n >= i + j.
Rational lb_element_pfq1(int n, int i, int j);

CobMatrix lb_matrix(int n);

// The same matrix as the product of monomial -> ascending Bernstein and
// shifted Legendre -> monomial, built from the composed coefficient function.
CobMatrix lb_matrix_composed(int n);

// Column j + 2 from columns j and j + 1 by the column recurrence; needs j <= n - 2.
std::vector<Rational> lb_column_step(int n, int j, const std::vector<Rational>& col_j,
                                     const std::vector<Rational>& col_j1);

// Row i + 2 from rows i and i + 1 by the row recurrence; needs i <= n - 2.
std::vector<Rational> lb_row_step(int n, int i, const std::vector<Rational>& row_i,
                                  const std::vector<Rational>& row_i1);

// Residuals of the recurrences at a point; zero when the recurrence holds.
Rational reccol_residual(int n, int i, int j);
Rational recrow_residual(int n, int i, int j);
// Even and odd recurrences in n for the shifted Legendre to monomial
// coefficient alpha(n, 0, k) with k = 2l or 2l + 1, evaluated at n.
Rational receven_residual(int n, int l);
Rational recodd_residual(int n, int l);

// Polynomial in i through the points (i, m_{i,j}) for i = 0..n.
Polynomial lb_lagrange_column(int n, int j);

// (-1)^(n+i) ((2i - n) / n) C(n, i), the column with index n - 1.
Rational lb_penultimate(int n, int i);

// (-1)^(n+i) C(n, i), the column with index n.
Rational lb_last(int n, int i);

// Closed forms for columns 0..4 and n-3..n; throws for other columns.
bool lb_has_column_closed_form(int n, int j);
Rational lb_column_closed_form(int n, int j, int i);

// Closed forms for rows 0..3 (alpha(n, j, n - r)).
Rational lb_row_closed_form(int n, int r, int j);

// Both sides of P_n(x) - P_(n-1)(x) = (2^(1-n) / n) sum_v v C(n,v)^2 (x+1)^(n-v) (x-1)^v.
std::pair<Rational, Rational> lb_legendre_difference_identity(int n, const Rational& x);

// Coefficient of b^n_(n-k) in U_n(2x - 1), in binomial form.
Rational alqudah_coeff(int n, int k);

// Composed coefficient from U*_j to the degree-n Bernstein basis; k indexes b^n_(n-k).
Rational alqudah_alpha3(int n, int j, int k);

// The j = n specialisation in its rearranged double-sum form.
Rational alqudah_alpha3_diagonal(int n, int k);

// (-1 + 2k - 2n) S[k] + (-3 - 2k) S[k+1] with S[k] = alqudah_coeff(n, k); needs k < n.
Rational alqudah_reck_residual(int n, int k);

// No closed form is implemented for general (n, j, k); the 3F2 sum is the evaluator.
std::string_view lb_gosper_note();

}  // namespace cob::case_studies
