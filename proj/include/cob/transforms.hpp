// Matrix truncation, alternating bases and matrices, and superposition.
#pragma once

#include "cob/matrices.hpp"

namespace cob::transforms {

// Removes the first k1 and last k2 rows and columns of a triangular matrix.
CobMatrix truncate_matrix(const CobMatrix& m, int k1, int k2);

// Number of truncations tr_{k1,k2} with 0 < k1 + k2 < b.
long count_truncations(int b);

struct AlternatingSpec {
    Orientation orientation = Orientation::Descending;
    int m = 0;
    int n = 0;
    bool equal_parity() const { return (n - m) % 2 == 0; }
};

// Alternating matrix of a definite-parity function: zero wherever i - j is odd.
CobMatrix build_alternating_matrix(const AlternatingSpec& spec, const families::CoeffFn& cf);

// The inverse of an alternating matrix laid out with the inverse-direction
// function. Throws DomainError if the product with m is not the identity.
CobMatrix invert_alternating(const CobMatrix& m, const families::CoeffFn& cf_inverse, const AlternatingSpec& spec);

// Composition where either side may be alternating. cf1 maps the monomials to
// the range, cf2 maps the domain to the monomials; an alternating side is given
// by its step-2 function. Structurally zero summands are skipped.
families::CoeffFn compose_alternating(const families::CoeffFn& cf1, const families::CoeffFn& cf2, Orientation o,
                                      bool vr_alt, bool rt_alt);

// Column operations turning the matrix of an alternating basis into that of
// the superposed basis: descending d_0 = c_0, d_j = c_j + s c_(j-1); ascending
// d_last = c_last, d_j = c_j + s c_(j+1).
CobMatrix superpose_matrix(const CobMatrix& m_alt, Orientation o, int sign = 1);
CobMatrix superpose_matrix(const CobMatrix& m_alt, int sign = 1);

// The converse column operations.
CobMatrix alternate_from_superposed(const CobMatrix& m_sup, Orientation o, int sign = 1);
CobMatrix alternate_from_superposed(const CobMatrix& m_sup, int sign = 1);

// The 3x3 lower alternating pair showing that superposition does not respect products.
struct SuperpositionCounterexample {
    CobMatrix m, n, mn;
    CobMatrix s_m, s_n, s_m_s_n, s_mn;
    bool functor_law_fails() const { return !(s_mn == s_m_s_n); }
};
SuperpositionCounterexample superposition_counterexample();

}  // namespace cob::transforms
