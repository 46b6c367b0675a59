// Exact change-of-basis matrices: construction from coefficient functions,
// composition, products, inverses and serialization.
#pragma once

#include "cob/basis.hpp"

#include <string>
#include <vector>

namespace cob {

enum class Shape { UpperTri, LowerTri, Full, AltUpper, AltLower, Band };
enum class ParityKind { Definite, NotDefinite };

std::string to_string(Shape s);
Shape parse_shape(const std::string& text);

struct MatrixKind {
    Orientation domain = Orientation::Descending;
    Orientation range = Orientation::Descending;
    ParityKind parity = ParityKind::NotDefinite;

    bool mixed() const { return domain != range; }
    int step() const { return parity == ParityKind::Definite ? 2 : 1; }
    friend bool operator==(const MatrixKind&, const MatrixKind&) = default;
};

std::string to_string(const MatrixKind& k);

// All eight combinations of orientation pair and parity.
std::vector<MatrixKind> all_kinds();

using Grid = std::vector<std::vector<Rational>>;

struct CobMatrix {
    int dim = 0;
    Grid entries;
    BasisSpec domain_basis;
    BasisSpec range_basis;
    Shape shape = Shape::Full;

    const Rational& at(int i, int j) const { return entries.at(i).at(j); }
    friend bool operator==(const CobMatrix& a, const CobMatrix& b) { return a.entries == b.entries; }
};

CobMatrix make_matrix(Grid entries, Shape shape = Shape::Full);
CobMatrix identity_matrix(int dim);

// Tightest shape tag supported by the entries themselves.
Shape detect_shape(const Grid& g);

// Triangular matrix for an unmixed kind. Rows index the monomials
// x^m, x^(m+d), ..., x^n (or, for a from-monomial function, the range basis).
//   descending: m_ij = cf(m + d j, m, j - i) for j >= i
//   ascending:  m_ij = cf(n, m + d j, l - i) for i >= j, with l = (n - m)/d
CobMatrix build_matrix(const MatrixKind& kind, const families::CoeffFn& cf, int n, int m);

// Full matrix for a mixed kind, from a composite function built by compose_cf.
//   descending domain, ascending range: m_ij = cf(n, m + d j, l - i)
//   ascending domain, descending range: m_ij = cf(m + d j, m, l - i)
CobMatrix build_mixed_matrix(const MatrixKind& kind, const families::CoeffFn& cf, int n, int m);

// Window captured by the mixed compositions.
struct Window {
    int m = -1;
    int n = -1;
};

// Composition of cf1 (hub to range) with cf2 (domain to hub) so that the
// matrix of the result equals matrix(cf1) * matrix(cf2). Mixed kinds need the
// window: its m for a descending domain, its n for an ascending domain.
families::CoeffFn compose_cf(const MatrixKind& kind, const families::CoeffFn& cf1, const families::CoeffFn& cf2,
                             Window window = {});

// From-monomial function obtained by exact inversion of a to-monomial function's
// triangular matrix. Used for families whose inverse closed form is not given.
families::CoeffFn inverse_cf(const families::CoeffFn& to_monomial, Orientation o);

// Step-1 function whose triangular matrix is the alternating matrix of the
// step-2 function beta.
families::CoeffFn alternating_cf(const families::CoeffFn& beta, Orientation o);

CobMatrix matmul(const CobMatrix& a, const CobMatrix& b);
CobMatrix invert_triangular(const CobMatrix& m);
CobMatrix invert_general(const CobMatrix& m);
CobMatrix band_inverse(const CobMatrix& m);

// Serialization. Entries are exact "p/q" strings, row-major.
std::string to_text(const CobMatrix& m, int decimals = -1);
std::string to_csv(const CobMatrix& m);
CobMatrix from_csv(const std::string& text);
std::string to_json(const CobMatrix& m);
CobMatrix from_json(const std::string& text);

// Convenience for fixtures: parse rows of "p/q" strings.
Grid parse_grid(const std::vector<std::vector<std::string>>& rows);

}  // namespace cob
