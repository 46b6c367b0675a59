// Finite polynomial bases: metadata and expansion into explicit polynomials.
#pragma once

#include "cob/families.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cob {

enum class Orientation { Ascending, Descending };

std::string to_string(Orientation o);

// Metadata for one finite basis spanning {x^m, x^(m+d), ..., x^n}.
//
// Element j of a descending basis has maximum degree m + d*j and minimum
// degree m; element j of an ascending basis has minimum degree m + d*j and
// maximum degree n. Alternating and superposed bases always use d = 1.
struct BasisSpec {
    Family family = Family::Monomial;
    Orientation orientation = Orientation::Descending;
    int m = 0;
    int n = 0;
    int d = 1;
    bool alternating = false;
    bool superposed = false;
    int sup_sign = 1;  // f_j = e_j + sup_sign * e_(j -/+ 1)
    std::optional<families::TruncSource> trunc;
    std::vector<Polynomial> custom;  // explicit elements when family == Custom
    std::string label;

    friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

// Number of elements: (n - m)/d + 1.
int basis_size(const BasisSpec& spec);

// True when both specs describe the same monomial span.
bool same_span(const BasisSpec& a, const BasisSpec& b);

BasisSpec monomial_basis(int m, int n, int d = 1);
BasisSpec family_basis(Family f, Orientation o, int m, int n);
BasisSpec truncated_basis(Family f, Orientation o, int m, int n, families::TruncSource src);
BasisSpec alternating_basis(Family f, Orientation o, int m, int n, bool truncate = false);
BasisSpec superposed_basis(Family f, Orientation o, int m, int n, int sign = 1, bool truncate = false);
BasisSpec custom_basis(std::vector<Polynomial> polys, Orientation o, std::string label = "custom");

// Expands every element into an explicit polynomial, in basis order. Uses only
// the defining constructors, recurrences and truncation.
std::vector<Polynomial> basis_polynomials(const BasisSpec& spec);

// Checks the window/step invariants and that the elements span the window
// exactly and are linearly independent. Throws DomainError otherwise.
void validate_basis(const BasisSpec& spec);

// Short human-readable descriptor, e.g. "zernike:asc[3..9]".
std::string describe(const BasisSpec& spec);

}  // namespace cob
