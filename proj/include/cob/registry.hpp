// The change-of-basis groupoid: every conversion is routed through the monomial hub.
#pragma once

#include "cob/matrices.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace cob::registry {

struct CoordVector {
    BasisSpec basis;
    std::vector<Rational> coords;  // one per basis element, in basis order
};

// Matrix from the basis to the monomials of its span.
CobMatrix hub_matrix(const BasisSpec& spec);

// Matrix mapping coordinates in `from` to coordinates in `to`:
// (to <- monomials) * (monomials <- from).
CobMatrix cob(const BasisSpec& from, const BasisSpec& to);

// Coordinates of p in the basis. Throws DomainError naming the first degree or
// parity that lies outside the span.
CoordVector convert(const Polynomial& p, const BasisSpec& to);

Polynomial reconstruct(const CoordVector& v);

// Converts p into a family basis on the tightest window(s) holding it. A
// polynomial without definite parity aimed at a definite-parity family is
// split into its even and odd parts, each converted separately, unless
// `strict` is set, in which case that case is an error.
std::vector<CoordVector> convert_parts(const Polynomial& p, Family family, Orientation o, bool strict = false);

struct LawEntry {
    std::string law;
    bool passed = true;
    std::string detail;
};

struct LawReport {
    std::vector<LawEntry> entries;
    bool all_passed() const;
    std::string to_string() const;
};

// Identity, inverse, closure, associativity, triangularity and alternation
// invariance, and the truncation functor laws over the given bases.
LawReport verify_category(const std::vector<BasisSpec>& bases);

using BasisId = int;

class Registry {
public:
    BasisId add(const BasisSpec& spec);
    BasisSpec spec(BasisId id) const;
    std::size_t size() const;

    CobMatrix cob(BasisId from, BasisId to) const;
    CoordVector convert(const Polynomial& p, BasisId to) const;
    LawReport verify_category(const std::vector<BasisId>& ids) const;

private:
    mutable std::mutex mu_;
    std::vector<BasisSpec> specs_;
};

}  // namespace cob::registry
