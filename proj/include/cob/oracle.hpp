// Brute-force change-of-basis matrices from explicit polynomial expansions,
// used as ground truth for the coefficient-function formulas.
#pragma once

#include "cob/matrices.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cob::oracle {

struct Mismatch {
    int i = 0;
    int j = 0;
    Rational expected;
    Rational got;
};

struct OracleReport {
    bool matched = true;
    std::optional<Mismatch> first_mismatch;
    std::string to_string() const;
};

// Coordinates of each polynomial over the monomials of `span`, one column per
// polynomial. Throws DomainError if a term lies outside the span.
Grid monomial_coordinates(const std::vector<Polynomial>& polys, const BasisSpec& span);

// Expands both bases into monomials and solves for the coordinates of every
// `from` element in the `to` basis by exact elimination.
CobMatrix oracle_matrix(const BasisSpec& from, const BasisSpec& to);

OracleReport compare(const CobMatrix& formula, const CobMatrix& oracle);

// One formula route paired with the bases the oracle should use for it.
struct Binding {
    std::string name;
    MatrixKind kind;
    std::function<bool(int m, int n)> valid;
    std::function<CobMatrix(int m, int n)> formula;
    std::function<BasisSpec(int m, int n)> from;
    std::function<BasisSpec(int m, int n)> to;
};

// Every coefficient function of the library and every matrix kind, each as a binding.
const std::vector<Binding>& catalogue();

struct SweepResult {
    int windows = 0;
    int failures = 0;
    std::vector<std::string> messages;  // one per failing (binding, window)
    bool ok() const { return failures == 0; }
};

// Formula versus oracle for every binding and every valid window with n <= max_n.
SweepResult sweep(int max_n, const std::string& filter = "");

}  // namespace cob::oracle
