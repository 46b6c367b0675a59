// Exact scalars, combinatorial helpers and the sparse polynomial type.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cob {

using Rational = mpq_class;
using Integer = mpz_class;

struct CobError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an argument lies outside the documented domain of an operation.
struct DomainError : CobError {
    using CobError::CobError;
};

// Raised when a truncation window does not overlap the polynomial's degrees.
struct EmptyTruncation : CobError {
    using CobError::CobError;
};

namespace exact {

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Display-only decimal rounding to the given number of places (half away from zero).
std::string to_decimal(const Rational& q, int places);

Integer factorial(long n);
Integer double_factorial(long k);

// Integer binomial with the usual convention: zero unless 0 <= k <= n.
Integer binom(long n, long k);

// Generalized binomial r(r-1)...(r-k+1)/k! for k >= 0.
Rational binomial(const Rational& r, long k);

// Rising factorial (x)_k for k >= -1, with (x)_{-1} = 1/(x-1).
Rational pochhammer(const Rational& x, long k);

Rational pow_int(const Rational& base, long e);

enum class Parity { Even, Odd, None };

std::string to_string(Parity p);

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<std::pair<const int, Rational>> init);

    static Polynomial monomial(int degree, const Rational& coeff = 1);
    static Polynomial constant(const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    int min_degree() const;
    Rational coeff(int degree) const;
    void set(int degree, const Rational& c);
    void add_to(int degree, const Rational& c);
    const std::map<int, Rational>& terms() const { return terms_; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Multiply by x^k.
    Polynomial shifted(int k) const;

    std::string to_string() const;

private:
    std::map<int, Rational> terms_;
};

Parity poly_parity(const Polynomial& f);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& f, const Rational& s);
Rational poly_eval(const Polynomial& f, const Rational& x);

// f(x)_{u,l}: drop terms of degree above u or below l.
Polynomial poly_truncate(const Polynomial& f, int u, int l);

// f(a*x + b), expanded.
Polynomial poly_compose_affine(const Polynomial& f, const Rational& a, const Rational& b);

// Split into (even part, odd part).
std::pair<Polynomial, Polynomial> poly_split_parity(const Polynomial& f);

// Parse "16x^7-12x^5+5x^4+3x^2", "1/2x^3 - x", "3/4", "x"; spaces and '*' are allowed.
Polynomial parse_polynomial(const std::string& text);

// Machine form: ordered (degree, "p/q") pairs, ascending by degree.
std::vector<std::pair<int, std::string>> to_pairs(const Polynomial& f);
Polynomial from_pairs(const std::vector<std::pair<int, std::string>>& pairs);

}  // namespace exact

using exact::Parity;
using exact::Polynomial;

}  // namespace cob
