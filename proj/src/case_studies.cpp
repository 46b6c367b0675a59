#include "cob/case_studies.hpp"

namespace cob::case_studies {

using exact::binom;
using exact::factorial;
using exact::pow_int;

namespace {

Rational Q(const Integer& z) { return Rational(z); }

Rational sign(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void check_element(int n, int i, int j, const char* what) {
    if (n < 0 || i < 0 || i > n || j < 0 || j > n)
        throw DomainError(std::string(what) + ": indices must satisfy 0 <= i, j <= n (n=" + std::to_string(n) +
                          ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
}

bool is_nonpositive_integer(const Rational& q) { return q.get_den() == 1 && q <= 0; }

}  // namespace

Rational hypergeometric_3f2(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                            const Rational& b2) {
    long terms = -1;
    for (const Rational* a : {&a1, &a2, &a3})
        if (is_nonpositive_integer(*a)) {
            long t = -a->get_num().get_si();
            terms = terms < 0 ? t : std::min(terms, t);
        }
    if (terms < 0) throw DomainError("3F2 does not terminate: no numerator parameter is a non-positive integer");
    Rational sum = 0;
    Rational term = 1;
    for (long t = 0; t <= terms; ++t) {
        sum += term;
        if (t == terms) break;
        Rational den = (b1 + t) * (b2 + t) * (t + 1);
        if (den == 0) throw DomainError("3F2 denominator parameter reaches zero before the series terminates");
        term *= (a1 + t) * (a2 + t) * (a3 + t) / den;
    }
    return sum;
}

Rational lb_element(int n, int i, int j) {
    check_element(n, i, j, "lb_element");
    if (n == 0) return 1;
    return sign(j) * hypergeometric_3f2(-j, 1 + j, -i, 1, -n);
}

Rational lb_element_farouki(int n, int i, int j) {
    check_element(n, i, j, "lb_element_farouki");
    Rational sum = 0;
    for (int v = std::max(0, i + j - n); v <= std::min(i, j); ++v)
        sum += sign(j + v) * Q(binom(j, v) * binom(j, v) * binom(n - j, i - v));
    return sum / Q(binom(n, i));
}

Rational lb_alpha(int n, int j, int k) {
    check_element(n, j, k, "lb_alpha");
    Rational sum = 0;
    for (int v = 0; v <= std::min(n - k, j); ++v)
        sum += sign(v) * Q(binom(n - v, k) * factorial(j + v)) / Q(factorial(j - v) * factorial(v) * factorial(v));
    return sign(j) * sum / Q(binom(n, k));
}

Rational lb_element_pfq1(int n, int i, int j) {
    check_element(n, i, j, "lb_element_pfq1");
    if (n < i + j) throw DomainError("lb_element_pfq1 holds only when n >= i + j");
    return sign(j) * Q(binom(n - j, i)) / Q(binom(n, i)) * hypergeometric_3f2(-j, -j, -i, 1, n - j - i + 1);
}

CobMatrix lb_matrix(int n) {
    if (n < 0) throw DomainError("lb_matrix needs n >= 0");
    Grid g(n + 1, std::vector<Rational>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) g[i][j] = lb_element(n, i, j);
    CobMatrix m = make_matrix(std::move(g), Shape::Full);
    m.domain_basis = family_basis(Family::ShiftedLegendre, Orientation::Descending, 0, n);
    m.range_basis = family_basis(Family::Bernstein, Orientation::Ascending, 0, n);
    return m;
}

CobMatrix lb_matrix_composed(int n) {
    if (n < 0) throw DomainError("lb_matrix_composed needs n >= 0");
    MatrixKind kind{Orientation::Descending, Orientation::Ascending, ParityKind::NotDefinite};
    auto cf = compose_cf(kind, families::cf_monomial_to_bernstein_asc(), families::cf_shifted_legendre_to_monomial(),
                         Window{0, n});
    return build_mixed_matrix(kind, cf, n, 0);
}

std::vector<Rational> lb_column_step(int n, int j, const std::vector<Rational>& col_j,
                                     const std::vector<Rational>& col_j1) {
    if (j < 0 || j > n - 2) throw DomainError("lb_column_step needs 0 <= j <= n - 2");
    if (static_cast<int>(col_j.size()) != n + 1 || static_cast<int>(col_j1.size()) != n + 1)
        throw DomainError("lb_column_step: columns must have n + 1 entries");
    Rational lead = (2 + j) * (1 + j - n);
    std::vector<Rational> out(n + 1);
    for (int i = 0; i <= n; ++i)
        out[i] = ((1 + j) * (2 + j + n) * col_j[i] - (3 + 2 * j) * (2 * i - n) * col_j1[i]) / lead;
    return out;
}

// The middle coefficient is 2 + 4i + 2i^2 + j + j^2 - 3n - 2in. A leading
// constant of 1 instead of 2 already fails at i = j = 0.
std::vector<Rational> lb_row_step(int n, int i, const std::vector<Rational>& row_i,
                                  const std::vector<Rational>& row_i1) {
    if (i < 0 || i > n - 2) throw DomainError("lb_row_step needs 0 <= i <= n - 2");
    if (static_cast<int>(row_i.size()) != n + 1 || static_cast<int>(row_i1.size()) != n + 1)
        throw DomainError("lb_row_step: rows must have n + 1 entries");
    Rational lead = (2 + i) * (1 + i - n);
    std::vector<Rational> out(n + 1);
    for (int j = 0; j <= n; ++j) {
        long mid = 2 + 4L * i + 2L * i * i + j + 1L * j * j - 3L * n - 2L * i * n;
        out[j] = (-(1 + i) * (i - n) * row_i[j] + mid * row_i1[j]) / lead;
    }
    return out;
}

Rational reccol_residual(int n, int i, int j) {
    if (j > n - 2) throw DomainError("reccol_residual needs j <= n - 2");
    return (1 + j) * (2 + j + n) * lb_element(n, i, j) - (3 + 2 * j) * (2 * i - n) * lb_element(n, i, j + 1) -
           (2 + j) * (1 + j - n) * lb_element(n, i, j + 2);
}

Rational recrow_residual(int n, int i, int j) {
    if (i > n - 2) throw DomainError("recrow_residual needs i <= n - 2");
    long mid = 2 + 4L * i + 2L * i * i + j + 1L * j * j - 3L * n - 2L * i * n;
    return -(1 + i) * (i - n) * lb_element(n, i, j) + mid * lb_element(n, i + 1, j) -
           (2 + i) * (1 + i - n) * lb_element(n, i + 2, j);
}

Rational receven_residual(int n, int l) {
    if (l < 0 || n < 2 * l) throw DomainError("receven_residual needs 0 <= 2l <= n");
    auto s = families::cf_shifted_legendre_to_monomial();
    return -2 * (-1 + 2 * l - 2 * n) * (-1 + l - n) * s(n, 0, 2 * l) +
           (-1 + 2 * l - n) * (-1 + 2 * l - n) * s(n + 1, 0, 2 * l);
}

Rational recodd_residual(int n, int l) {
    if (l < 0 || n < 2 * l + 1) throw DomainError("recodd_residual needs 0 <= 2l + 1 <= n");
    auto s = families::cf_shifted_legendre_to_monomial();
    return -2 * (-1 + 2 * l - 2 * n) * (l - n) * s(n, 0, 2 * l + 1) + (2 * l - n) * (2 * l - n) * s(n + 1, 0, 2 * l + 1);
}

Polynomial lb_lagrange_column(int n, int j) {
    check_element(n, 0, j, "lb_lagrange_column");
    Polynomial out;
    for (int v = 0; v <= n; ++v) {
        Polynomial basis = Polynomial::constant(1);
        Rational den = 1;
        for (int u = 0; u <= n; ++u) {
            if (u == v) continue;
            basis = basis * Polynomial{{1, Rational(1)}, {0, Rational(-u)}};
            den *= v - u;
        }
        out += basis * Rational(lb_element(n, v, j) / den);
    }
    return out;
}

Rational lb_penultimate(int n, int i) {
    if (n < 1) throw DomainError("lb_penultimate needs n >= 1");
    check_element(n, i, 0, "lb_penultimate");
    return sign(n + i) * exact::make_rational(2 * i - n, n) * Q(binom(n, i));
}

Rational lb_last(int n, int i) {
    check_element(n, i, 0, "lb_last");
    return sign(n + i) * Q(binom(n, i));
}

bool lb_has_column_closed_form(int n, int j) {
    if (j < 0 || j > n) return false;
    return j <= 4 || j >= n - 3;
}

// Column 3 carries the factor (2i - n). The factor (n - 2i) gives +1 at i = 0,
// where row 0 is (-1)^j.
Rational lb_column_closed_form(int n, int j, int i) {
    check_element(n, i, j, "lb_column_closed_form");
    const long N = n, I = i;
    if (j == 0) return 1;
    if (j == 1) return exact::make_rational(2 * I, N) - 1;
    if (j == n) return lb_last(n, i);
    if (j == n - 1) return lb_penultimate(n, i);
    if (j == 2) return exact::make_rational(N * N - (6 * I + 1) * N + 6 * I * I, N * (N - 1));
    if (j == n - 2)
        return sign(n + i) * Q(binom(n, i)) / (N * N * (N - 1)) *
               (N * N * N - (4 * I + 1) * N * N + 2 * I * (2 * I + 1) * N - 2 * I * I);
    if (j == 3) return exact::make_rational((2 * I - N) * (N * N - (10 * I + 3) * N + 10 * I * I + 2), N * (N - 1) * (N - 2));
    if (j == n - 3)
        return sign(n + i - 1) * Q(binom(n, i)) / (N * N * (N - 1) * (N - 2)) *
               (N * N * N - (4 * I + 3) * N * N + (2 * I + 1) * (2 * I + 2) * N - 6 * I * I) * (N - 2 * I);
    if (j == 4) {
        Integer num = Integer(N * N * N * N) - (20 * I + 6) * N * N * N + (90 * I * I + 30 * I + 11) * N * N -
                      (140 * I * I * I + 30 * I * I + 50 * I + 6) * N + (70 * I * I * I * I + 50 * I * I);
        return Rational(num) / (N * (N - 1) * (N - 2) * (N - 3));
    }
    throw DomainError("no closed form for column " + std::to_string(j) + " of the degree-" + std::to_string(n) +
                      " matrix");
}

Rational lb_row_closed_form(int n, int r, int j) {
    check_element(n, r, j, "lb_row_closed_form");
    const long N = n, J = j;
    Rational t1 = exact::make_rational(J * (J + 1), N);
    switch (r) {
        case 0: return sign(j);
        case 1: return sign(j) * (1 - t1);
        case 2:
            if (n < 2) break;
            return sign(j) * (1 - 2 * t1 + exact::make_rational((1 - J) * J * (1 + J) * (2 + J), 2 * (1 - N) * N));
        case 3:
            if (n < 3) break;
            return sign(j) * (1 - 3 * t1 + exact::make_rational(3 * (1 - J) * J * (1 + J) * (2 + J), 2 * (1 - N) * N) -
                              exact::make_rational((1 - J) * (2 - J) * J * (1 + J) * (2 + J) * (3 + J), 6 * (1 - N) * (2 - N) * N));
        default: break;
    }
    throw DomainError("no closed form for row " + std::to_string(r) + " of the degree-" + std::to_string(n) +
                      " matrix");
}

std::pair<Rational, Rational> lb_legendre_difference_identity(int n, const Rational& x) {
    if (n < 1) throw DomainError("lb_legendre_difference_identity needs n >= 1");
    Rational lhs = families::classical_poly(Family::Legendre, n)(x) - families::classical_poly(Family::Legendre, n - 1)(x);
    Rational sum = 0;
    for (int v = 0; v <= n; ++v)
        sum += v * Q(binom(n, v) * binom(n, v)) * pow_int(x + 1, n - v) * pow_int(x - 1, v);
    return {lhs, pow_int(2, 1 - n) / n * sum};
}

Rational alqudah_coeff(int n, int k) {
    check_element(n, k, 0, "alqudah_coeff");
    Rational h = exact::make_rational(2 * n + 1, 2);
    return sign(k) * (n + 1) * exact::binomial(h, n - k) * exact::binomial(h, k) /
           (Q(binom(n, k)) * exact::binomial(h, n));
}

Rational alqudah_alpha3(int n, int j, int k) {
    check_element(n, j, k, "alqudah_alpha3");
    Rational sum = 0;
    for (int v = 0; v <= std::min(n - k, j); ++v) {
        Rational inner = 0;
        for (int l = 0; l <= (j - v) / 2; ++l)
            inner += Q(binom(j - 2 * l, j - v - 2 * l) * binom(j - l, l)) * sign(j - v - l) * pow_int(2, j - 2 * l + v);
        sum += Q(binom(n - v, k)) / Q(binom(n, k)) * inner;
    }
    return sum;
}

Rational alqudah_alpha3_diagonal(int n, int k) {
    check_element(n, k, 0, "alqudah_alpha3_diagonal");
    Rational sum = 0;
    for (int v = 0; v <= n - k; ++v) {
        Rational inner = 0;
        for (int l = 0; l <= (n - v) / 2; ++l) inner += pow_int(-4, -l) * Q(binom(n - 2 * l, v) * binom(n - l, l));
        sum += pow_int(-2, v) * Q(binom(n - v, k)) / Q(binom(n, k)) * inner;
    }
    return pow_int(-2, n) * sum;
}

Rational alqudah_reck_residual(int n, int k) {
    if (k < 0 || k >= n) throw DomainError("alqudah_reck_residual needs 0 <= k < n");
    return (-1 + 2 * k - 2 * n) * alqudah_coeff(n, k) + (-3 - 2 * k) * alqudah_coeff(n, k + 1);
}

std::string_view lb_gosper_note() {
    return "Gosper's algorithm finds no closed form for the shifted Legendre to Bernstein coefficient "
           "alpha(n, j, k) over general (n, j, k). None is implemented: lb_element evaluates the terminating "
           "3F2 sum, and closed forms exist here only for the listed rows and columns.";
}

}  // namespace cob::case_studies
