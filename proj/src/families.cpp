#include "cob/families.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace cob::families {

using exact::binom;
using exact::factorial;
using exact::pochhammer;
using exact::pow_int;

namespace {

Rational Q(const Integer& z) { return Rational(z); }

Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

void check_window(int n, int m, int k, int d, const std::string& who) {
    require(m >= 0 && n >= m, who + ": window requires 0 <= m <= n");
    require(d == 1 || (n - m) % 2 == 0, who + ": n and m must share parity");
    require(k >= 0 && k <= (n - m) / d, who + ": k outside 0.." + std::to_string((n - m) / d));
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::Monomial: return "monomial";
        case Family::Bernstein: return "bernstein";
        case Family::ZernikeRadial: return "zernike";
        case Family::ChebyshevT: return "chebyshev-t";
        case Family::ChebyshevU: return "chebyshev-u";
        case Family::ChebyshevV: return "chebyshev-v";
        case Family::Legendre: return "legendre";
        case Family::ShiftedLegendre: return "shifted-legendre";
        case Family::Laguerre: return "laguerre";
        case Family::HermitePhysicist: return "hermite";
        case Family::Custom: return "custom";
    }
    return "unknown";
}

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> table = {
        {"monomial", Family::Monomial},        {"x", Family::Monomial},
        {"bernstein", Family::Bernstein},      {"b", Family::Bernstein},
        {"zernike", Family::ZernikeRadial},    {"r", Family::ZernikeRadial},
        {"chebyshev-t", Family::ChebyshevT},   {"t", Family::ChebyshevT},
        {"chebyshev-u", Family::ChebyshevU},   {"u", Family::ChebyshevU},
        {"chebyshev-v", Family::ChebyshevV},   {"v", Family::ChebyshevV},
        {"legendre", Family::Legendre},        {"p", Family::Legendre},
        {"shifted-legendre", Family::ShiftedLegendre}, {"pstar", Family::ShiftedLegendre},
        {"laguerre", Family::Laguerre},        {"l", Family::Laguerre},
        {"hermite", Family::HermitePhysicist}, {"h", Family::HermitePhysicist},
    };
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown family: " + name);
    return it->second;
}

bool has_definite_parity(Family f) {
    switch (f) {
        case Family::ZernikeRadial:
        case Family::ChebyshevT:
        case Family::ChebyshevU:
        case Family::Legendre:
        case Family::HermitePhysicist: return true;
        default: return false;
    }
}

int step(Family f) { return has_definite_parity(f) ? 2 : 1; }

bool is_classical(Family f) {
    switch (f) {
        case Family::ChebyshevT:
        case Family::ChebyshevU:
        case Family::ChebyshevV:
        case Family::Legendre:
        case Family::ShiftedLegendre:
        case Family::Laguerre:
        case Family::HermitePhysicist: return true;
        default: return false;
    }
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::ToMonomial: return "to-monomial";
        case Direction::FromMonomialAscending: return "from-monomial-asc";
        case Direction::FromMonomialDescending: return "from-monomial-desc";
        case Direction::Composite: return "composite";
    }
    return "unknown";
}

Polynomial bernstein_poly(int n, int m) {
    require(m >= 0 && m <= n, "bernstein_poly requires 0 <= m <= n");
    Polynomial p;
    for (int l = m; l <= n; ++l) p.set(l, Q(binom(n, l) * binom(l, m)) * sign(l - m));
    return p;
}

Polynomial zernike_poly(int n, int m) {
    require(m >= 0 && m <= n, "zernike_poly requires 0 <= m <= n");
    require((n - m) % 2 == 0, "zernike_poly requires n and m of equal parity");
    Polynomial p;
    int v = (n - m) / 2;
    for (int k = 0; k <= v; ++k)
        p.set(n - 2 * k, Q(binom(n - k, k) * binom(n - 2 * k, v - k)) * sign(k));
    return p;
}

namespace {

std::mutex cache_mutex;
std::map<Family, std::vector<Polynomial>> cache;

Polynomial x_poly() { return Polynomial::monomial(1); }

std::vector<Polynomial>& grow(Family f, int n) {
    auto& seq = cache[f];
    auto push_until = [&](auto next) {
        while (static_cast<int>(seq.size()) <= n) seq.push_back(next(static_cast<int>(seq.size())));
    };
    const Polynomial one = Polynomial::constant(1);
    const Polynomial x = x_poly();
    switch (f) {
        case Family::ChebyshevT:
        case Family::ChebyshevU:
            push_until([&](int k) {
                if (k == 0) return one;
                if (k == 1) return f == Family::ChebyshevT ? x : x * Rational(2);
                return seq[k - 1].shifted(1) * Rational(2) - seq[k - 2];
            });
            break;
        case Family::Legendre:
            push_until([&](int k) {
                if (k == 0) return one;
                if (k == 1) return x;
                // k P_k = (2k-1) x P_{k-1} - (k-1) P_{k-2}
                return (seq[k - 1].shifted(1) * Rational(2 * k - 1) - seq[k - 2] * Rational(k - 1)) *
                       Rational(1, k);
            });
            break;
        case Family::Laguerre:
            push_until([&](int k) {
                if (k == 0) return one;
                if (k == 1) return one - x;
                // k L_k = (2k-1-x) L_{k-1} - (k-1) L_{k-2}
                Polynomial a = seq[k - 1] * Rational(2 * k - 1) - seq[k - 1].shifted(1);
                return (a - seq[k - 2] * Rational(k - 1)) * Rational(1, k);
            });
            break;
        case Family::HermitePhysicist:
            push_until([&](int k) {
                if (k == 0) return one;
                if (k == 1) return x * Rational(2);
                return seq[k - 1].shifted(1) * Rational(2) - seq[k - 2] * Rational(2 * (k - 1));
            });
            break;
        case Family::ChebyshevV: {
            auto& u = grow(Family::ChebyshevU, n);
            push_until([&](int k) { return k == 0 ? one : u[k] - u[k - 1]; });
            break;
        }
        case Family::ShiftedLegendre: {
            auto& p = grow(Family::Legendre, n);
            push_until([&](int k) { return exact::poly_compose_affine(p[k], 2, -1); });
            break;
        }
        default: throw DomainError("classical_poly: not a classical family: " + to_string(f));
    }
    return seq;
}

}  // namespace

Polynomial classical_poly(Family f, int n) {
    require(n >= 0, "classical_poly requires n >= 0");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return grow(f, n)[n];
}

CoeffFn cf_bernstein_to_monomial() {
    return {Family::Bernstein, Direction::ToMonomial, 1, "bernstein->monomial", [](int n, int m, int k) -> Rational {
                check_window(n, m, k, 1, "bernstein->monomial");
                return Q(binom(n, n - k) * binom(n - k, m)) * sign(n - m - k);
            }};
}

CoeffFn cf_monomial_to_bernstein_asc() {
    return {Family::Bernstein, Direction::FromMonomialAscending, 1, "monomial->bernstein(asc)",
            [](int n, int m, int k) -> Rational {
                check_window(n, m, k, 1, "monomial->bernstein(asc)");
                return Q(binom(n - m, k)) / Q(binom(n, k));
            }};
}

CoeffFn cf_monomial_to_bernstein_desc() {
    return {Family::Bernstein, Direction::FromMonomialDescending, 1, "monomial->bernstein(desc)",
            [](int n, int m, int k) -> Rational {
                check_window(n, m, k, 1, "monomial->bernstein(desc)");
                return sign(n - m - k) * Q(binom(n, k)) / Q(binom(n, m));
            }};
}

CoeffFn cf_zernike_to_monomial() {
    return {Family::ZernikeRadial, Direction::ToMonomial, 2, "zernike->monomial", [](int n, int m, int k) -> Rational {
                check_window(n, m, k, 2, "zernike->monomial");
                return Q(binom(n - k, k) * binom(n - 2 * k, (n - m) / 2 - k)) * sign(k);
            }};
}

CoeffFn cf_monomial_to_zernike_desc() {
    return {Family::ZernikeRadial, Direction::FromMonomialDescending, 2, "monomial->zernike(desc)",
            [](int n, int m, int k) -> Rational {
                check_window(n, m, k, 2, "monomial->zernike(desc)");
                return exact::make_rational(n - 2 * k + 1, n - k + 1) * Q(binom(n, k)) / Q(binom(n, (n - m) / 2));
            }};
}

CoeffFn cf_monomial_to_zernike_asc() {
    return {Family::ZernikeRadial, Direction::FromMonomialAscending, 2, "monomial->zernike(asc)",
            [](int n, int m, int k) -> Rational {
                check_window(n, m, k, 2, "monomial->zernike(asc)");
                int v = (n - m) / 2;
                Rational denom = Q(factorial(v - k) * binom(v + m, v));
                // At k = v the product (m+1)_{-1} (n-2k) equals (m+1)_{-1} m = 1; this
                // limit also covers m = 0 where the pochhammer factor alone is singular.
                Rational head = k == v ? Rational(1)
                                       : pochhammer(m + 1, v - k - 1) * Rational(n - 2 * k);
                return sign(k) * head / denom;
            }};
}

namespace {

// Monomials to Jacobi P^{(m,0)}, written against the Zernike indices (n, m).
Rational jacobi_beta1(int n, int m, int k) {
    int v = (n - m) / 2;
    Rational sum = 0;
    for (int l = 0; l <= k; ++l) {
        Rational num = pow_int(2, v - l) * Q(binom(v, v - l)) * sign(l) * pochhammer(v + 1 - k, k - l) *
                       pochhammer(k - l + 1, v - k);
        Rational den = pochhammer(m + 2, v - l) * pochhammer(v - l + m + 2, v - k);
        sum += num / den;
    }
    return Rational(n - 2 * k + 1) * pochhammer(m + 2, v - k - 1) * sum;
}

}  // namespace

CoeffFn cf_monomial_to_zernike_asc_jacobi() {
    return {Family::ZernikeRadial, Direction::FromMonomialDescending, 2, "monomial->zernike(jacobi)",
            [](int n, int m, int k) -> Rational {
                check_window(n, m, k, 2, "monomial->zernike(jacobi)");
                int v = (n - m) / 2;
                Rational sum = 0;
                for (int l = 0; l <= k; ++l) sum += Q(binom(v, l)) * sign(l) * jacobi_beta1(n - 2 * l, m, k - l);
                return sign(k) * pow_int(2, -v) * sum;
            }};
}

CoeffFn cf_classical_to_monomial(Family f) {
    if (!is_classical(f)) throw DomainError("not a classical family: " + to_string(f));
    int d = step(f);
    return {f, Direction::ToMonomial, d, to_string(f) + "->monomial", [f, d](int n, int m, int k) -> Rational {
                require(n >= 0 && k >= 0 && n - d * k >= 0 && n - d * k >= m,
                        to_string(f) + "->monomial: k outside the window");
                return classical_poly(f, n).coeff(n - d * k);
            }};
}

std::pair<CoeffFn, CoeffFn> cf_laguerre() {
    CoeffFn to = cf_classical_to_monomial(Family::Laguerre);
    CoeffFn from{Family::Laguerre, Direction::FromMonomialDescending, 1, "monomial->laguerre(desc)",
                 [](int n, int m, int k) -> Rational {
                     check_window(n, m, k, 1, "monomial->laguerre");
                     return pochhammer(-n, n - k) * pochhammer(n - k + 1, k);
                 }};
    return {to, from};
}

CoeffFn cf_shifted_legendre_to_monomial() {
    return {Family::ShiftedLegendre, Direction::ToMonomial, 1, "shifted-legendre->monomial",
            [](int n, int m, int k) -> Rational {
                require(k >= 0 && k <= n && n - k >= m, "shifted-legendre->monomial: k outside the window");
                return sign(k) * Q(factorial(2 * n - k)) / Q(factorial(k) * factorial(n - k) * factorial(n - k));
            }};
}

CoeffFn cf_shifted_legendre_to_monomial_sum() {
    return {Family::ShiftedLegendre, Direction::ToMonomial, 1, "shifted-legendre->monomial(sum)",
            [](int n, int m, int k) -> Rational {
                require(k >= 0 && k <= n && n - k >= m, "shifted-legendre->monomial: k outside the window");
                Rational sum = 0;
                for (int v = 0; v <= k / 2; ++v)
                    sum += Q(binom(n - 2 * v, k - 2 * v) * binom(2 * n - 2 * v, n) * binom(n, v)) * sign(k - v);
                return pow_int(2, -k) * sum;
            }};
}

CoeffFn cf_chebyshev_v_to_monomial() {
    return {Family::ChebyshevV, Direction::ToMonomial, 1, "chebyshev-v->monomial", [](int n, int m, int k) -> Rational {
                require(k >= 0 && k <= n && n - k >= m, "chebyshev-v->monomial: k outside the window");
                Rational sum = 0;
                for (int l = 0; l <= k; ++l)
                    sum += pow_int(2, l) * pochhammer(1 + n, n - l) * pochhammer(Rational(1, 2) - n, l) /
                           Q(factorial(k - l) * factorial(l));
                return pow_int(2, n) / Q(binom(2 * n, n)) * sign(k) / Q(factorial(n - k)) * sum;
            }};
}

CoeffFn cf_shifted_chebyshev_u_to_monomial() {
    return {Family::Custom, Direction::ToMonomial, 1, "shifted-chebyshev-u->monomial", [](int n, int m, int k) -> Rational {
                require(k >= 0 && k <= n && n - k >= m, "shifted-chebyshev-u->monomial: k outside the window");
                Rational sum = 0;
                for (int v = 0; v <= k / 2; ++v)
                    sum += Q(binom(n - 2 * v, k - 2 * v) * binom(n - v, v)) * sign(k - v) *
                           pow_int(2, 2 * (n - v) - k);
                return sum;
            }};
}

CoeffFn cf_hermite_band(int N) {
    return {Family::HermitePhysicist, Direction::FromMonomialAscending, 2,
            "monomial->hermite" + std::to_string(N) + "(asc truncations)", [N](int n, int m, int k) -> Rational {
                require(n == N, "hermite band: window top must equal the source degree");
                check_window(n, m, k, 2, "hermite band");
                int v = (n - m) / 2;
                auto diag = [n](int kk) -> Rational {
                    return sign(kk) * pow_int(2, 2 * kk - n) * Q(factorial(kk) * factorial(n - 2 * kk)) /
                           Q(factorial(n));
                };
                if (k == v) return diag(k);
                if (k == v - 1) return -diag(k + 1);
                return Rational(0);
            }};
}

CoeffFn cf_truncated(const CoeffFn& base, TruncSource src) {
    if (base.direction != Direction::ToMonomial || !is_classical(base.family))
        throw DomainError("truncation applies to classical to-monomial functions only");
    int d = base.d;
    std::string label = src.fixed ? "@" + std::to_string(src.value) : "@+" + std::to_string(src.value);
    return {base.family, Direction::ToMonomial, d, base.name + label, [base, src, d](int n, int m, int k) -> Rational {
                int s = src.fixed ? src.value : n + src.value;
                int shift = s - n;
                require(shift >= 0 && shift % d == 0, "truncated family: source degree incompatible with window");
                require(k >= 0 && n - d * k >= m, "truncated family: k outside the window");
                return base(s, 0, k + shift / d);
            }};
}

}  // namespace cob::families
