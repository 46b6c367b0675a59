#include "cob/exact.hpp"

#include <cctype>
#include <sstream>

namespace cob::exact {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty rational");
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw DomainError("malformed rational: " + text);
    if (num[0] == '+') num = num.substr(1);
    Integer d(den);
    if (d == 0) throw DomainError("zero denominator: " + text);
    Rational q{Integer(num), d};
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int places) {
    if (places < 0) throw DomainError("negative decimal places");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Rational scaled = abs(q) * scale;
    Integer whole = scaled.get_num() / scaled.get_den();
    Rational frac = scaled - Rational(whole);
    if (frac * 2 >= 1) whole += 1;
    std::string digits = whole.get_str();
    if (places > 0) {
        if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
        digits.insert(digits.size() - places, ".");
    }
    return (q < 0 && whole != 0 ? "-" : "") + digits;
}

Integer factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer double_factorial(long k) {
    if (k < 0) throw DomainError("double factorial of negative integer");
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational binomial(const Rational& r, long k) {
    if (k < 0) throw DomainError("binomial with negative k");
    Rational num = 1;
    for (long i = 0; i < k; ++i) num *= r - i;
    Rational out = num / Rational(factorial(k));
    return out;
}

Rational pochhammer(const Rational& x, long k) {
    if (k < -1) throw DomainError("pochhammer count below -1");
    if (k == -1) {
        if (x == 1) throw DomainError("pochhammer (1)_{-1} divides by zero");
        return Rational(1) / (x - 1);
    }
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= x + i;
    return r;
}

Rational pow_int(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw DomainError("zero to a negative power");
        return Rational(1) / pow_int(base, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::string to_string(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        default: return "none";
    }
}

Polynomial::Polynomial(std::initializer_list<std::pair<const int, Rational>> init) {
    for (const auto& [d, c] : init) add_to(d, c);
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
    Polynomial p;
    p.set(degree, coeff);
    return p;
}

Polynomial Polynomial::constant(const Rational& c) { return monomial(0, c); }

int Polynomial::degree() const {
    if (terms_.empty()) throw DomainError("the zero polynomial has no degree");
    return terms_.rbegin()->first;
}

int Polynomial::min_degree() const {
    if (terms_.empty()) throw DomainError("the zero polynomial has no minimum degree");
    return terms_.begin()->first;
}

Rational Polynomial::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::set(int degree, const Rational& c) {
    if (degree < 0) throw DomainError("negative degree");
    if (c == 0)
        terms_.erase(degree);
    else
        terms_[degree] = c;
}

void Polynomial::add_to(int degree, const Rational& c) {
    if (c == 0) return;
    if (degree < 0) throw DomainError("negative degree");
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    int prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev >= 0) acc *= pow_int(x, prev - it->first);
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) acc *= pow_int(x, prev);
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [d, c] : o.terms_) add_to(d, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [d, c] : o.terms_) add_to(d, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) r.add_to(da + db, ca * cb);
    return r;
}

Polynomial Polynomial::shifted(int k) const {
    Polynomial r;
    for (const auto& [d, c] : terms_) r.set(d + k, c);
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [d, c] = *it;
        Rational mag = abs(c);
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        bool unit = mag == 1;
        if (!unit || d == 0) os << mag.get_str();
        if (d >= 1) os << "x";
        if (d >= 2) os << "^" << d;
        first = false;
    }
    return os.str();
}

Parity poly_parity(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("parity of the zero polynomial is undefined");
    int first = f.min_degree() & 1;
    for (const auto& [d, c] : f.terms())
        if ((d & 1) != first) return Parity::None;
    return first ? Parity::Odd : Parity::Even;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_scale(const Polynomial& f, const Rational& s) { return f * s; }
Rational poly_eval(const Polynomial& f, const Rational& x) { return f(x); }

Polynomial poly_truncate(const Polynomial& f, int u, int l) {
    if (l < 0 || u < l) throw DomainError("truncation window requires u >= l >= 0");
    if (f.is_zero()) throw EmptyTruncation("truncation of the zero polynomial");
    Parity p = poly_parity(f);
    if (p != Parity::None) {
        int want = p == Parity::Odd ? 1 : 0;
        if ((u & 1) != want || (l & 1) != want)
            throw DomainError("truncation bounds must share the polynomial's parity");
    }
    Polynomial r;
    for (const auto& [d, c] : f.terms())
        if (d >= l && d <= u) r.set(d, c);
    if (r.is_zero()) throw EmptyTruncation("truncation window contains no terms");
    return r;
}

Polynomial poly_compose_affine(const Polynomial& f, const Rational& a, const Rational& b) {
    Polynomial r;
    for (const auto& [d, c] : f.terms()) {
        // (a x + b)^d = sum_i C(d,i) a^i b^(d-i) x^i
        for (int i = 0; i <= d; ++i)
            r.add_to(i, c * Rational(binom(d, i)) * pow_int(a, i) * pow_int(b, d - i));
    }
    return r;
}

std::pair<Polynomial, Polynomial> poly_split_parity(const Polynomial& f) {
    Polynomial even, odd;
    for (const auto& [d, c] : f.terms()) (d % 2 ? odd : even).set(d, c);
    return {even, odd};
}

Polynomial parse_polynomial(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
    if (s.empty()) throw DomainError("empty polynomial text");
    Polynomial p;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw DomainError("expected '+' or '-' in polynomial: " + text);
        }
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        Rational c = start == i ? Rational(1) : parse_rational(s.substr(start, i - start));
        int degree = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            degree = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ds = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (ds == i) throw DomainError("missing exponent in polynomial: " + text);
                degree = std::stoi(s.substr(ds, i - ds));
            }
        } else if (start == i) {
            throw DomainError("malformed term in polynomial: " + text);
        }
        p.add_to(degree, c * sign);
        any = true;
    }
    return p;
}

std::vector<std::pair<int, std::string>> to_pairs(const Polynomial& f) {
    std::vector<std::pair<int, std::string>> out;
    for (const auto& [d, c] : f.terms()) out.emplace_back(d, c.get_str());
    return out;
}

Polynomial from_pairs(const std::vector<std::pair<int, std::string>>& pairs) {
    Polynomial p;
    for (const auto& [d, c] : pairs) p.add_to(d, parse_rational(c));
    return p;
}

}  // namespace cob::exact
