#include "cob/matrices.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace cob {

using families::CoeffFn;
using families::Direction;

std::string to_string(Shape s) {
    switch (s) {
        case Shape::UpperTri: return "upper";
        case Shape::LowerTri: return "lower";
        case Shape::Full: return "full";
        case Shape::AltUpper: return "alt-upper";
        case Shape::AltLower: return "alt-lower";
        case Shape::Band: return "band";
    }
    return "full";
}

Shape parse_shape(const std::string& text) {
    for (Shape s : {Shape::UpperTri, Shape::LowerTri, Shape::Full, Shape::AltUpper, Shape::AltLower, Shape::Band})
        if (to_string(s) == text) return s;
    throw DomainError("unknown shape: " + text);
}

std::string to_string(const MatrixKind& k) {
    return to_string(k.domain) + "->" + to_string(k.range) +
           (k.parity == ParityKind::Definite ? "/parity" : "/no-parity");
}

std::vector<MatrixKind> all_kinds() {
    std::vector<MatrixKind> out;
    for (auto p : {ParityKind::NotDefinite, ParityKind::Definite})
        for (auto dom : {Orientation::Descending, Orientation::Ascending})
            for (auto rng : {Orientation::Descending, Orientation::Ascending}) out.push_back({dom, rng, p});
    return out;
}

namespace {

Grid zeros(int dim) { return Grid(dim, std::vector<Rational>(dim)); }

bool is_upper(const Grid& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (g[i][j] != 0) return false;
    return true;
}

bool is_lower(const Grid& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g[i][j] != 0) return false;
    return true;
}

bool is_alternating(const Grid& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if ((i + j) % 2 == 1 && g[i][j] != 0) return false;
    return true;
}

bool nonzero_diagonal(const Grid& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i][i] == 0) return false;
    return true;
}

bool upper_like(Shape s) { return s == Shape::UpperTri || s == Shape::AltUpper; }
bool lower_like(Shape s) { return s == Shape::LowerTri || s == Shape::AltLower; }
bool alt(Shape s) { return s == Shape::AltUpper || s == Shape::AltLower; }

// Metadata for the side of a matrix described by a coefficient function.
BasisSpec side_spec(const CoeffFn& cf, Orientation o, int m, int n, int d) {
    if (cf.family != Family::Custom && cf.family != Family::Monomial && families::step(cf.family) == d &&
        cf.direction != Direction::Composite && cf.name.find('@') == std::string::npos)
        return family_basis(cf.family, o, m, n);
    BasisSpec s;
    s.family = Family::Custom;
    s.orientation = o;
    s.m = m;
    s.n = n;
    s.d = d;
    s.label = cf.name;
    return s;
}

void assign_bases(CobMatrix& out, const CoeffFn& cf, const MatrixKind& kind, int m, int n, int d) {
    switch (cf.direction) {
        case Direction::ToMonomial:
            out.domain_basis = side_spec(cf, kind.domain, m, n, d);
            out.range_basis = monomial_basis(m, n, d);
            break;
        case Direction::FromMonomialAscending:
        case Direction::FromMonomialDescending:
            out.domain_basis = monomial_basis(m, n, d);
            out.range_basis = side_spec(cf, kind.range, m, n, d);
            break;
        case Direction::Composite: {
            CoeffFn named = cf;
            named.name = cf.name + ":domain";
            out.domain_basis = side_spec(named, kind.domain, m, n, d);
            named.name = cf.name + ":range";
            out.range_basis = side_spec(named, kind.range, m, n, d);
            break;
        }
    }
}

void check_build(const MatrixKind& kind, const CoeffFn& cf, int n, int m) {
    int d = kind.step();
    if (cf.d != d)
        throw DomainError("coefficient function '" + cf.name + "' has step " + std::to_string(cf.d) +
                          " but the kind needs step " + std::to_string(d));
    if (m < 0 || n < m) throw DomainError("window requires 0 <= m <= n");
    if ((n - m) % d != 0) throw DomainError("window bounds must share parity for a definite-parity kind");
}

}  // namespace

CobMatrix make_matrix(Grid entries, Shape shape) {
    CobMatrix out;
    out.dim = static_cast<int>(entries.size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != out.dim) throw DomainError("matrix must be square");
    if (out.dim == 0) throw DomainError("matrix must be non-empty");
    out.entries = std::move(entries);
    out.shape = shape;
    out.domain_basis = monomial_basis(0, out.dim - 1);
    out.range_basis = out.domain_basis;
    return out;
}

CobMatrix identity_matrix(int dim) {
    Grid g = zeros(dim);
    for (int i = 0; i < dim; ++i) g[i][i] = 1;
    return make_matrix(std::move(g), Shape::UpperTri);
}

Shape detect_shape(const Grid& g) {
    bool diag = nonzero_diagonal(g);
    bool a = is_alternating(g) && g.size() > 1;
    if (diag && is_upper(g)) return a ? Shape::AltUpper : Shape::UpperTri;
    if (diag && is_lower(g)) return a ? Shape::AltLower : Shape::LowerTri;
    return Shape::Full;
}

CobMatrix build_matrix(const MatrixKind& kind, const CoeffFn& cf, int n, int m) {
    if (kind.mixed()) throw DomainError("build_matrix needs an unmixed kind; use build_mixed_matrix");
    check_build(kind, cf, n, m);
    int d = kind.step();
    int l = (n - m) / d;
    CobMatrix out;
    out.dim = l + 1;
    out.entries = zeros(out.dim);
    for (int j = 0; j <= l; ++j) {
        if (kind.domain == Orientation::Descending) {
            for (int i = 0; i <= j; ++i) out.entries[i][j] = cf(m + d * j, m, j - i);
        } else {
            for (int i = j; i <= l; ++i) out.entries[i][j] = cf(n, m + d * j, l - i);
        }
    }
    out.shape = kind.domain == Orientation::Descending ? Shape::UpperTri : Shape::LowerTri;
    assign_bases(out, cf, kind, m, n, d);
    return out;
}

CobMatrix build_mixed_matrix(const MatrixKind& kind, const CoeffFn& cf, int n, int m) {
    if (!kind.mixed()) throw DomainError("build_mixed_matrix needs a mixed kind; use build_matrix");
    check_build(kind, cf, n, m);
    int d = kind.step();
    int l = (n - m) / d;
    CobMatrix out;
    out.dim = l + 1;
    out.entries = zeros(out.dim);
    for (int j = 0; j <= l; ++j)
        for (int i = 0; i <= l; ++i)
            out.entries[i][j] = kind.domain == Orientation::Descending ? cf(n, m + d * j, l - i)
                                                                       : cf(m + d * j, m, l - i);
    out.shape = Shape::Full;
    assign_bases(out, cf, kind, m, n, d);
    return out;
}

CoeffFn compose_cf(const MatrixKind& kind, const CoeffFn& cf1, const CoeffFn& cf2, Window w) {
    int d = kind.step();
    if (cf1.d != d || cf2.d != d) throw DomainError("compose_cf: coefficient function steps do not match the kind");
    CoeffFn out;
    out.family = Family::Custom;
    out.direction = Direction::Composite;
    out.d = d;
    out.name = cf1.name + " . " + cf2.name;
    if (!kind.mixed() && kind.domain == Orientation::Descending) {
        out.eval = [cf1, cf2, d](int n, int m, int k) -> Rational {
            Rational sum = 0;
            for (int v = 0; v <= k; ++v) sum += cf1(n - d * v, m, k - v) * cf2(n, m, v);
            return sum;
        };
    } else if (!kind.mixed()) {
        out.eval = [cf1, cf2, d](int n, int m, int k) -> Rational {
            int l = (n - m) / d;
            Rational sum = 0;
            for (int v = 0; v <= l - k; ++v) sum += cf1(n, m + d * v, k) * cf2(n, m, l - v);
            return sum;
        };
    } else if (kind.domain == Orientation::Descending) {
        if (w.m < 0) throw DomainError("compose_cf: a descending-to-ascending composition needs the window's m");
        int m0 = w.m;
        out.eval = [cf1, cf2, d, m0](int n, int top, int k) -> Rational {
            int hi = std::min((n - m0) / d - k, (top - m0) / d);
            Rational sum = 0;
            for (int v = 0; v <= hi; ++v) sum += cf1(n, m0 + d * v, k) * cf2(top, m0, (top - m0) / d - v);
            return sum;
        };
    } else {
        if (w.n < 0) throw DomainError("compose_cf: an ascending-to-descending composition needs the window's n");
        int n0 = w.n;
        out.eval = [cf1, cf2, d, n0](int bottom, int m, int k) -> Rational {
            int hi = std::min(k, (n0 - bottom) / d);
            Rational sum = 0;
            for (int v = 0; v <= hi; ++v) sum += cf1(n0 - d * v, m, k - v) * cf2(n0, bottom, v);
            return sum;
        };
    }
    return out;
}

CoeffFn inverse_cf(const CoeffFn& to_monomial, Orientation o) {
    if (to_monomial.direction != Direction::ToMonomial)
        throw DomainError("inverse_cf needs a to-monomial coefficient function");
    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, int>, Grid> grids;
    };
    auto cache = std::make_shared<Cache>();
    int d = to_monomial.d;
    MatrixKind kind{o, o, d == 2 ? ParityKind::Definite : ParityKind::NotDefinite};
    CoeffFn out;
    out.family = to_monomial.family;
    out.direction = o == Orientation::Ascending ? Direction::FromMonomialAscending : Direction::FromMonomialDescending;
    out.d = d;
    out.name = "inverse(" + to_monomial.name + ")";
    out.eval = [cache, kind, to_monomial, o, d](int n, int m, int k) -> Rational {
        if (m < 0 || n < m || (n - m) % d != 0) throw DomainError("inverse_cf: invalid window");
        int l = (n - m) / d;
        if (k < 0 || k > l) throw DomainError("inverse_cf: k outside the window");
        std::lock_guard<std::mutex> lock(cache->mu);
        auto it = cache->grids.find({n, m});
        if (it == cache->grids.end()) {
            Grid inv = invert_triangular(build_matrix(kind, to_monomial, n, m)).entries;
            it = cache->grids.emplace(std::make_pair(n, m), std::move(inv)).first;
        }
        // Descending: x^n is the last column; ascending: x^m is the first.
        int col = o == Orientation::Descending ? l : 0;
        return it->second[l - k][col];
    };
    return out;
}

CoeffFn alternating_cf(const CoeffFn& beta, Orientation o) {
    if (beta.d != 2) throw DomainError("alternating_cf needs a definite-parity coefficient function");
    CoeffFn out = beta;
    out.d = 1;
    out.name = "alt(" + beta.name + ")";
    if (o == Orientation::Ascending) {
        out.eval = [beta](int n, int m, int k) -> Rational {
            if ((n - m - k) % 2 != 0) return Rational(0);
            int t = (n - m) % 2 == 0 ? n : n - 1;
            return beta(t, m, (t - n + k) / 2);
        };
    } else {
        out.eval = [beta](int n, int m, int k) -> Rational {
            if (k % 2 != 0) return Rational(0);
            int b = (n - m) % 2 == 0 ? m : m + 1;
            return beta(n, b, k / 2);
        };
    }
    return out;
}

CobMatrix matmul(const CobMatrix& a, const CobMatrix& b) {
    if (a.dim != b.dim) throw DomainError("matmul: dimension mismatch");
    if (!same_span(a.domain_basis, b.range_basis))
        throw DomainError("matmul: the left factor's domain is not the right factor's range");
    int n = a.dim;
    Grid g = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a.entries[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (b.entries[k][j] != 0) g[i][j] += a.entries[i][k] * b.entries[k][j];
        }
    CobMatrix out;
    out.dim = n;
    out.entries = std::move(g);
    out.domain_basis = b.domain_basis;
    out.range_basis = a.range_basis;
    if (upper_like(a.shape) && upper_like(b.shape))
        out.shape = alt(a.shape) && alt(b.shape) ? Shape::AltUpper : Shape::UpperTri;
    else if (lower_like(a.shape) && lower_like(b.shape))
        out.shape = alt(a.shape) && alt(b.shape) ? Shape::AltLower : Shape::LowerTri;
    else
        out.shape = detect_shape(out.entries);
    return out;
}

CobMatrix invert_triangular(const CobMatrix& m) {
    const Grid& g = m.entries;
    int n = m.dim;
    bool upper = is_upper(g);
    if (!upper && !is_lower(g)) throw DomainError("invert_triangular: matrix is not triangular");
    for (int i = 0; i < n; ++i)
        if (g[i][i] == 0) throw DomainError("invert_triangular: zero diagonal entry at " + std::to_string(i));
    Grid inv = zeros(n);
    for (int c = 0; c < n; ++c) {
        if (upper) {
            for (int i = c; i >= 0; --i) {
                Rational acc = i == c ? Rational(1) : Rational(0);
                for (int k = i + 1; k <= c; ++k) acc -= g[i][k] * inv[k][c];
                inv[i][c] = acc / g[i][i];
            }
        } else {
            for (int i = c; i < n; ++i) {
                Rational acc = i == c ? Rational(1) : Rational(0);
                for (int k = c; k < i; ++k) acc -= g[i][k] * inv[k][c];
                inv[i][c] = acc / g[i][i];
            }
        }
    }
    CobMatrix out;
    out.dim = n;
    out.entries = std::move(inv);
    out.domain_basis = m.range_basis;
    out.range_basis = m.domain_basis;
    bool a = is_alternating(out.entries) && n > 1;
    out.shape = upper ? (a ? Shape::AltUpper : Shape::UpperTri) : (a ? Shape::AltLower : Shape::LowerTri);
    return out;
}

CobMatrix invert_general(const CobMatrix& m) {
    int n = m.dim;
    Grid a = m.entries;
    Grid inv = zeros(n);
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw DomainError("invert_general: matrix is singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (int k = 0; k < n; ++k) {
            a[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    CobMatrix out;
    out.dim = n;
    out.entries = std::move(inv);
    out.domain_basis = m.range_basis;
    out.range_basis = m.domain_basis;
    out.shape = detect_shape(out.entries);
    return out;
}

CobMatrix band_inverse(const CobMatrix& m) {
    const Grid& g = m.entries;
    int n = m.dim;
    bool upper = is_upper(g);
    if (!upper && !is_lower(g)) throw DomainError("band_inverse: matrix is not triangular");
    for (int i = 0; i < n; ++i) {
        if (g[i][i] == 0) throw DomainError("band_inverse: zero diagonal entry");
        int lo = upper ? i : 0;
        int hi = upper ? n - 1 : i;
        for (int j = lo; j <= hi; ++j)
            if (g[i][j] != g[i][i])
                throw DomainError("band_inverse: row " + std::to_string(i) +
                                  " is not constant, so the columns are not truncations of one polynomial");
    }
    Grid inv = zeros(n);
    for (int j = 0; j < n; ++j) {
        Rational r = Rational(1) / g[j][j];
        inv[j][j] = r;
        if (upper && j > 0) inv[j - 1][j] = -r;
        if (!upper && j + 1 < n) inv[j + 1][j] = -r;
    }
    CobMatrix out;
    out.dim = n;
    out.entries = std::move(inv);
    out.domain_basis = m.range_basis;
    out.range_basis = m.domain_basis;
    out.shape = Shape::Band;
    return out;
}

std::string to_text(const CobMatrix& m, int decimals) {
    auto render = [&](auto cell) {
        std::vector<std::vector<std::string>> cells(m.dim, std::vector<std::string>(m.dim));
        std::size_t width = 1;
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j) {
                cells[i][j] = cell(m.entries[i][j]);
                width = std::max(width, cells[i][j].size());
            }
        std::ostringstream os;
        for (const auto& row : cells) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) os << "  ";
                os << std::string(width - row[j].size(), ' ') << row[j];
            }
            os << "\n";
        }
        return os.str();
    };
    std::string out = render([](const Rational& q) { return q.get_str(); });
    if (decimals >= 0) {
        out += "\n";
        out += render([decimals](const Rational& q) { return exact::to_decimal(q, decimals); });
    }
    return out;
}

std::string to_csv(const CobMatrix& m) {
    std::ostringstream os;
    for (const auto& row : m.entries) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j].get_str();
        os << "\n";
    }
    return os.str();
}

CobMatrix from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Grid g;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(exact::parse_rational(cell));
        g.push_back(std::move(row));
    }
    Shape s = detect_shape(g.empty() ? Grid{} : g);
    return make_matrix(std::move(g), s);
}

std::string to_json(const CobMatrix& m) {
    nlohmann::json doc;
    doc["dim"] = m.dim;
    doc["shape"] = to_string(m.shape);
    doc["domain"] = describe(m.domain_basis);
    doc["range"] = describe(m.range_basis);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m.entries) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& q : row) r.push_back(q.get_str());
        rows.push_back(r);
    }
    doc["entries"] = rows;
    return doc.dump(2);
}

CobMatrix from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed matrix document: ") + e.what());
    }
    Grid g;
    for (const auto& row : doc.at("entries")) {
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(exact::parse_rational(cell.get<std::string>()));
        g.push_back(std::move(r));
    }
    CobMatrix out = make_matrix(std::move(g), parse_shape(doc.value("shape", std::string("full"))));
    if (doc.value("dim", out.dim) != out.dim) throw DomainError("matrix document dim does not match its entries");
    return out;
}

Grid parse_grid(const std::vector<std::vector<std::string>>& rows) {
    Grid g;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(exact::parse_rational(cell));
        g.push_back(std::move(r));
    }
    return g;
}

}  // namespace cob
