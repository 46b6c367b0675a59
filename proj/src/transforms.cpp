#include "cob/transforms.hpp"

namespace cob::transforms {

using families::CoeffFn;

namespace {

BasisSpec shrink(BasisSpec s, int k1, int k2) {
    s.m += k1 * s.d;
    s.n -= k2 * s.d;
    if (s.family == Family::Custom && !s.custom.empty())
        s.custom = std::vector<Polynomial>(s.custom.begin() + k1, s.custom.end() - k2);
    return s;
}

Orientation orientation_of(const CobMatrix& m) {
    switch (m.shape) {
        case Shape::UpperTri:
        case Shape::AltUpper: return Orientation::Descending;
        case Shape::LowerTri:
        case Shape::AltLower: return Orientation::Ascending;
        default: break;
    }
    Shape s = detect_shape(m.entries);
    if (s == Shape::UpperTri || s == Shape::AltUpper) return Orientation::Descending;
    if (s == Shape::LowerTri || s == Shape::AltLower) return Orientation::Ascending;
    throw DomainError("matrix is not triangular");
}

bool is_identity(const Grid& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

Grid column_ops(const Grid& g, Orientation o, const Rational& s, bool forward) {
    int n = static_cast<int>(g.size());
    Grid out = g;
    if (o == Orientation::Descending) {
        for (int j = 1; j < n; ++j) {
            // forward: d_j = c_j + s c_(j-1); converse: c_j = d_j - s c_(j-1)
            const Grid& prev = forward ? g : static_cast<const Grid&>(out);
            for (int i = 0; i < n; ++i) out[i][j] = forward ? Rational(g[i][j] + s * prev[i][j - 1]) : Rational(g[i][j] - s * prev[i][j - 1]);
        }
    } else {
        for (int j = n - 2; j >= 0; --j) {
            const Grid& next = forward ? g : static_cast<const Grid&>(out);
            for (int i = 0; i < n; ++i) out[i][j] = forward ? Rational(g[i][j] + s * next[i][j + 1]) : Rational(g[i][j] - s * next[i][j + 1]);
        }
    }
    return out;
}

}  // namespace

CobMatrix truncate_matrix(const CobMatrix& m, int k1, int k2) {
    if (k1 < 0 || k2 < 0) throw DomainError("truncation counts must be non-negative");
    if (k1 + k2 <= 0 || k1 + k2 >= m.dim)
        throw DomainError("truncation needs 0 < k1 + k2 < dim (dim = " + std::to_string(m.dim) + ")");
    if (detect_shape(m.entries) == Shape::Full && m.shape != Shape::Band)
        throw DomainError("only triangular matrices can be truncated");
    int dim = m.dim - k1 - k2;
    Grid g(dim, std::vector<Rational>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g[i][j] = m.entries[i + k1][j + k1];
    CobMatrix out;
    out.dim = dim;
    out.entries = std::move(g);
    out.shape = m.shape == Shape::Band ? Shape::Band : detect_shape(out.entries);
    if (out.shape == Shape::Full) out.shape = m.shape;
    out.domain_basis = shrink(m.domain_basis, k1, k2);
    out.range_basis = shrink(m.range_basis, k1, k2);
    return out;
}

long count_truncations(int b) {
    if (b < 2) throw DomainError("count_truncations needs b >= 2");
    return static_cast<long>(b) * (b + 1) / 2 - 1;
}

CobMatrix build_alternating_matrix(const AlternatingSpec& spec, const CoeffFn& cf) {
    MatrixKind kind{spec.orientation, spec.orientation, ParityKind::NotDefinite};
    CobMatrix out = build_matrix(kind, alternating_cf(cf, spec.orientation), spec.n, spec.m);
    if (out.dim > 1) out.shape = spec.orientation == Orientation::Descending ? Shape::AltUpper : Shape::AltLower;
    BasisSpec alt_side;
    if (families::has_definite_parity(cf.family)) {
        alt_side = alternating_basis(cf.family, spec.orientation, spec.m, spec.n);
    } else {
        alt_side = monomial_basis(spec.m, spec.n);
        alt_side.family = Family::Custom;
        alt_side.label = "alt(" + cf.name + ")";
    }
    if (cf.direction == families::Direction::ToMonomial)
        out.domain_basis = alt_side;
    else
        out.range_basis = alt_side;
    return out;
}

CobMatrix invert_alternating(const CobMatrix& m, const CoeffFn& cf_inverse, const AlternatingSpec& spec) {
    CobMatrix inv = build_alternating_matrix(spec, cf_inverse);
    if (inv.dim != m.dim) throw DomainError("invert_alternating: window does not match the matrix");
    Grid prod(m.dim, std::vector<Rational>(m.dim));
    for (int i = 0; i < m.dim; ++i)
        for (int k = 0; k < m.dim; ++k)
            for (int j = 0; j < m.dim; ++j) prod[i][j] += m.entries[i][k] * inv.entries[k][j];
    if (!is_identity(prod)) throw DomainError("invert_alternating: the supplied function is not the inverse");
    inv.domain_basis = m.range_basis;
    inv.range_basis = m.domain_basis;
    return inv;
}

CoeffFn compose_alternating(const CoeffFn& cf1, const CoeffFn& cf2, Orientation o, bool vr_alt, bool rt_alt) {
    CoeffFn a1 = vr_alt ? alternating_cf(cf1, o) : cf1;
    CoeffFn a2 = rt_alt ? alternating_cf(cf2, o) : cf2;
    if (a1.d != 1 || a2.d != 1) throw DomainError("compose_alternating: non-alternating sides must have step 1");
    CoeffFn out;
    out.family = Family::Custom;
    out.direction = families::Direction::Composite;
    out.d = 1;
    out.name = a1.name + " . " + a2.name;
    if (o == Orientation::Ascending) {
        out.eval = [a1, a2, vr_alt, rt_alt](int n, int m, int k) -> Rational {
            int l = n - m;
            if (vr_alt && rt_alt && (l - k) % 2 != 0) return Rational(0);
            // rt_alt: only even v survive; vr_alt: only v with the parity of l - k.
            int start = vr_alt ? (l - k) % 2 : 0;
            int stride = (vr_alt || rt_alt) ? 2 : 1;
            Rational sum = 0;
            for (int v = start; v <= l - k; v += stride) sum += a1(n, m + v, k) * a2(n, m, l - v);
            return sum;
        };
    } else {
        out.eval = [a1, a2, vr_alt, rt_alt](int n, int m, int k) -> Rational {
            if (vr_alt && rt_alt && k % 2 != 0) return Rational(0);
            // rt_alt: only even v survive; vr_alt: only v with the parity of k.
            int start = vr_alt ? k % 2 : 0;
            int stride = (vr_alt || rt_alt) ? 2 : 1;
            Rational sum = 0;
            for (int v = start; v <= k; v += stride) sum += a1(n - v, m, k - v) * a2(n, m, v);
            return sum;
        };
    }
    return out;
}

CobMatrix superpose_matrix(const CobMatrix& m_alt, Orientation o, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("superposition sign must be +1 or -1");
    if (m_alt.dim > 1) {
        Shape s = detect_shape(m_alt.entries);
        if (s != Shape::AltUpper && s != Shape::AltLower)
            throw DomainError("superpose_matrix needs an alternating triangular matrix");
    }
    CobMatrix out = m_alt;
    out.entries = column_ops(m_alt.entries, o, sign, true);
    out.shape = detect_shape(out.entries);
    if (out.domain_basis.alternating) {
        out.domain_basis.alternating = false;
        out.domain_basis.superposed = true;
        out.domain_basis.sup_sign = sign;
    }
    return out;
}

CobMatrix superpose_matrix(const CobMatrix& m_alt, int sign) {
    return superpose_matrix(m_alt, orientation_of(m_alt), sign);
}

CobMatrix alternate_from_superposed(const CobMatrix& m_sup, Orientation o, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("superposition sign must be +1 or -1");
    CobMatrix out = m_sup;
    out.entries = column_ops(m_sup.entries, o, sign, false);
    out.shape = detect_shape(out.entries);
    if (out.domain_basis.superposed) {
        out.domain_basis.superposed = false;
        out.domain_basis.alternating = true;
        out.domain_basis.sup_sign = 1;
    }
    return out;
}

CobMatrix alternate_from_superposed(const CobMatrix& m_sup, int sign) {
    return alternate_from_superposed(m_sup, orientation_of(m_sup), sign);
}

SuperpositionCounterexample superposition_counterexample() {
    SuperpositionCounterexample c;
    c.m = make_matrix(parse_grid({{"1", "0", "0"}, {"0", "2", "0"}, {"4", "0", "3"}}), Shape::AltLower);
    c.n = make_matrix(parse_grid({{"2", "0", "0"}, {"0", "2", "0"}, {"5", "0", "2"}}), Shape::AltLower);
    c.mn = matmul(c.m, c.n);
    c.s_m = superpose_matrix(c.m, Orientation::Ascending);
    c.s_n = superpose_matrix(c.n, Orientation::Ascending);
    c.s_m_s_n = matmul(c.s_m, c.s_n);
    c.s_mn = superpose_matrix(c.mn, Orientation::Ascending);
    return c;
}

}  // namespace cob::transforms
