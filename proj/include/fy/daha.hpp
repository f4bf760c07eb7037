#pragma once
#include "fy/mutation.hpp"
#include "fy/ring.hpp"
#include "fy/sparsevec.hpp"

#include <string>
#include <vector>

namespace fy {

// Laurent monomial z_1^{m_1} ... z_n^{m_n} tensor w_{b_1} ... w_{b_n}.
// Right-module structure: words of algebra generators act left-to-right.
struct PolyTensor {
    std::vector<int> m; // z-exponents
    std::vector<int> b; // W-colors in 1..L
    auto operator<=>(const PolyTensor&) const = default;
};

template <class C> using MVec = SparseVec<PolyTensor, C>;

// ---------------------------------------------------------------- primitives
// All site indices are 1-based to match the operator formulas.

// (z_q / (z_p - z_q)) (1 - K_{pq}) on a monomial, any p != q. Closed form on
// the exponent pair (mp, mq):
//   mp == mq : 0
//   mp <  mq : -(sum of monomials with exponents (mp+r, mq-r), 0 <= r < mq-mp)
//   mp >  mq : +(sum of monomials with exponents (mp-r, mq+r), 1 <= r <= mp-mq)
template <class C>
void divided_difference_term(const PolyTensor& x, int p, int q, const C& coef, MVec<C>& out) {
    int mp = x.m[p - 1], mq = x.m[q - 1];
    if (mp == mq) return;
    PolyTensor y = x;
    if (mp < mq) {
        C c = mutation_active(Mutation::DividedDiffSign) ? coef : (C{} - coef);
        for (int r = 0; r < mq - mp; ++r) {
            y.m[p - 1] = mp + r;
            y.m[q - 1] = mq - r;
            out.add(y, c);
        }
    } else {
        for (int r = 1; r <= mp - mq; ++r) {
            y.m[p - 1] = mp - r;
            y.m[q - 1] = mq + r;
            out.add(y, coef);
        }
    }
}

template <class C>
MVec<C> divided_difference(int p, int q, const MVec<C>& v) {
    MVec<C> out;
    for (const auto& [x, coef] : v.terms()) divided_difference_term(x, p, q, coef, out);
    return out;
}

// K_{pq} P_{pq}: swap both exponents and colors at sites p, q.
template <class C>
MVec<C> apply_kp(int p, int q, const MVec<C>& v) {
    MVec<C> out;
    for (const auto& [x, coef] : v.terms()) {
        PolyTensor y = x;
        std::swap(y.m[p - 1], y.m[q - 1]);
        std::swap(y.b[p - 1], y.b[q - 1]);
        out.add(y, coef);
    }
    return out;
}

// Image of the transposition s_{pq} (p < q): -K_{pq} P_{pq}.
template <class C>
MVec<C> apply_transposition(int p, int q, const MVec<C>& v) {
    MVec<C> out;
    for (const auto& [x, coef] : v.terms()) {
        PolyTensor y = x;
        std::swap(y.m[p - 1], y.m[q - 1]);
        std::swap(y.b[p - 1], y.b[q - 1]);
        out.add(y, C{} - coef);
    }
    return out;
}

// Pairwise color term r_{pq} for first index p, second index q:
// b_p == b_q -> 1/2, b_p > b_q -> color swap, b_p < b_q -> 0.
template <class C>
MVec<C> apply_r(int p, int q, const MVec<C>& v) {
    MVec<C> out;
    for (const auto& [x, coef] : v.terms()) {
        int bp = x.b[p - 1], bq = x.b[q - 1];
        if (bp == bq) {
            out.add(x, coef * coeff_from_rational<C>(make_rational(1, 2)));
        } else if (bp > bq || mutation_active(Mutation::RWrongBranch)) {
            PolyTensor y = x;
            std::swap(y.b[p - 1], y.b[q - 1]);
            out.add(y, coef);
        }
    }
    return out;
}

// Multiplication by z_i^e.
template <class C>
MVec<C> apply_x(int i, int e, const MVec<C>& v) {
    MVec<C> out;
    for (const auto& [x, coef] : v.terms()) {
        PolyTensor y = x;
        y.m[i - 1] += e;
        out.add(y, coef);
    }
    return out;
}

// --------------------------------------------------------- the Dunkl operator
// d_i = t z_i d/dz_i - c ( nu_{b_i} + n/(2L) - 1/2
//        + sum_{j<i} ( (z_i/(z_i-z_j))(1-K_{ji}) P_{ji} - r_{ji} )
//        + sum_{j>i} ( (z_j/(z_i-z_j))(1-K_{ij}) P_{ij} + r_{ij} ) ),
// where (z_i/(z_i-z_j))(1-K_{ji}) = -D(j,i) in terms of the divided
// difference above, so the j < i summand contributes +c D(j,i) P_{ji} + c r_{ji}
// and the j > i summand contributes -c D(i,j) P_{ij} - c r_{ij}.
template <class C>
MVec<C> apply_dunkl(int i, const MVec<C>& v, int L, const RingCtx<C>& ctx) {
    MVec<C> out;
    const C minus_c = C{} - ctx.c;
    for (const auto& [x, coef] : v.terms()) {
        const int n = (int)x.m.size();
        // t z_i d/dz_i
        out.add(x, coef * ctx.t * ctx.rat(x.m[i - 1]));
        // constant part
        C constant = ctx.nu.at(x.b[i - 1] - 1);
        if (!mutation_active(Mutation::DropDunklConstant))
            constant += ctx.rat(make_rational(n, 2 * L) - make_rational(1, 2));
        out.add(x, coef * minus_c * constant);

        MVec<C> single;
        single.add(x, coef);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            // color swap first (P), then the divided difference on exponents
            MVec<C> swapped;
            {
                PolyTensor y = x;
                std::swap(y.b[i - 1], y.b[j - 1]);
                swapped.add(y, coef);
            }
            if (j < i) {
                MVec<C> dd = divided_difference(j, i, swapped);
                out += dd.scale(ctx.c);
                MVec<C> rr = apply_r(j, i, single);
                out += rr.scale(ctx.c);
            } else {
                MVec<C> dd = divided_difference(i, j, swapped);
                out += dd.scale(minus_c);
                MVec<C> rr = apply_r(i, j, single);
                out += rr.scale(minus_c);
            }
        }
    }
    return out;
}

// y_i = u_i + (c/2)(sum_{j>i} s_{ij} - sum_{j<i} s_{ji}) with u_i -> -d_i and
// s_{pq} -> -K_{pq}P_{pq}:  y_i = -d_i - (c/2) sum_{j>i} K_{ij}P_{ij}
//                                 + (c/2) sum_{j<i} K_{ji}P_{ji}.
template <class C>
MVec<C> apply_y(int i, const MVec<C>& v, int L, const RingCtx<C>& ctx) {
    MVec<C> out;
    out -= apply_dunkl(i, v, L, ctx);
    C half_c = ctx.c * ctx.rat(1, 2);
    if (mutation_active(Mutation::YExchangeSign)) half_c = C{} - half_c;
    if (v.is_zero()) return out;
    const int n = (int)v.terms().begin()->first.m.size();
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        MVec<C> kp = (j > i) ? apply_kp(i, j, v) : apply_kp(j, i, v);
        if (j > i) out -= kp.scale(half_c);
        else out += kp.scale(half_c);
    }
    return out;
}

// ------------------------------------------------------- relation verification

// One generator word evaluated right-module style (leftmost factor first).
struct DahaAtom {
    enum class Kind { S, Transposition, X, U } kind;
    int i = 0;
    int j = 0; // second index for transpositions
    int e = 0; // exponent for X
};

template <class C>
MVec<C> apply_daha_atom(const DahaAtom& a, const MVec<C>& v, int L, const RingCtx<C>& ctx) {
    switch (a.kind) {
        case DahaAtom::Kind::S: return apply_transposition(a.i, a.i + 1, v);
        case DahaAtom::Kind::Transposition: return apply_transposition(a.i, a.j, v);
        case DahaAtom::Kind::X: return apply_x(a.i, a.e, v);
        case DahaAtom::Kind::U: {
            MVec<C> out;
            out -= apply_dunkl(a.i, v, L, ctx);
            return out;
        }
    }
    return {};
}

template <class C>
MVec<C> apply_daha_word(const std::vector<DahaAtom>& word, MVec<C> v, int L, const RingCtx<C>& ctx) {
    for (const auto& a : word) v = apply_daha_atom(a, v, L, ctx);
    return v;
}

// Linear combination of words; both sides of a defining relation have this shape.
template <class C>
struct DahaSide {
    std::vector<std::pair<C, std::vector<DahaAtom>>> summands;
    MVec<C> apply(const MVec<C>& v, int L, const RingCtx<C>& ctx) const {
        MVec<C> out;
        for (const auto& [coef, word] : summands) {
            MVec<C> w = apply_daha_word(word, v, L, ctx);
            out += w.scale(coef);
        }
        return out;
    }
};

template <class C>
struct DahaRelation {
    std::string id;
    int family; // 1..4
    DahaSide<C> lhs, rhs;
};

template <class C>
std::vector<DahaRelation<C>> build_daha_relations(int n, const RingCtx<C>& ctx) {
    using Atom = DahaAtom;
    using K = DahaAtom::Kind;
    auto S = [](int i) { return Atom{K::S, i, 0, 0}; };
    auto T = [](int p, int q) { return Atom{K::Transposition, p, q, 0}; };
    auto X = [](int i, int e) { return Atom{K::X, i, 0, e}; };
    auto U = [](int i) { return Atom{K::U, i, 0, 0}; };
    const C one = ctx.rat(1);
    const C minus_one = ctx.rat(-1);

    std::vector<DahaRelation<C>> rels;
    auto add = [&](std::string id, int family, DahaSide<C> lhs, DahaSide<C> rhs) {
        rels.push_back(DahaRelation<C>{std::move(id), family, std::move(lhs), std::move(rhs)});
    };
    auto side = [&](std::vector<std::pair<C, std::vector<Atom>>> s) {
        return DahaSide<C>{std::move(s)};
    };

    for (int i = 1; i + 1 <= n; ++i)
        add("H1 involution i=" + std::to_string(i), 1,
            side({{one, {S(i), S(i)}}}), side({{one, {}}}));
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = i + 2; j + 1 <= n; ++j)
            add("H1 commute i=" + std::to_string(i) + " j=" + std::to_string(j), 1,
                side({{one, {S(i), S(j)}}}), side({{one, {S(j), S(i)}}}));
    for (int i = 1; i + 2 <= n; ++i)
        add("H1 braid i=" + std::to_string(i), 1,
            side({{one, {S(i), S(i + 1), S(i)}}}), side({{one, {S(i + 1), S(i), S(i + 1)}}}));

    for (int i = 1; i <= n; ++i)
        add("H2 inverse i=" + std::to_string(i), 2,
            side({{one, {X(i, 1), X(i, -1)}}}), side({{one, {}}}));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add("H2 commute i=" + std::to_string(i) + " j=" + std::to_string(j), 2,
                side({{one, {X(i, 1), X(j, 1)}}}), side({{one, {X(j, 1), X(i, 1)}}}));
    for (int i = 1; i + 1 <= n; ++i)
        add("H2 exchange i=" + std::to_string(i), 2,
            side({{one, {S(i), X(i, 1)}}}), side({{one, {X(i + 1, 1), S(i)}}}));
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            add("H2 fix i=" + std::to_string(i) + " j=" + std::to_string(j), 2,
                side({{one, {S(i), X(j, 1)}}}), side({{one, {X(j, 1), S(i)}}}));
        }

    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            add("H3 commute i=" + std::to_string(i) + " j=" + std::to_string(j), 3,
                side({{one, {U(i), U(j)}}}), side({{one, {U(j), U(i)}}}));
    for (int i = 1; i + 1 <= n; ++i)
        add("H3 twist i=" + std::to_string(i), 3,
            side({{one, {S(i), U(i)}}, {minus_one, {U(i + 1), S(i)}}}),
            side({{C{} - ctx.c, {}}}));
    for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            add("H3 fix i=" + std::to_string(i) + " j=" + std::to_string(j), 3,
                side({{one, {S(i), U(j)}}}), side({{one, {U(j), S(i)}}}));
        }

    for (int i = 1; i <= n; ++i) {
        std::vector<std::pair<C, std::vector<Atom>>> rhs;
        rhs.push_back({ctx.t, {X(i, 1)}});
        for (int j = 1; j < i; ++j) rhs.push_back({ctx.c, {X(j, 1), T(j, i)}});
        for (int j = i + 1; j <= n; ++j) rhs.push_back({ctx.c, {X(i, 1), T(i, j)}});
        add("H4 diagonal i=" + std::to_string(i), 4,
            side({{one, {U(i), X(i, 1)}}, {minus_one, {X(i, 1), U(i)}}}), side(std::move(rhs)));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            std::vector<Atom> rhs_word =
                (i < j) ? std::vector<Atom>{X(i, 1), T(i, j)} : std::vector<Atom>{X(j, 1), T(j, i)};
            add("H4 offdiag i=" + std::to_string(i) + " j=" + std::to_string(j), 4,
                side({{one, {U(i), X(j, 1)}}, {minus_one, {X(j, 1), U(i)}}}),
                side({{C{} - ctx.c, rhs_word}}));
        }
    return rels;
}

struct DahaCheckResult {
    std::string id;
    int family;
    bool pass;
    std::string counterexample;
};

// Checks every defining relation on all basis monomials with exponents in
// [-expbound, expbound]^n and colors in [1, L]^n.
template <class C>
std::vector<DahaCheckResult> check_daha_relations(int n, int L, int expbound,
                                                  const RingCtx<C>& ctx, int family = 0) {
    if (n < 1 || L < 1 || expbound < 0)
        throw std::invalid_argument("check_daha_relations: bad window");
    std::vector<PolyTensor> basis;
    PolyTensor cur;
    cur.m.assign(n, 0);
    cur.b.assign(n, 1);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            basis.push_back(cur);
            return;
        }
        for (int m = -expbound; m <= expbound; ++m)
            for (int b = 1; b <= L; ++b) {
                cur.m[pos] = m;
                cur.b[pos] = b;
                self(self, pos + 1);
            }
    };
    rec(rec, 0);

    std::vector<DahaCheckResult> out;
    for (const auto& rel : build_daha_relations(n, ctx)) {
        if (family != 0 && rel.family != family) continue;
        DahaCheckResult res{rel.id, rel.family, true, {}};
        for (const auto& x : basis) {
            MVec<C> v;
            v.add(x, ctx.rat(1));
            MVec<C> l = rel.lhs.apply(v, L, ctx);
            MVec<C> r = rel.rhs.apply(v, L, ctx);
            if (!(l == r)) {
                res.pass = false;
                std::string mono = "m=(";
                for (int t = 0; t < n; ++t) mono += (t ? "," : "") + std::to_string(x.m[t]);
                mono += ") b=(";
                for (int t = 0; t < n; ++t) mono += (t ? "," : "") + std::to_string(x.b[t]);
                mono += ")";
                res.counterexample = mono;
                break;
            }
        }
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace fy
