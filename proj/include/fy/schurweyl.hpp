#pragma once
#include "fy/daha.hpp"
#include "fy/fock.hpp"
#include "fy/generator.hpp"
#include "fy/wedge.hpp"

#include <limits>

namespace fy {

// Representative z^{m_1}...z^{m_n} w_{b_1}...w_{b_n} v_{a_1}...v_{a_n} of a
// wedge over the balanced tensor product. Operators act on representatives
// and are pushed back through normal ordering.
struct MixedTensor {
    std::vector<int> m;
    std::vector<int> b;
    std::vector<int> a;
    auto operator<=>(const MixedTensor&) const = default;
};

template <class C> using WVec = SparseVec<WedgeWord, C>;

inline int checked_int(long long v, const char* where) {
    if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
        throw std::overflow_error(std::string(where) + ": exponent out of int range");
    return (int)v;
}

inline MixedTensor lift_word(const WedgeWord& w, const Config& cfg) {
    MixedTensor t;
    t.m.reserve(w.size());
    t.b.reserve(w.size());
    t.a.reserve(w.size());
    for (long long k : w) {
        UTriple u = decode_index(k, cfg);
        t.m.push_back(checked_int(u.m, "lift_word"));
        t.b.push_back(u.b);
        t.a.push_back(u.a);
    }
    return t;
}

template <class C>
void to_wedge_term(const MixedTensor& x, const C& coef, const Config& cfg, WVec<C>& out) {
    std::vector<long long> ks(x.m.size());
    for (std::size_t i = 0; i < ks.size(); ++i)
        ks[i] = encode_index(UTriple{x.m[i], x.b[i], x.a[i]}, cfg);
    auto no = normal_order(std::move(ks));
    if (!no) return; // repeated factor
    out.add(no->word, no->sign > 0 ? coef : C{} - coef);
}

template <class C>
WVec<C> to_wedge(const SparseVec<MixedTensor, C>& v, const Config& cfg) {
    WVec<C> out;
    for (const auto& [x, coef] : v.terms()) to_wedge_term(x, coef, cfg, out);
    return out;
}

// ------------------------------------------------------------------ currents
// sum_k z_k^r (E_{pq})_k acting factorwise; compositions of currents are
// ordinary operator compositions on wedge vectors.

template <class C>
WVec<C> current_E(int p, int q, int r, const WVec<C>& v, const Config& cfg) {
    WVec<C> out;
    for (const auto& [w, coef] : v.terms()) {
        MixedTensor x = lift_word(w, cfg);
        for (std::size_t k = 0; k < x.a.size(); ++k) {
            if (x.a[k] != q) continue;
            MixedTensor y = x;
            y.a[k] = p;
            y.m[k] += r;
            to_wedge_term(y, coef, cfg, out);
        }
    }
    return out;
}

// Chevalley matrix part of node i in 1..N-1: plus -> E_{i,i+1},
// minus -> E_{i+1,i}, cartan -> E_{ii} - E_{i+1,i+1}.
template <class C>
WVec<C> current_chevalley(GenKind kind, int node, int r, const WVec<C>& v, const Config& cfg) {
    if (node < 1 || node >= cfg.N)
        throw std::invalid_argument("current_chevalley: node must be in 1..N-1");
    switch (kind) {
        case GenKind::Plus: return current_E(node, node + 1, r, v, cfg);
        case GenKind::Minus: return current_E(node + 1, node, r, v, cfg);
        case GenKind::Cartan: {
            WVec<C> out = current_E(node, node, r, v, cfg);
            out -= current_E(node + 1, node + 1, r, v, cfg);
            return out;
        }
    }
    return {};
}

// ------------------------------------------------------------ the J operator
// J(X)(m (x) v) = sum_k (m y_k) (x) (X)_k v, with y_k the degenerate affine
// Hecke element acting on the polynomial-color part from the right.

template <class C>
WVec<C> j_chevalley(GenKind kind, int node, const WVec<C>& v, const Config& cfg,
                    const RingCtx<C>& ctx) {
    if (node < 1 || node >= cfg.N)
        throw std::invalid_argument("j_chevalley: node must be in 1..N-1");
    WVec<C> out;
    const C one = ctx.rat(1);
    for (const auto& [w, coef] : v.terms()) {
        MixedTensor x = lift_word(w, cfg);
        const int n = (int)x.a.size();
        for (int k = 1; k <= n; ++k) {
            int target = 0; // new a-color at site k, 0 = annihilated
            C factor = one;
            switch (kind) {
                case GenKind::Plus:
                    if (x.a[k - 1] == node + 1) target = node;
                    break;
                case GenKind::Minus:
                    if (x.a[k - 1] == node) target = node + 1;
                    break;
                case GenKind::Cartan:
                    if (x.a[k - 1] == node) target = x.a[k - 1];
                    else if (x.a[k - 1] == node + 1) {
                        target = x.a[k - 1];
                        factor = ctx.rat(-1);
                    }
                    break;
            }
            if (target == 0) continue;
            MVec<C> poly;
            poly.add(PolyTensor{x.m, x.b}, coef * factor);
            MVec<C> moved = apply_y(k, poly, cfg.L, ctx);
            for (const auto& [pt, c2] : moved.terms()) {
                MixedTensor y{pt.m, pt.b, x.a};
                y.a[k - 1] = target;
                to_wedge_term(y, c2, cfg, out);
            }
        }
    }
    return out;
}

// Quadratic corrections: mode-1 generators are J(X) - (hbar/4) * omega(X).
// E_{pq}E_{p'q'} composes right factor first (left-module composition).
template <class C>
WVec<C> omega_correction(GenKind kind, int i, const WVec<C>& v, const Config& cfg) {
    const int N = cfg.N;
    WVec<C> out;
    auto pair_sum = [&](int e1p, int e1q, int e2p, int e2q, int sgn) {
        // E_{e1} E_{e2} + E_{e2} E_{e1}
        WVec<C> term = current_E(e1p, e1q, 0, current_E(e2p, e2q, 0, v, cfg), cfg);
        term += current_E(e2p, e2q, 0, current_E(e1p, e1q, 0, v, cfg), cfg);
        if (sgn > 0) out += term;
        else out -= term;
    };
    switch (kind) {
        case GenKind::Plus:
            for (int p = i + 1; p <= N; ++p) pair_sum(i, p, p, i + 1, +1);
            for (int p = 1; p <= i; ++p) pair_sum(i, p, p, i + 1, -1);
            break;
        case GenKind::Minus:
            for (int p = i + 1; p <= N; ++p) pair_sum(i + 1, p, p, i, +1);
            for (int p = 1; p <= i; ++p) pair_sum(i + 1, p, p, i, -1);
            break;
        case GenKind::Cartan: {
            for (int p = i + 1; p <= N; ++p) pair_sum(i, p, p, i, +1);
            for (int p = 1; p <= i - 1; ++p) pair_sum(i, p, p, i, -1);
            for (int p = 1; p <= i; ++p) pair_sum(i + 1, p, p, i + 1, +1);
            for (int p = i + 2; p <= N; ++p) pair_sum(i + 1, p, p, i + 1, -1);
            // minus 2 H_i^2
            WVec<C> h = current_chevalley<C>(GenKind::Cartan, i, 0, v, cfg);
            h = current_chevalley<C>(GenKind::Cartan, i, 0, h, cfg);
            out -= h.scale(coeff_from_rational<C>(make_rational(2)));
            break;
        }
    }
    return out;
}

// -------------------------------------------------- mode operators, any r >= 0
// r = 0: plain current. r = 1: J(X) - (hbar/4) omega(X). Higher modes by the
// ladder recursion
//   X^+_{i,r+1} = +(1/2)[H_{i,1}, X^+_{i,r}] - (hbar/2)(H_{i,0}X^+_{i,r} + X^+_{i,r}H_{i,0})
//   X^-_{i,r+1} = -(1/2)[H_{i,1}, X^-_{i,r}] - (hbar/2)(H_{i,0}X^-_{i,r} + X^-_{i,r}H_{i,0})
//   H_{i,r}     = [X^+_{i,r}, X^-_{i,0}]   (r >= 2)
template <class C>
WVec<C> finite_mode_op(GeneratorId g, const WVec<C>& v, const Config& cfg, const RingCtx<C>& ctx) {
    if (g.node < 1 || g.node >= cfg.N)
        throw std::invalid_argument("finite_mode_op: node must be in 1..N-1");
    if (g.mode < 0) throw std::invalid_argument("finite_mode_op: mode must be >= 0");
    const int i = g.node;
    if (g.mode == 0) return current_chevalley(g.kind, i, 0, v, cfg);
    if (g.mode == 1) {
        WVec<C> out = j_chevalley(g.kind, i, v, cfg, ctx);
        if (!mutation_active(Mutation::DropOmega)) {
            WVec<C> corr = omega_correction(g.kind, i, v, cfg);
            out -= corr.scale(ctx.hbar * ctx.rat(1, 4));
        }
        return out;
    }
    if (g.kind == GenKind::Cartan) {
        GeneratorId xp{GenKind::Plus, i, g.mode};
        GeneratorId xm{GenKind::Minus, i, 0};
        WVec<C> a = finite_mode_op(xm, v, cfg, ctx);
        a = finite_mode_op(xp, a, cfg, ctx);
        WVec<C> b = finite_mode_op(xp, v, cfg, ctx);
        b = finite_mode_op(xm, b, cfg, ctx);
        return a - b;
    }
    GeneratorId prev{g.kind, i, g.mode - 1};
    GeneratorId h1{GenKind::Cartan, i, 1};
    GeneratorId h0{GenKind::Cartan, i, 0};
    WVec<C> pv = finite_mode_op(prev, v, cfg, ctx);
    WVec<C> comm = finite_mode_op(h1, pv, cfg, ctx);
    comm -= finite_mode_op(prev, finite_mode_op(h1, v, cfg, ctx), cfg, ctx);
    WVec<C> anti = finite_mode_op(h0, pv, cfg, ctx);
    anti += finite_mode_op(prev, finite_mode_op(h0, v, cfg, ctx), cfg, ctx);
    C half = ctx.rat(g.kind == GenKind::Plus ? 1 : -1, 2);
    comm.scale(half);
    anti.scale(ctx.hbar * ctx.rat(-1, 2));
    return comm + anti;
}

// ------------------------------------------------------- action on Fock space

// Smallest truncation index l with s + l*NL >= len(lambda) and l >= max(1, deg).
inline int default_level(const Partition& lambda, long long M, const Config& cfg) {
    long long l = std::max<long long>(1, degree(lambda, M, cfg));
    int s = charge_residue(M, cfg);
    while (s + l * cfg.NL() < (long long)lambda.size()) ++l;
    return (int)l;
}

// Applies a finite-node mode operator through the truncation at length
// n = s + l*NL; output words that touch the vacuum continuation vanish.
template <class C>
FockVec<C> yangian_on_fock(GeneratorId g, const FockVec<C>& v, const Config& cfg,
                           const RingCtx<C>& ctx, int level = -1) {
    FockVec<C> out;
    out.M = v.M;
    for (const auto& [lambda, coef] : v.terms) {
        int l = (level >= 0) ? level : default_level(lambda, v.M, cfg);
        long long n_ll = charge_residue(v.M, cfg) + (long long)l * cfg.NL();
        if (n_ll < (long long)lambda.size())
            throw std::invalid_argument("yangian_on_fock: truncation level too small");
        if (level >= 0 && (long long)level < degree(lambda, v.M, cfg))
            throw std::invalid_argument("yangian_on_fock: level below the degree of the input");
        int n = (int)n_ll;
        const long long boundary = v.M - n;
        WVec<C> w0;
        w0.add(partition_to_word(lambda, v.M, n, cfg), coef);
        WVec<C> w1 = finite_mode_op(g, w0, cfg, ctx);
        for (const auto& [w, c2] : w1.terms()) {
            if (!w.empty() && w.back() <= boundary) continue; // dies on the tail
            out.add(word_to_partition(w, v.M), c2);
        }
    }
    return out;
}

} // namespace fy
