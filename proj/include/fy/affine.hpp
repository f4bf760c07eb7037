#pragma once
#include "fy/schurweyl.hpp"

#include <sstream>

namespace fy {

// The shift automorphism on one-particle indices: z^m w_b v_a maps to
// z^m w_b v_{a+1} for a < N and to z^{m-1} w_b v_1 for a = N.
inline long long t_index_map(long long k, const Config& cfg) {
    if (mutation_active(Mutation::THighWrap)) {
        long long NL = cfg.NL();
        return floormod(k, NL) == 0 ? k + 1 + cfg.N * (long long)(cfg.L - 1) : k + 1;
    }
    UTriple u = decode_index(k, cfg);
    if (u.a < cfg.N) return encode_index(UTriple{u.m, u.b, u.a + 1}, cfg);
    return encode_index(UTriple{u.m - 1, u.b, 1}, cfg);
}

inline long long t_index_map_inv(long long j, const Config& cfg) {
    if (mutation_active(Mutation::THighWrap)) {
        long long NL = cfg.NL();
        return floormod(j, NL) == 1 ? j - 1 - cfg.N * (long long)(cfg.L - 1) : j - 1;
    }
    UTriple u = decode_index(j, cfg);
    if (u.a > 1) return encode_index(UTriple{u.m, u.b, u.a - 1}, cfg);
    return encode_index(UTriple{u.m + 1, u.b, cfg.N}, cfg);
}

// Finite wedge shift: applies the index map to every factor, |power| times.
template <class C>
WVec<C> apply_T(const WVec<C>& v, const Config& cfg, int power) {
    WVec<C> out;
    for (const auto& [w, coef] : v.terms()) {
        std::vector<long long> ks = w;
        for (long long& k : ks)
            for (int p = 0; p < std::abs(power); ++p)
                k = power > 0 ? t_index_map(k, cfg) : t_index_map_inv(k, cfg);
        auto no = normal_order(std::move(ks));
        if (!no) continue;
        out.add(no->word, no->sign > 0 ? coef : C{} - coef);
    }
    return out;
}

// The L highest one-particle indices of the m-th block with top color N
// (one per intermediate color b), and the same with color N-1.
inline WedgeWord block_top_indices(long long m, int a, const Config& cfg) {
    WedgeWord w;
    for (int b = 1; b <= cfg.L; ++b) w.push_back(encode_index(UTriple{m, b, a}, cfg));
    std::sort(w.begin(), w.end(), std::greater<long long>());
    return w;
}

inline WedgeWord vln_indices(long long m, const Config& cfg) { return block_top_indices(m, cfg.N, cfg); }
inline WedgeWord vln1_indices(long long m, const Config& cfg) {
    WedgeWord w = block_top_indices(m, cfg.N, cfg);
    WedgeWord w2 = block_top_indices(m, cfg.N - 1, cfg);
    w.insert(w.end(), w2.begin(), w2.end());
    std::sort(w.begin(), w.end(), std::greater<long long>());
    return w;
}

// Wedge a finite word with extra factors (merge with sign, zero on repeats).
template <class C>
WVec<C> wedge_concat(const WVec<C>& v, const WedgeWord& extra) {
    WVec<C> out;
    for (const auto& [w, coef] : v.terms()) {
        std::vector<long long> ks = w;
        ks.insert(ks.end(), extra.begin(), extra.end());
        auto no = normal_order(std::move(ks));
        if (!no) continue;
        out.add(no->word, no->sign > 0 ? coef : C{} - coef);
    }
    return out;
}

// Reads a truncated word back as a Fock basis vector at charge M_target,
// dropping words that collide with the vacuum continuation below boundary.
template <class C>
FockVec<C> cap_with_tail(const WVec<C>& v, long long M_target, long long boundary) {
    FockVec<C> out;
    out.M = M_target;
    for (const auto& [w, coef] : v.terms()) {
        if (!w.empty() && w.back() <= boundary) continue;
        out.add(word_to_partition(w, M_target), coef);
    }
    return out;
}

struct SignedBasis {
    int sign = 1;
    Partition lambda;
    long long M = 0;
};

// Semi-infinite shift on one basis vector. direction +1 raises the charge by
// L (adjoin the top color-N block, shift, re-read); -1 undoes it.
inline SignedBasis t_infinity_basis(const Partition& lambda, long long M, int direction,
                                    const Config& cfg, int level = -1) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("t_infinity_basis: direction must be +1 or -1");
    const long long NL = cfg.NL();
    if (direction == 1) {
        int l = (level >= 0) ? level : default_level(lambda, M, cfg);
        long long n = charge_residue(M, cfg) + (long long)l * NL;
        while (n < (long long)lambda.size()) n += NL;
        long long m_tail = (n - M) / NL; // tail starts at |-m_tail NL>
        WedgeWord w = partition_to_word(lambda, M, n, cfg);
        WedgeWord tail = vln_indices(m_tail, cfg);
        w.insert(w.end(), tail.begin(), tail.end());
        for (long long& k : w) k = t_index_map(k, cfg);
        auto no = normal_order(std::move(w));
        if (!no) throw std::logic_error("t_infinity_basis: shifted word has a repeat");
        if (no->word.back() <= M - n)
            throw std::logic_error("t_infinity_basis: shifted word crosses the tail");
        return SignedBasis{no->sign, word_to_partition(no->word, M + cfg.L), M + cfg.L};
    }
    // direction == -1
    const long long M_src = M - cfg.L;
    int l = (level >= 0) ? level : default_level(lambda, M, cfg);
    long long n_src = charge_residue(M_src, cfg) + (long long)l * NL;
    // The inverse map drops color-1 letters by 1 + N(L-1), so the expected
    // color-N block is recognisable only when the bottom N(L-1)+1 slots of the
    // truncated word lie in the vacuum region of lambda.
    while (n_src + cfg.L < (long long)lambda.size() + (long long)cfg.N * (cfg.L - 1) + 1) n_src += NL;
    long long m_tail = (n_src - M_src) / NL;
    WedgeWord w = partition_to_word(lambda, M, n_src + cfg.L, cfg);
    for (long long& k : w) k = t_index_map_inv(k, cfg);
    auto no = normal_order(std::move(w));
    if (!no) throw std::logic_error("t_infinity_basis: unshifted word has a repeat");
    WedgeWord expect = vln_indices(m_tail, cfg);
    for (int j = 0; j < cfg.L; ++j) {
        long long got = no->word[n_src + j];
        if (got != expect[j]) {
            std::ostringstream os;
            os << "t_infinity_basis: inverse image is not in the target space (factor "
               << got << " where " << expect[j] << " was expected)";
            throw std::logic_error(os.str());
        }
    }
    WedgeWord head(no->word.begin(), no->word.begin() + n_src);
    return SignedBasis{no->sign, word_to_partition(head, M_src), M_src};
}

template <class C>
FockVec<C> t_infinity(const FockVec<C>& v, const Config& cfg, int direction, int level = -1) {
    FockVec<C> out;
    out.M = v.M + (direction == 1 ? cfg.L : -cfg.L);
    for (const auto& [lambda, coef] : v.terms) {
        SignedBasis sb = t_infinity_basis(lambda, v.M, direction, cfg, level);
        out.add(sb.lambda, sb.sign > 0 ? coef : C{} - coef);
    }
    return out;
}

// -------------------------------------------------------------- the rho twist
// rho sends node i to node i-1 and re-expands modes binomially:
//   rho(X_{i,r}) = sum_s C(r,s) gamma^{r-s} X_{i-1,s},
// gamma = beta at nodes 0 and 1, hbar/2 elsewhere.
inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
    return r;
}

template <class C>
std::vector<std::pair<C, GeneratorId>> rho_expand(GeneratorId g, int power, const Config& cfg,
                                                  const RingCtx<C>& ctx) {
    std::vector<std::pair<C, GeneratorId>> cur{{ctx.rat(1), g}};
    for (int step = 0; step < power; ++step) {
        std::map<GeneratorId, C> next;
        for (const auto& [coef, gen] : cur) {
            bool boundary = (gen.node == 0 || gen.node == 1);
            C gamma = (boundary && !mutation_active(Mutation::RhoUniformGamma))
                          ? ctx.beta
                          : ctx.hbar * ctx.rat(1, 2);
            int new_node = (gen.node - 1 + cfg.N) % cfg.N;
            C gpow = ctx.rat(1);
            for (int s = gen.mode; s >= 0; --s) {
                C term = coef * ctx.rat(binom(gen.mode, s)) * gpow;
                GeneratorId tg{gen.kind, new_node, s};
                auto it = next.find(tg);
                if (it == next.end()) next.emplace(tg, term);
                else it->second += term;
                gpow = gpow * gamma;
            }
        }
        cur.clear();
        for (auto& [gen, coef] : next)
            if (!coeff_is_zero(coef)) cur.emplace_back(coef, gen);
    }
    return cur;
}

// Node-0 modes r >= 1 through the gluing: conjugate the rho-image (which lives
// at node N-1) by the semi-infinite shift.
template <class C>
FockVec<C> node0_op(GeneratorId g, const FockVec<C>& v, const Config& cfg, const RingCtx<C>& ctx,
                    int level = -1) {
    if (g.node != 0) throw std::invalid_argument("node0_op: node must be 0");
    FockVec<C> inner = t_infinity(v, cfg, -1, level);
    FockVec<C> acc;
    acc.M = inner.M;
    for (const auto& [coef, gen] : rho_expand(g, 1, cfg, ctx)) {
        FockVec<C> piece = yangian_on_fock(gen, inner, cfg, ctx, level);
        acc += piece.scale(coef);
    }
    if (acc.terms.empty()) {
        FockVec<C> out;
        out.M = v.M;
        return out;
    }
    return t_infinity(acc, cfg, +1, level);
}

// Full dispatch over all N nodes of the cyclic diagram.
template <class C>
FockVec<C> affine_act(GeneratorId g, const FockVec<C>& v, const Config& cfg, const RingCtx<C>& ctx,
                      int level = -1) {
    if (g.node < 0 || g.node >= cfg.N) throw std::invalid_argument("affine_act: node out of range");
    if (g.mode < 0) throw std::invalid_argument("affine_act: mode must be >= 0");
    if (g.node != 0) return yangian_on_fock(g, v, cfg, ctx, level);
    if (g.mode == 0) return chevalley_on_fock(g.kind, 0, v, cfg);
    return node0_op(g, v, cfg, ctx, level);
}

} // namespace fy
