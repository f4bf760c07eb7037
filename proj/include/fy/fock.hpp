#pragma once
#include "fy/wedge.hpp"

#include <algorithm>
#include <map>

namespace fy {

// Vector in the charge-M Fock space, keyed by global partitions. Operators of
// the main construction preserve M; the shift operator moves M by L.
template <class C>
struct FockVec {
    long long M = 0;
    std::map<Partition, C> terms;

    void add(const Partition& p, const C& v) {
        if (coeff_is_zero(v)) return;
        auto it = terms.find(p);
        if (it == terms.end()) {
            terms.emplace(p, v);
        } else {
            it->second += v;
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }
    FockVec& operator+=(const FockVec& o) {
        require_same_M(o);
        for (const auto& [p, v] : o.terms) add(p, v);
        return *this;
    }
    FockVec& operator-=(const FockVec& o) {
        require_same_M(o);
        for (const auto& [p, v] : o.terms) add(p, C{} - v);
        return *this;
    }
    FockVec operator+(const FockVec& o) const { FockVec r = *this; r += o; return r; }
    FockVec operator-(const FockVec& o) const { FockVec r = *this; r -= o; return r; }
    FockVec& scale(const C& f) {
        if (coeff_is_zero(f)) terms.clear();
        else for (auto& [p, v] : terms) v = v * f;
        return *this;
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const FockVec& o) const {
        if (!terms.empty() && !o.terms.empty() && M != o.M) return false;
        return terms == o.terms;
    }

    static FockVec basis(const Partition& p, long long M_) {
        FockVec v;
        v.M = M_;
        v.add(p, coeff_from_rational<C>(make_rational(1)));
        return v;
    }

private:
    void require_same_M(const FockVec& o) const {
        if (!terms.empty() && !o.terms.empty() && M != o.M)
            throw std::invalid_argument("FockVec: mixing different charges M");
    }
};

// (lambda, M) <-> charged-multipartition presentation of the same vector.
template <class C>
MPVec<C> to_multipartition_vec(const FockVec<C>& v, const Config& cfg) {
    MPVec<C> out;
    for (const auto& [p, coef] : v.terms) out.add(charge_decompose(p, v.M, cfg), coef);
    return out;
}

template <class C>
FockVec<C> from_multipartition_vec(const MPVec<C>& v, const Config& cfg, long long fallback_M = 0) {
    FockVec<C> out;
    out.M = fallback_M;
    for (const auto& [mp, coef] : v.terms()) {
        auto [lambda, M] = charge_compose(mp, cfg);
        if (out.terms.empty()) out.M = M;
        else if (out.M != M) throw std::invalid_argument("from_multipartition_vec: mixed M");
        out.add(lambda, coef);
    }
    return out;
}

// Mode-0 generator by box combinatorics; node may be any element of Z/N.
// At every node but 0 the underlying one-particle move shifts a word letter by
// one slot, so the box rule holds with coefficient +1. At node 0 the letter
// jumps 1 + N(L-1) slots (color N to color 1 of the previous z-block), and for
// L > 1 the term carries the parity of the occupied slots it crosses.
template <class C>
FockVec<C> chevalley_on_fock(GenKind kind, int node, const FockVec<C>& v, const Config& cfg) {
    if (node < 0 || node >= cfg.N) throw std::invalid_argument("chevalley_on_fock: node out of range");
    if (node != 0 || cfg.L == 1 || kind == GenKind::Cartan) {
        MPVec<C> mv = to_multipartition_vec(v, cfg);
        MPVec<C> image = chevalley_apply(kind, node, mv, cfg.N);
        return from_multipartition_vec(image, cfg, v.M);
    }
    const long long jump = 1 + (long long)cfg.N * (cfg.L - 1);
    FockVec<C> out;
    out.M = v.M;
    for (const auto& [lambda, coef] : v.terms) {
        // Deep enough that every letter whose move can land on a vacancy, and
        // everything such a move can cross, sits inside the truncated word.
        int n = (int)((long long)lambda.size() + jump + cfg.NL());
        WedgeWord w = partition_to_word(lambda, v.M, n, cfg);
        for (size_t i = 0; i < w.size(); ++i) {
            long long k = w[i];
            int color = (int)floormod(k - 1, cfg.N) + 1;
            if (color != (kind == GenKind::Minus ? cfg.N : 1)) continue;
            long long target = kind == GenKind::Minus ? k + jump : k - jump;
            bool occupied = target <= v.M - n || std::find(w.begin(), w.end(), target) != w.end();
            if (occupied) continue;
            long long lo = std::min(k, target), hi = std::max(k, target);
            int crossed = 0;
            for (long long x : w)
                if (lo < x && x < hi) ++crossed;
            WedgeWord nw = w;
            nw[i] = target;
            std::sort(nw.begin(), nw.end(), std::greater<long long>());
            out.add(word_to_partition(nw, v.M), crossed % 2 ? C{} - coef : coef);
        }
    }
    return out;
}

// Basis window of F(charges): all multipartitions with <= max_boxes boxes at
// the given charges, with their (lambda, M) presentation. Deterministic order:
// total size, then componentwise lexicographic.
struct WindowEntry {
    Multipartition mp;
    Partition lambda;
    long long M;
};
inline std::vector<WindowEntry> charge_window(const std::vector<long long>& charges, int max_boxes,
                                              const Config& cfg) {
    if ((int)charges.size() != cfg.L)
        throw std::invalid_argument("charge_window: need exactly L charges");
    std::vector<WindowEntry> out;
    for (const auto& shape : multipartition_shapes(cfg.L, max_boxes)) {
        Multipartition mp{shape, charges};
        auto [lambda, M] = charge_compose(mp, cfg);
        out.push_back(WindowEntry{std::move(mp), std::move(lambda), M});
    }
    return out;
}

} // namespace fy
