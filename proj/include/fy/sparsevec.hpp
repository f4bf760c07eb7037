#pragma once
#include "fy/ring.hpp"

#include <map>

namespace fy {

// Finitely supported vector over an ordered label type. Labels with zero
// coefficient are never stored, so operator== is meaningful.
template <class Label, class C>
class SparseVec {
public:
    using Map = std::map<Label, C>;

    SparseVec() = default;

    void add(const Label& l, const C& v) {
        if (coeff_is_zero(v)) return;
        auto it = terms_.find(l);
        if (it == terms_.end()) {
            terms_.emplace(l, v);
        } else {
            it->second += v;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    SparseVec& operator+=(const SparseVec& o) {
        for (const auto& [l, v] : o.terms_) add(l, v);
        return *this;
    }
    SparseVec& operator-=(const SparseVec& o) {
        for (const auto& [l, v] : o.terms_) add(l, C{} - v);
        return *this;
    }
    SparseVec operator+(const SparseVec& o) const { SparseVec r = *this; r += o; return r; }
    SparseVec operator-(const SparseVec& o) const { SparseVec r = *this; r -= o; return r; }

    SparseVec& scale(const C& f) {
        if (coeff_is_zero(f)) {
            terms_.clear();
            return *this;
        }
        for (auto& [l, v] : terms_) v = v * f;
        return *this;
    }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SparseVec&) const = default;
    std::size_t size() const { return terms_.size(); }

    const Map& terms() const { return terms_; }
    Map& mutable_terms() { return terms_; }

private:
    Map terms_;
};

} // namespace fy
