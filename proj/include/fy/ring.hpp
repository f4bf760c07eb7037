#pragma once
#include "fy/parampoly.hpp"

#include <vector>

namespace fy {

// Operator coefficients are computed either symbolically in Q[t,c]
// (C = ParamPoly) or at a fixed rational parameter point (C = Rational).
// Everything downstream is templated on C through this context.

template <class C> C coeff_from_rational(const Rational& r);
template <> inline ParamPoly coeff_from_rational<ParamPoly>(const Rational& r) { return ParamPoly(r); }
template <> inline Rational coeff_from_rational<Rational>(const Rational& r) { return r; }

template <class C> bool coeff_is_zero(const C& v);
template <> inline bool coeff_is_zero<ParamPoly>(const ParamPoly& v) { return v.is_zero(); }
template <> inline bool coeff_is_zero<Rational>(const Rational& v) { return v == 0; }

template <class C> std::string coeff_str(const C& v);
template <> inline std::string coeff_str<ParamPoly>(const ParamPoly& v) { return v.str(); }
template <> inline std::string coeff_str<Rational>(const Rational& v) { return rational_to_string(v); }

template <class C>
struct RingCtx {
    C t, c;
    C hbar; // = c
    C beta; // = t/2 - N c/4 + c/2 for the rank N the context was built at
    std::vector<C> nu; // color-dependent shift, one entry per W-color (size L)

    C rat(long num, long den = 1) const { return coeff_from_rational<C>(make_rational(num, den)); }
    C rat(const Rational& r) const { return coeff_from_rational<C>(r); }
};

inline RingCtx<ParamPoly> symbolic_ctx(int N, int L, std::vector<ParamPoly> nu = {}) {
    RingCtx<ParamPoly> ctx;
    ctx.t = ParamPoly::t();
    ctx.c = ParamPoly::c();
    auto d = derived_params(N);
    ctx.hbar = d.hbar;
    ctx.beta = d.beta;
    if (nu.empty()) nu.assign(L, ParamPoly{});
    if ((int)nu.size() != L) throw std::invalid_argument("ctx: nu must have L entries");
    ctx.nu = std::move(nu);
    return ctx;
}

inline RingCtx<Rational> numeric_ctx(int N, int L, const Rational& t_val, const Rational& c_val,
                                     std::vector<ParamPoly> nu = {}) {
    RingCtx<Rational> ctx;
    ctx.t = t_val;
    ctx.c = c_val;
    auto d = derived_params(N);
    ctx.hbar = d.hbar.specialize(t_val, c_val);
    ctx.beta = d.beta.specialize(t_val, c_val);
    if (nu.empty()) nu.assign(L, ParamPoly{});
    if ((int)nu.size() != L) throw std::invalid_argument("ctx: nu must have L entries");
    ctx.nu.reserve(nu.size());
    for (const auto& p : nu) ctx.nu.push_back(p.specialize(t_val, c_val));
    return ctx;
}

} // namespace fy
