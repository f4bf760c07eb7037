#pragma once
#include "fy/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace fy {

// Element of Q[t,c] stored as a sparse map (deg_t, deg_c) -> coefficient.
// Canonical form: no zero coefficients are ever stored, so operator== is
// structural equality and is_zero() is emptiness.
class ParamPoly {
public:
    using Key = std::pair<int, int>; // (deg_t, deg_c)

    ParamPoly() = default;
    explicit ParamPoly(const Rational& v) { add_term(0, 0, v); }
    explicit ParamPoly(long v) { add_term(0, 0, make_rational(v)); }

    static ParamPoly t() { return monomial(1, 0, make_rational(1)); }
    static ParamPoly c() { return monomial(0, 1, make_rational(1)); }
    static ParamPoly monomial(int dt, int dc, const Rational& coef) {
        ParamPoly p;
        p.add_term(dt, dc, coef);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const ParamPoly&) const = default;

    void add_term(int dt, int dc, const Rational& coef);

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly operator+(const ParamPoly& o) const { ParamPoly r = *this; r += o; return r; }
    ParamPoly operator-(const ParamPoly& o) const { ParamPoly r = *this; r -= o; return r; }
    ParamPoly operator-() const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator*=(const ParamPoly& o) { *this = *this * o; return *this; }
    ParamPoly& mul_rational(const Rational& r);
    ParamPoly pow(int e) const;

    // Evaluation at a rational point; a ring homomorphism Q[t,c] -> Q.
    Rational specialize(const Rational& t_val, const Rational& c_val) const;

    const std::map<Key, Rational>& terms() const { return terms_; }

    // Human-readable, deterministic (terms in (deg_t, deg_c) order).
    std::string str() const;

private:
    std::map<Key, Rational> terms_;
};

// Parameter dictionary of the construction at rank N:
// hbar = c,  beta = t/2 - N c/4 + c/2.
struct DerivedParams {
    ParamPoly hbar;
    ParamPoly beta;
};
DerivedParams derived_params(int N);

} // namespace fy
