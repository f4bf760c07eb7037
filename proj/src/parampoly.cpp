#include "fy/parampoly.hpp"
#include "fy/mutation.hpp"

#include <sstream>

namespace fy {

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(s);
            return Rational(num);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

std::string rational_num_string(const Rational& r) { return r.get_num().get_str(); }
std::string rational_den_string(const Rational& r) { return r.get_den().get_str(); }

std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return rational_num_string(r);
    return rational_num_string(r) + "/" + rational_den_string(r);
}

void ParamPoly::add_term(int dt, int dc, const Rational& coef) {
    if (coef == 0) return;
    Key k{dt, dc};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, Rational(-v));
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, Rational(-v));
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, Rational(va * vb));
    return r;
}

ParamPoly& ParamPoly::mul_rational(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= r;
    return *this;
}

ParamPoly ParamPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("ParamPoly::pow: negative exponent");
    ParamPoly r{make_rational(1)};
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational ParamPoly::specialize(const Rational& t_val, const Rational& c_val) const {
    Rational acc = 0;
    for (const auto& [k, v] : terms_) {
        Rational term = v;
        for (int i = 0; i < k.first; ++i) term *= t_val;
        for (int i = 0; i < k.second; ++i) term *= c_val;
        acc += term;
    }
    return acc;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << rational_to_string(v) << ")";
        if (k.first) os << "*t^" << k.first;
        if (k.second) os << "*c^" << k.second;
    }
    return os.str();
}

DerivedParams derived_params(int N) {
    if (N < 3) throw std::invalid_argument("derived_params: N must be >= 3");
    DerivedParams d;
    d.hbar = ParamPoly::c();
    d.beta = ParamPoly::monomial(1, 0, make_rational(1, 2));
    d.beta += ParamPoly::monomial(0, 1, make_rational(-N, 4));
    d.beta += ParamPoly::monomial(0, 1, make_rational(mutation_active(Mutation::WrongBeta) ? -1 : 1, 2));
    return d;
}

} // namespace fy
