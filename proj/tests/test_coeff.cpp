#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fy/json_io.hpp"
#include "fy/parampoly.hpp"
#include "fy/ring.hpp"

#include <random>

using namespace fy;

namespace {
ParamPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 2), num(-4, 4), den(1, 3);
    ParamPoly p;
    for (int k = 0; k < 4; ++k)
        p.add_term(deg(rng), deg(rng), make_rational(num(rng), den(rng)));
    return p;
}
} // namespace

TEST_CASE("rational helpers") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(rational_to_string(make_rational(-3, 6)) == "-1/2");
    CHECK(rational_to_string(make_rational(5)) == "5");
    CHECK(rational_from_string("5/7") == make_rational(5, 7));
    CHECK(rational_from_string("-12") == make_rational(-12));
    CHECK_THROWS(rational_from_string("1/0"));
    CHECK_THROWS(rational_from_string("x"));
    CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("derived parameters") {
    auto d3 = derived_params(3);
    CHECK(d3.hbar == ParamPoly::c());
    ParamPoly beta3 = ParamPoly::monomial(1, 0, make_rational(1, 2)) +
                      ParamPoly::monomial(0, 1, make_rational(-1, 4));
    CHECK(d3.beta == beta3);
    CHECK(d3.beta.str() == "(-1/4)*c^1 + (1/2)*t^1");

    auto d4 = derived_params(4);
    ParamPoly beta4 = ParamPoly::monomial(1, 0, make_rational(1, 2)) +
                      ParamPoly::monomial(0, 1, make_rational(-1, 2));
    CHECK(d4.beta == beta4);

    CHECK(d3.beta.specialize(make_rational(5, 7), make_rational(2, 3)) == make_rational(4, 21));
    CHECK_THROWS(derived_params(2));
}

TEST_CASE("polynomial ring axioms") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        ParamPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p - p).is_zero());
        CHECK(p + (-p) == ParamPoly{});
        CHECK(p.pow(3) == p * p * p);
        CHECK(p.pow(0) == ParamPoly(1L));
        Rational tv = make_rational(trial - 7, 5), cv = make_rational(3 - trial, 11);
        CHECK((p * q).specialize(tv, cv) == p.specialize(tv, cv) * q.specialize(tv, cv));
        CHECK((p + q).specialize(tv, cv) == p.specialize(tv, cv) + q.specialize(tv, cv));
    }
}

TEST_CASE("canonical form never stores zeros") {
    ParamPoly p = ParamPoly::t();
    p += ParamPoly::monomial(1, 0, make_rational(-1));
    CHECK(p.is_zero());
    CHECK(p.str() == "0");
    ParamPoly q = ParamPoly::t() * ParamPoly{};
    CHECK(q.is_zero());
}

TEST_CASE("ring contexts") {
    auto sym = symbolic_ctx(3, 2);
    CHECK(sym.hbar == ParamPoly::c());
    CHECK(sym.nu.size() == 2);
    CHECK(sym.nu[0].is_zero());
    CHECK(sym.rat(3, 6) == ParamPoly(make_rational(1, 2)));

    auto num = numeric_ctx(4, 1, make_rational(5, 7), make_rational(2, 3));
    CHECK(num.hbar == make_rational(2, 3));
    CHECK(num.beta == make_rational(5, 14) - make_rational(1, 3));
    CHECK_THROWS(symbolic_ctx(3, 2, {ParamPoly::t()}));
}

TEST_CASE("coefficient JSON round trip and golden form") {
    ParamPoly p = ParamPoly(make_rational(1)) + ParamPoly::t();
    json j = parampoly_to_json(p);
    CHECK(j.dump() == R"([{"t":0,"c":0,"num":"1","den":"1"},{"t":1,"c":0,"num":"1","den":"1"}])");
    CHECK(parampoly_from_json(j) == p);

    std::mt19937 rng(911);
    for (int trial = 0; trial < 20; ++trial) {
        ParamPoly q = random_poly(rng);
        CHECK(parampoly_from_json(parampoly_to_json(q)) == q);
    }
    CHECK_THROWS(parampoly_from_json(json{{"bad", 1}}));
}
