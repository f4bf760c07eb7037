#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fy/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace fy;

namespace {

CheckSpec spec(const char* id, Config cfg, std::vector<long long> charges, int max_boxes) {
    CheckSpec sp;
    sp.id = id;
    sp.cfg = cfg;
    sp.charges = std::move(charges);
    sp.max_boxes = max_boxes;
    return sp;
}

} // namespace

TEST_CASE("single relation instances pass") {
    CheckSpec y2 = spec("Y2", Config{3, 1}, {0}, 2);
    y2.i = 1, y2.j = 1, y2.r = 1, y2.s = 0;
    CheckOutcome o = run_check(y2);
    CHECK(o.pass);
    CHECK(o.counterexample.empty());
    CHECK(o.millis >= 0);

    CheckSpec h2;
    h2.id = "H2";
    h2.cfg = Config{3, 1};
    h2.n = 2, h2.expbound = 2;
    CHECK(run_check(h2).pass);
}

TEST_CASE("structural checks pass on the small window") {
    auto specs = structure_checks(Config{3, 1}, {0}, 2, 2);
    Summary s = run_many(specs, 2);
    CHECK(s.failed == 0);
    CHECK(s.passed == (int)specs.size());
    CHECK(s.outcomes.size() == specs.size());
    for (std::size_t k = 0; k < specs.size(); ++k) CHECK(s.outcomes[k].spec.id == specs[k].id);
}

TEST_CASE("reports are deterministic modulo timing") {
    auto specs = structure_checks(Config{3, 1}, {0}, 2, 2);
    std::string a = summary_json(run_many(specs, 1), false).dump();
    std::string b = summary_json(run_many(specs, 1), false).dump();
    std::string c = summary_json(run_many(specs, 2), false).dump();
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("check params serialize with a stable key order") {
    CheckSpec sp;
    sp.id = "Y1";
    CHECK(check_params_json(sp).dump() ==
          "{\"N\":3,\"L\":1,\"charges\":[0],\"max_boxes\":2,\"i\":1,\"j\":1,\"r\":0,\"s\":0,"
          "\"u\":0,\"pm\":1,\"n\":2,\"expbound\":2,\"mode\":\"symbolic\",\"nu\":\"zero\"}");
    sp.symbolic = false;
    sp.nu_mode = 1;
    auto p = check_params_json(sp);
    CHECK(p["mode"] == "sampled");
    CHECK(p["nu"] == "generic");
}

TEST_CASE("outcome serialization") {
    CheckOutcome o;
    o.spec.id = "LEVEL";
    o.pass = true;
    o.millis = 7;
    auto j = outcome_json(o, true);
    CHECK(j["id"] == "LEVEL");
    CHECK(j["status"] == "pass");
    CHECK(j["millis"] == 7);
    CHECK(!j.contains("counterexample"));
    CHECK(!outcome_json(o, false).contains("millis"));

    o.pass = false;
    o.counterexample = "broken";
    auto f = outcome_json(o, false);
    CHECK(f["status"] == "fail");
    CHECK(f["counterexample"] == "broken");

    Summary s;
    s.outcomes = {o};
    s.failed = 1;
    auto sj = summary_json(s, false);
    CHECK(sj["checks"].size() == 1);
    CHECK(sj["passed"] == 0);
    CHECK(sj["failed"] == 1);
    CHECK(sj["total"] == 1);
}

TEST_CASE("seeded defects are caught and cleanly restored") {
    CheckSpec cellx = spec("CELLX", Config{3, 1}, {0}, 2);
    {
        MutationGuard guard(Mutation::WordOffByOne);
        CheckOutcome o = run_check(cellx);
        CHECK(!o.pass);
        CHECK(!o.counterexample.empty());
    }
    CHECK(run_check(cellx).pass);

    {
        MutationGuard guard(Mutation::DividedDiffSign);
        bool any_fail = false;
        for (int fam = 1; fam <= 4; ++fam) {
            CheckSpec h;
            h.id = "H" + std::to_string(fam);
            h.cfg = Config{3, 1};
            h.n = 2, h.expbound = 2;
            if (!run_check(h).pass) any_fail = true;
        }
        CHECK(any_fail);
    }
}

TEST_CASE("sampled failures name the sample point") {
    MutationGuard guard(Mutation::DividedDiffSign);
    bool any_annotated = false;
    for (int fam = 1; fam <= 4; ++fam) {
        CheckSpec h;
        h.id = "H" + std::to_string(fam);
        h.cfg = Config{3, 1};
        h.n = 2, h.expbound = 2;
        h.symbolic = false;
        CheckOutcome o = run_check(h);
        if (!o.pass) {
            CHECK(o.counterexample.rfind("at t=", 0) == 0);
            any_annotated = true;
        }
    }
    CHECK(any_annotated);
}

TEST_CASE("stop_on_failure truncates the sequential sweep") {
    MutationGuard guard(Mutation::WordOffByOne);
    auto specs = structure_checks(Config{3, 1}, {0}, 2, 2);
    Summary s = run_many(specs, 1, true);
    CHECK(s.failed == 1);
    CHECK(s.outcomes.size() < specs.size());
    CHECK(!s.outcomes.back().pass);
}

TEST_CASE("profiles cover every check family") {
    auto quick = quick_profile();
    REQUIRE(!quick.empty());
    CHECK(quick.front().id == "CELLX");
    std::set<std::string> ids;
    for (const auto& sp : quick) ids.insert(sp.id);
    for (const char* id : {"Y1", "Y2", "Y3", "Y4", "Y5", "Y6", "Y7", "Y8", "Y9", "Y10", "Y11",
                           "Y12", "H1", "H2", "H3", "H4", "STAB", "KEY", "CYC", "LEVEL", "CELLX"})
        CHECK(ids.count(id) == 1);
    CHECK(full_profile().size() > quick.size());
}

TEST_CASE("grid builders respect their parameters") {
    auto daha = daha_checks(3, 2, 2, true, 0);
    CHECK(daha.size() == 16); // n in {2,3} x L in {1,2} x 4 families
    for (const auto& sp : daha) {
        CHECK(sp.id[0] == 'H');
        CHECK(sp.symbolic);
        CHECK(sp.nu_mode == 0);
    }
    auto bnd = boundary_relation_checks(Config{3, 1}, {0}, 2, false);
    CHECK(bnd.size() == 48); // 6 relations x 2 node pairs x 4 mode pairs
    for (const auto& sp : bnd) CHECK(!sp.symbolic);
}

TEST_CASE("color shift calibration accepts the zero default") {
    NuCalibration cal = calibrate_nu(Config{3, 2}, {-1, 1}, 2);
    CHECK(cal.found);
    CHECK(cal.default_ok);
    CHECK(cal.candidates_tried == 1);
}
