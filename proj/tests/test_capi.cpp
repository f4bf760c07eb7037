#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockyangian.h"

#include <nlohmann/json.hpp>

#include <string>

using json = nlohmann::ordered_json;

namespace {

struct Session {
    fy_session* s;
    Session() : s(fy_session_new()) {}
    ~Session() { fy_session_free(s); }
};

struct Reply {
    fy_status status;
    std::string body;
};

using ApiFn = fy_status (*)(fy_session*, const char*, char**);

Reply call(ApiFn fn, fy_session* s, const std::string& request) {
    char* out = nullptr;
    fy_status st = fn(s, request.c_str(), &out);
    Reply r{st, out ? std::string(out) : std::string()};
    fy_string_free(out);
    return r;
}

const char* kUnit = R"([{"t":0,"c":0,"num":"1","den":"1"}])";

std::string fock_one_term(const std::string& header, const std::string& components) {
    return "{" + header + ",\"terms\":[{\"components\":" + components +
           ",\"coeff\":" + std::string(kUnit) + "}]}";
}

} // namespace

TEST_CASE("session lifecycle and version") {
    Session ses;
    REQUIRE(ses.s != nullptr);
    CHECK(std::string(fy_last_error(ses.s)) == "");
    CHECK(std::string(fy_last_error(nullptr)) == "");
    REQUIRE(fy_version() != nullptr);
    CHECK(std::string(fy_version()) == "1.0.0");
    fy_string_free(nullptr); // must be a no-op
}

TEST_CASE("bijection round trip") {
    Session ses;
    Reply fwd = call(fy_bijection, ses.s, R"({"N":3,"L":2,"partition":[1],"M":0})");
    REQUIRE(fwd.status == FY_OK);
    CHECK(fwd.body == R"({"components":[[],[]],"charges":[-1,1]})");

    Reply rev = call(fy_bijection, ses.s, R"({"N":3,"L":2,"components":[[],[]],"charges":[-1,1]})");
    REQUIRE(rev.status == FY_OK);
    CHECK(rev.body == R"({"partition":[1],"M":0})");
}

TEST_CASE("act on the vacuum") {
    Session ses;
    std::string req = "{\"gen\":\"X- i=0 r=0\",\"vector\":" +
                      fock_one_term(R"("N":3,"L":1,"charges":[0])", "[[]]") + "}";
    Reply r = call(fy_act, ses.s, req);
    REQUIRE(r.status == FY_OK);
    json out = json::parse(r.body);
    CHECK(out["N"] == 3);
    CHECK(out["charges"] == json::array({0}));
    REQUIRE(out["terms"].size() == 1);
    CHECK(out["terms"][0]["components"] == json::parse("[[1]]"));
    CHECK(out["terms"][0]["coeff"] == json::parse(kUnit));
}

TEST_CASE("act at a numeric parameter point") {
    // mode-1 Cartan eigenvalue t - c/4 = 5/7 - 1/6 = 23/42 on the one-box state
    Session ses;
    std::string req = "{\"gen\":\"H i=1 r=1\",\"t\":\"5/7\",\"c\":\"2/3\",\"vector\":" +
                      fock_one_term(R"("N":3,"L":1,"charges":[0])", "[[1]]") + "}";
    Reply r = call(fy_act, ses.s, req);
    REQUIRE(r.status == FY_OK);
    json out = json::parse(r.body);
    REQUIRE(out["terms"].size() == 1);
    CHECK(out["terms"][0]["components"] == json::parse("[[1]]"));
    CHECK(out["terms"][0]["coeff"] == json::parse(R"([{"t":0,"c":0,"num":"23","den":"42"}])"));
}

TEST_CASE("matrix of a lowering generator") {
    Session ses;
    Reply r = call(fy_matrix, ses.s,
                   R"({"N":3,"L":1,"charges":[0],"gen":"X- i=0 r=0","max_boxes":1})");
    REQUIRE(r.status == FY_OK);
    json out = json::parse(r.body);
    CHECK(out["gen"] == "X- i=0 r=0");
    REQUIRE(out["col_basis"].size() == 2);  // up to 1 box
    REQUIRE(out["row_basis"].size() == 4);  // up to 2 boxes
    CHECK(out["col_basis"][0]["components"] == json::parse("[[]]"));
    CHECK(out["col_basis"][1]["components"] == json::parse("[[1]]"));
    // the only nonzero entry: |empty> -> |(1)>, coefficient 1
    REQUIRE(out["entries"].size() == 1);
    CHECK(out["entries"][0]["row"] == 1);
    CHECK(out["entries"][0]["col"] == 0);
    CHECK(out["entries"][0]["coeff"] == json::parse(kUnit));
}

TEST_CASE("verify on one window") {
    Session ses;
    Reply r = call(fy_verify, ses.s,
                   R"({"suite":"affine","N":3,"L":1,"charges":[0],"max_boxes":1,)"
                   R"("modes":0,"symbolic":false,"jobs":2})");
    REQUIRE(r.status == FY_OK);
    json out = json::parse(r.body);
    CHECK(out["failed"] == 0);
    CHECK(out["passed"] == out["total"]);
    CHECK(out["total"].get<int>() > 0);
    // mode filter keeps only r = s = u = 0 instances
    for (const auto& chk : out["checks"]) {
        CHECK(chk["params"]["r"] == 0);
        CHECK(chk["params"]["s"] == 0);
        CHECK(chk["params"]["mode"] == "sampled");
        CHECK(chk.contains("millis"));
    }
}

TEST_CASE("verify report can omit timings") {
    Session ses;
    Reply r = call(fy_verify, ses.s,
                   R"({"suite":"affine","N":3,"L":1,"charges":[0],"max_boxes":0,)"
                   R"("modes":0,"symbolic":false,"with_millis":false})");
    REQUIRE(r.status == FY_OK);
    json out = json::parse(r.body);
    for (const auto& chk : out["checks"]) CHECK(!chk.contains("millis"));
}

TEST_CASE("verify_daha symbolic") {
    Session ses;
    Reply r = call(fy_verify_daha, ses.s, R"({"n":2,"L":1,"expbound":1})");
    REQUIRE(r.status == FY_OK);
    json out = json::parse(r.body);
    CHECK(out["passed"] == true);
    CHECK(out["checks"].size() > 0);
    for (const auto& chk : out["checks"]) {
        CHECK(chk["status"] == "pass");
        CHECK(chk["family"].get<std::string>().rfind("H", 0) == 0);
    }
}

TEST_CASE("verify_daha at a sample point") {
    Session ses;
    Reply r = call(fy_verify_daha, ses.s,
                   R"({"n":2,"L":2,"expbound":1,"mode":"sample","t":"5/7","c":"2/3"})");
    REQUIRE(r.status == FY_OK);
    CHECK(json::parse(r.body)["passed"] == true);
}

TEST_CASE("calibrate_nu accepts the default") {
    Session ses;
    Reply r = call(fy_calibrate_nu, ses.s, R"({"N":3,"L":1,"charges":[0],"max_boxes":1})");
    REQUIRE(r.status == FY_OK);
    json out = json::parse(r.body);
    CHECK(out["found"] == true);
    CHECK(out["default_ok"] == true);
    CHECK(out["candidates_tried"] == 1);
    CHECK(out["alpha"] == "0");
    CHECK(out["gamma"] == "0");
}

TEST_CASE("dump_basis lists the window in order") {
    Session ses;
    Reply r = call(fy_dump_basis, ses.s, R"({"N":3,"L":1,"charges":[0],"max_boxes":2})");
    REQUIRE(r.status == FY_OK);
    json out = json::parse(r.body);
    REQUIRE(out["basis"].size() == 4);
    CHECK(out["basis"][0] ==
          json::parse(R"({"components":[[]],"charges":[0],"partition":[],"M":0})"));
    CHECK(out["basis"][1]["partition"] == json::parse("[1]"));
    CHECK(out["basis"][2]["partition"] == json::parse("[1,1]"));
    CHECK(out["basis"][3]["partition"] == json::parse("[2]"));
}

TEST_CASE("error paths set FY_ERR_USAGE and a message") {
    Session ses;

    Reply bad = call(fy_bijection, ses.s, "{oops");
    CHECK(bad.status == FY_ERR_USAGE);
    CHECK(std::string(fy_last_error(ses.s)).rfind("bad request:", 0) == 0);

    Reply small_n = call(fy_bijection, ses.s, R"({"N":2,"L":1,"partition":[],"M":0})");
    CHECK(small_n.status == FY_ERR_USAGE);

    Reply bad_gen = call(fy_act, ses.s, "{\"gen\":\"Q i=1 r=0\",\"vector\":" +
                                            fock_one_term(R"("N":3,"L":1,"charges":[0])", "[[]]") +
                                            "}");
    CHECK(bad_gen.status == FY_ERR_USAGE);

    Reply bad_profile = call(fy_verify, ses.s, R"({"profile":"bogus"})");
    CHECK(bad_profile.status == FY_ERR_USAGE);

    Reply bad_jobs = call(fy_verify, ses.s, R"({"profile":"quick","jobs":0})");
    CHECK(bad_jobs.status == FY_ERR_USAGE);

    Reply wrong_charges = call(fy_dump_basis, ses.s, R"({"N":3,"L":2,"charges":[0],"max_boxes":1})");
    CHECK(wrong_charges.status == FY_ERR_USAGE);

    Reply null_req = {fy_bijection(ses.s, nullptr, nullptr), ""};
    CHECK(null_req.status == FY_ERR_USAGE);
    CHECK(fy_bijection(nullptr, "{}", nullptr) == FY_ERR_USAGE);

    // a later successful call clears the sticky message
    Reply ok = call(fy_dump_basis, ses.s, R"({"N":3,"L":1,"charges":[0],"max_boxes":0})");
    CHECK(ok.status == FY_OK);
    CHECK(std::string(fy_last_error(ses.s)) == "");
}
