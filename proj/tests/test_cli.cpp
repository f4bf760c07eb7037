#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    std::string cmd = std::string(FY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int st = pclose(p);
    int code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return {code, out};
}

const char* kVecFile = "cli_roundtrip_vec.json";

} // namespace

TEST_CASE("version flag") {
    Run r = run_cli("--version");
    CHECK(r.code == 0);
    CHECK(r.out == "1.0.0\n");
}

TEST_CASE("bijection forward and reverse") {
    Run fwd = run_cli("bijection --N 3 --L 2 --partition 1 --M 0");
    CHECK(fwd.code == 0);
    CHECK(fwd.out == "{\"components\":[[],[]],\"charges\":[-1,1]}\n");

    Run rev = run_cli("bijection --N 3 --L 2 --components [[],[]] --charges -1,1");
    CHECK(rev.code == 0);
    CHECK(rev.out == "{\"partition\":[1],\"M\":0}\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").code == 2);                     // no subcommand
    CHECK(run_cli("frobnicate").code == 2);           // unknown subcommand
    CHECK(run_cli("bijection --N 3").code == 2);      // missing required --L
    CHECK(run_cli("bijection --N 2 --L 1 --M 0").code == 2); // N out of domain
    CHECK(run_cli("act --gen \"X+ i=1 r=0\"").code == 2);    // no input vector
    CHECK(run_cli("verify --profile bogus").code == 2);
    CHECK(run_cli("verify-affine --N 3 --L 1 --charges 0 --modes 7").code == 2);
    CHECK(run_cli("verify-daha --n 2 --L 1 --expbound 1 --symbolic --sample t=1,c=1").code == 2);
}

TEST_CASE("act on the vacuum, then undo through a file") {
    Run down = run_cli(std::string("act --gen \"X- i=0 r=0\" --vacuum --N 3 --L 1 --charges 0") +
                       " --out " + kVecFile);
    REQUIRE(down.code == 0);
    json lowered;
    {
        std::ifstream f(kVecFile);
        REQUIRE(f.good());
        f >> lowered;
    }
    REQUIRE(lowered["terms"].size() == 1);
    CHECK(lowered["terms"][0]["components"] == json::parse("[[1]]"));

    Run up = run_cli(std::string("act --gen \"X+ i=0 r=0\" --vector ") + kVecFile);
    REQUIRE(up.code == 0);
    json back = json::parse(up.out);
    REQUIRE(back["terms"].size() == 1);
    CHECK(back["terms"][0]["components"] == json::parse("[[]]"));
    CHECK(back["terms"][0]["coeff"] ==
          json::parse(R"([{"t":0,"c":0,"num":"1","den":"1"}])"));
}

TEST_CASE("act at a rational point") {
    // reuses the one-box vector file written by the previous case
    Run r = run_cli(std::string("act --gen \"H i=1 r=1\" --t 5/7 --c 2/3 --vector ") + kVecFile);
    REQUIRE(r.code == 0);
    json out = json::parse(r.out);
    REQUIRE(out["terms"].size() == 1);
    CHECK(out["terms"][0]["coeff"] == json::parse(R"([{"t":0,"c":0,"num":"23","den":"42"}])"));
    std::remove(kVecFile);
}

TEST_CASE("matrix subcommand") {
    Run r = run_cli("matrix --gen \"X- i=0 r=0\" --N 3 --L 1 --charges 0 --max-boxes 1");
    REQUIRE(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["col_basis"].size() == 2);
    CHECK(out["row_basis"].size() == 4);
    REQUIRE(out["entries"].size() == 1);
    CHECK(out["entries"][0]["row"] == 1);
    CHECK(out["entries"][0]["col"] == 0);
}

TEST_CASE("verify-daha at a sample point") {
    Run r = run_cli("verify-daha --n 2 --L 1 --expbound 1 --sample t=5/7,c=2/3");
    CHECK(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["passed"] == true);
}

TEST_CASE("verify-affine sampled window is reproducible") {
    std::string args = "verify-affine --N 3 --L 1 --charges 0 --max-boxes 1 --modes 0 "
                       "--sampled --jobs 2 --no-millis";
    Run a = run_cli(args);
    REQUIRE(a.code == 0);
    json out = json::parse(a.out);
    CHECK(out["failed"] == 0);
    CHECK(out["total"].get<int>() > 0);
    Run b = run_cli(args);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("calibrate-nu reports the accepted default") {
    Run r = run_cli("calibrate-nu --N 3 --L 1 --charges 0 --max-boxes 1");
    REQUIRE(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["found"] == true);
    CHECK(out["default_ok"] == true);
}

TEST_CASE("dump-basis lists the window in the documented order") {
    Run r = run_cli("dump-basis --N 3 --L 1 --charges 0 --max-boxes 2");
    REQUIRE(r.code == 0);
    json out = json::parse(r.out);
    REQUIRE(out["basis"].size() == 4);
    CHECK(out["basis"][0]["partition"] == json::parse("[]"));
    CHECK(out["basis"][1]["partition"] == json::parse("[1]"));
    CHECK(out["basis"][2]["partition"] == json::parse("[1,1]"));
    CHECK(out["basis"][3]["partition"] == json::parse("[2]"));
}
