// Command-line front end. Talks to the core exclusively through the C API in
// fockyangian.h; every subcommand builds a JSON request, invokes one API call,
// and relays the JSON response.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fockyangian.h"

using json = nlohmann::ordered_json;

namespace {

std::vector<long long> parse_longs(const std::string& csv) {
    std::vector<long long> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer list: " + csv);
        out.push_back(v);
    }
    return out;
}

// "t=5/7,c=2/3" -> {"5/7", "2/3"}
std::pair<std::string, std::string> parse_sample(const std::string& s) {
    std::string t, c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad sample point: " + s);
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "t") t = val;
        else if (key == "c") c = val;
        else throw std::invalid_argument("bad sample point: " + s);
    }
    if (t.empty() || c.empty()) throw std::invalid_argument("sample point needs both t and c");
    return {t, c};
}

json coeff_one() {
    return json::array({json{{"t", 0}, {"c", 0}, {"num", "1"}, {"den", "1"}}});
}

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    json j;
    f >> j;
    return j;
}

int default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

using ApiFn = fy_status (*)(fy_session*, const char*, char**);

int run_call(ApiFn fn, const json& req, const std::string& out_path) {
    fy_session* s = fy_session_new();
    if (!s) {
        std::fprintf(stderr, "error: session allocation failed\n");
        return 3;
    }
    char* resp = nullptr;
    fy_status st = fn(s, req.dump().c_str(), &resp);
    if (resp) {
        if (out_path.empty()) {
            std::printf("%s\n", resp);
        } else {
            std::ofstream f(out_path);
            f << resp << '\n';
            if (!f) {
                std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
                if (st == FY_OK) st = FY_ERR_INTERNAL;
            }
        }
        fy_string_free(resp);
    }
    if (st != FY_OK) std::fprintf(stderr, "error: %s\n", fy_last_error(s));
    fy_session_free(s);
    switch (st) {
        case FY_OK: return 0;
        case FY_ERR_VERIFY: return 1;
        case FY_ERR_USAGE: return 2;
        default: return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fock-space operator toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fy_version());
    int rc = 0;

    // bijection: charged multipartition <-> single partition with charge.
    {
        auto* sub = app.add_subcommand("bijection",
                                       "convert between a charged partition and a multipartition");
        auto N = std::make_shared<int>(3);
        auto L = std::make_shared<int>(1);
        auto M = std::make_shared<long long>(0);
        auto partition = std::make_shared<std::string>();
        auto components = std::make_shared<std::string>();
        auto charges = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("--N", *N, "number of colors (>= 3)")->required();
        sub->add_option("--L", *L, "level (>= 1)")->required();
        sub->add_option("--partition", *partition, "partition as comma list, e.g. 2,1 (forward)");
        sub->add_option("--M", *M, "charge of the partition (forward)");
        sub->add_option("--components", *components,
                        "multipartition as JSON, e.g. [[2,1],[]] (reverse)");
        sub->add_option("--charges", *charges, "component charges as comma list (reverse)");
        sub->add_option("--out", *out, "write the response to a file instead of stdout");
        sub->callback([=, &rc]() {
            json req{{"N", *N}, {"L", *L}};
            if (!components->empty()) {
                req["components"] = json::parse(*components);
                req["charges"] = parse_longs(*charges);
            } else {
                req["partition"] = parse_longs(*partition);
                req["M"] = *M;
            }
            rc = run_call(fy_bijection, req, *out);
        });
    }

    // act: apply one generator to a vector.
    {
        auto* sub = app.add_subcommand("act", "apply a generator to a Fock vector");
        auto gen = std::make_shared<std::string>();
        auto vec_path = std::make_shared<std::string>();
        auto vacuum = std::make_shared<bool>(false);
        auto N = std::make_shared<int>(3);
        auto L = std::make_shared<int>(1);
        auto charges = std::make_shared<std::string>();
        auto level = std::make_shared<int>(-1);
        auto t = std::make_shared<std::string>();
        auto c = std::make_shared<std::string>();
        auto symbolic = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        sub->add_option("--gen", *gen, "generator, e.g. \"X+ i=1 r=0\"")->required();
        sub->add_option("--vector", *vec_path, "input vector JSON file");
        sub->add_flag("--vacuum", *vacuum, "use the vacuum vector of the given charge sector");
        sub->add_option("--N", *N, "number of colors (with --vacuum)");
        sub->add_option("--L", *L, "level (with --vacuum)");
        sub->add_option("--charges", *charges, "charges as comma list (with --vacuum)");
        sub->add_option("--level", *level, "truncation level (default: automatic)");
        sub->add_option("--t", *t, "rational value for t (sampled mode)");
        sub->add_option("--c", *c, "rational value for c (sampled mode)");
        sub->add_flag("--symbolic", *symbolic, "keep coefficients symbolic (default)");
        sub->add_option("--out", *out, "write the response to a file instead of stdout");
        sub->callback([=, &rc]() {
            if (vec_path->empty() == !*vacuum)
                throw CLI::ValidationError("act", "need exactly one of --vector and --vacuum");
            if (*symbolic && (!t->empty() || !c->empty()))
                throw CLI::ValidationError("act", "--symbolic excludes --t/--c");
            json req{{"gen", *gen}};
            if (*vacuum) {
                json vec{{"N", *N}, {"L", *L}, {"charges", parse_longs(*charges)}};
                json comps = json::array();
                for (int b = 0; b < *L; ++b) comps.push_back(json::array());
                vec["terms"] = json::array({json{{"components", comps}, {"coeff", coeff_one()}}});
                req["vector"] = std::move(vec);
            } else {
                req["vector"] = read_json_file(*vec_path);
            }
            if (*level >= 0) req["level"] = *level;
            if (!t->empty() || !c->empty()) {
                req["t"] = *t;
                req["c"] = *c;
            }
            rc = run_call(fy_act, req, *out);
        });
    }

    // matrix: materialize one generator on a basis window.
    {
        auto* sub = app.add_subcommand("matrix", "dump a generator as a sparse matrix on a window");
        auto gen = std::make_shared<std::string>();
        auto N = std::make_shared<int>(3);
        auto L = std::make_shared<int>(1);
        auto charges = std::make_shared<std::string>();
        auto max_boxes = std::make_shared<int>(2);
        auto level = std::make_shared<int>(-1);
        auto t = std::make_shared<std::string>();
        auto c = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("--gen", *gen, "generator, e.g. \"H i=0 r=1\"")->required();
        sub->add_option("--N", *N, "number of colors")->required();
        sub->add_option("--L", *L, "level")->required();
        sub->add_option("--charges", *charges, "charges as comma list")->required();
        sub->add_option("--max-boxes", *max_boxes, "column window: basis vectors with <= B boxes")
            ->required();
        sub->add_option("--level", *level, "truncation level (default: automatic)");
        sub->add_option("--t", *t, "rational value for t (sampled mode)");
        sub->add_option("--c", *c, "rational value for c (sampled mode)");
        sub->add_option("--out", *out, "write the response to a file instead of stdout");
        sub->callback([=, &rc]() {
            json req{{"N", *N},
                     {"L", *L},
                     {"charges", parse_longs(*charges)},
                     {"gen", *gen},
                     {"max_boxes", *max_boxes}};
            if (*level >= 0) req["level"] = *level;
            if (!t->empty() || !c->empty()) {
                req["t"] = *t;
                req["c"] = *c;
            }
            rc = run_call(fy_matrix, req, *out);
        });
    }

    // verify: run a named check profile.
    {
        auto* sub = app.add_subcommand("verify", "run a verification profile");
        auto profile = std::make_shared<std::string>("quick");
        auto jobs = std::make_shared<int>(default_jobs());
        auto json_path = std::make_shared<std::string>();
        auto no_millis = std::make_shared<bool>(false);
        sub->add_option("--profile", *profile, "quick or full")
            ->check(CLI::IsMember({"quick", "full"}));
        sub->add_option("--jobs", *jobs, "worker threads (default: available parallelism)");
        sub->add_option("--json", *json_path, "write the report to a file instead of stdout");
        sub->add_flag("--no-millis", *no_millis, "omit timings for byte-reproducible reports");
        sub->callback([=, &rc]() {
            json req{{"profile", *profile}, {"jobs", *jobs}, {"with_millis", !*no_millis}};
            rc = run_call(fy_verify, req, *json_path);
        });
    }

    // verify-affine: the relation grid on one charge window.
    {
        auto* sub = app.add_subcommand("verify-affine",
                                       "check the defining relations on one charge window");
        auto N = std::make_shared<int>(3);
        auto L = std::make_shared<int>(1);
        auto charges = std::make_shared<std::string>();
        auto max_boxes = std::make_shared<int>(2);
        auto modes = std::make_shared<int>(1);
        auto symbolic = std::make_shared<bool>(false);
        auto sampled = std::make_shared<bool>(false);
        auto jobs = std::make_shared<int>(default_jobs());
        auto json_path = std::make_shared<std::string>();
        auto no_millis = std::make_shared<bool>(false);
        sub->add_option("--N", *N, "number of colors")->required();
        sub->add_option("--L", *L, "level")->required();
        sub->add_option("--charges", *charges, "charges as comma list")->required();
        sub->add_option("--max-boxes", *max_boxes, "window: basis vectors with <= B boxes");
        sub->add_option("--modes", *modes, "highest generator mode to test (0 or 1)")
            ->check(CLI::Range(0, 1));
        sub->add_flag("--symbolic", *symbolic, "test identities in Q[t,c] (default)");
        sub->add_flag("--sampled", *sampled, "test at fixed rational points instead");
        sub->add_option("--jobs", *jobs, "worker threads (default: available parallelism)");
        sub->add_option("--json", *json_path, "write the report to a file instead of stdout");
        sub->add_flag("--no-millis", *no_millis, "omit timings for byte-reproducible reports");
        sub->callback([=, &rc]() {
            if (*symbolic && *sampled)
                throw CLI::ValidationError("verify-affine", "--symbolic excludes --sampled");
            json req{{"suite", "affine"},      {"N", *N},
                     {"L", *L},                {"charges", parse_longs(*charges)},
                     {"max_boxes", *max_boxes}, {"symbolic", !*sampled},
                     {"modes", *modes},        {"jobs", *jobs},
                     {"with_millis", !*no_millis}};
            rc = run_call(fy_verify, req, *json_path);
        });
    }

    // verify-daha: the polynomial-realization relations.
    {
        auto* sub = app.add_subcommand("verify-daha",
                                       "check the degenerate double affine Hecke relations");
        auto n = std::make_shared<int>(2);
        auto L = std::make_shared<int>(1);
        auto expbound = std::make_shared<int>(2);
        auto symbolic = std::make_shared<bool>(false);
        auto sample = std::make_shared<std::string>();
        auto json_path = std::make_shared<std::string>();
        sub->add_option("--n", *n, "number of tensor sites")->required();
        sub->add_option("--L", *L, "level")->required();
        sub->add_option("--expbound", *expbound, "exponent bound of the monomial window")
            ->required();
        sub->add_flag("--symbolic", *symbolic, "test identities in Q[t,c] (default)");
        sub->add_option("--sample", *sample, "rational point, e.g. t=5/7,c=2/3");
        sub->add_option("--json", *json_path, "write the report to a file instead of stdout");
        sub->callback([=, &rc]() {
            if (*symbolic && !sample->empty())
                throw CLI::ValidationError("verify-daha", "--symbolic excludes --sample");
            json req{{"n", *n}, {"L", *L}, {"expbound", *expbound}};
            if (sample->empty()) {
                req["mode"] = "symbolic";
            } else {
                auto [t, c] = parse_sample(*sample);
                req["mode"] = "sample";
                req["t"] = t;
                req["c"] = c;
            }
            rc = run_call(fy_verify_daha, req, *json_path);
        });
    }

    // calibrate-nu: search the color-offset parameter grid.
    {
        auto* sub = app.add_subcommand(
            "calibrate-nu", "search color offsets nu(b) = alpha*(b-1) + gamma for a working value");
        auto N = std::make_shared<int>(3);
        auto L = std::make_shared<int>(2);
        auto charges = std::make_shared<std::string>("-1,1");
        auto max_boxes = std::make_shared<int>(2);
        auto json_path = std::make_shared<std::string>();
        sub->add_option("--N", *N, "number of colors");
        sub->add_option("--L", *L, "level");
        sub->add_option("--charges", *charges, "charges as comma list");
        sub->add_option("--max-boxes", *max_boxes, "window size for the probe checks");
        sub->callback([=, &rc]() {
            json req{{"N", *N},
                     {"L", *L},
                     {"charges", parse_longs(*charges)},
                     {"max_boxes", *max_boxes}};
            rc = run_call(fy_calibrate_nu, req, *json_path);
        });
        sub->add_option("--json", *json_path, "write the report to a file instead of stdout");
    }

    // dump-basis: enumerate a charge window in the documented order.
    {
        auto* sub = app.add_subcommand("dump-basis", "list a basis window in the documented order");
        auto N = std::make_shared<int>(3);
        auto L = std::make_shared<int>(1);
        auto charges = std::make_shared<std::string>();
        auto max_boxes = std::make_shared<int>(2);
        auto out = std::make_shared<std::string>();
        sub->add_option("--N", *N, "number of colors")->required();
        sub->add_option("--L", *L, "level")->required();
        sub->add_option("--charges", *charges, "charges as comma list")->required();
        sub->add_option("--max-boxes", *max_boxes, "basis vectors with <= B boxes")->required();
        sub->add_option("--out", *out, "write the response to a file instead of stdout");
        sub->callback([=, &rc]() {
            json req{{"N", *N},
                     {"L", *L},
                     {"charges", parse_longs(*charges)},
                     {"max_boxes", *max_boxes}};
            rc = run_call(fy_dump_basis, req, *out);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
