#include "fockyangian.h"

#include "fy/affine.hpp"
#include "fy/json_io.hpp"
#include "fy/verify.hpp"

#include <cstring>
#include <functional>
#include <string>

using json = nlohmann::ordered_json;

struct fy_session {
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fy::Config config_from(const json& j) {
    fy::Config cfg;
    cfg.N = j.at("N").get<int>();
    cfg.L = j.at("L").get<int>();
    cfg.validate();
    return cfg;
}

std::vector<long long> charges_from(const json& j, const fy::Config& cfg) {
    auto charges = j.at("charges").get<std::vector<long long>>();
    if ((int)charges.size() != cfg.L)
        throw std::invalid_argument("request: charges must have L entries");
    return charges;
}

// FY_ERR_VERIFY is signalled by throwing this from a handler.
struct VerifyFailed {
    json report;
};

fy_status run_handler(fy_session* s, const char* request, char** response,
                      const std::function<json(const json&)>& fn) {
    if (!s) return FY_ERR_USAGE;
    s->last_error.clear();
    if (!request || !response) {
        s->last_error = "null request or response pointer";
        return FY_ERR_USAGE;
    }
    try {
        json req = json::parse(request);
        json resp = fn(req);
        *response = dup_string(resp.dump());
        return FY_OK;
    } catch (const VerifyFailed& vf) {
        *response = dup_string(vf.report.dump());
        s->last_error = "verification reported failures";
        return FY_ERR_VERIFY;
    } catch (const json::exception& e) {
        s->last_error = std::string("bad request: ") + e.what();
        return FY_ERR_USAGE;
    } catch (const std::invalid_argument& e) {
        s->last_error = e.what();
        return FY_ERR_USAGE;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return FY_ERR_INTERNAL;
    }
}

// Shared by act and matrix: apply one generator, symbolically or at a point.
template <class C>
fy::FockVec<C> act_vector(const fy::GeneratorId& gen, const fy::FockVec<C>& v,
                          const fy::Config& cfg, const fy::RingCtx<C>& ctx, int level) {
    return fy::affine_act(gen, v, cfg, ctx, level);
}

bool has_point(const json& req) { return req.contains("t") || req.contains("c"); }

std::pair<fy::Rational, fy::Rational> point_from(const json& req) {
    if (!req.contains("t") || !req.contains("c"))
        throw std::invalid_argument("request: sampled mode needs both t and c");
    return {fy::rational_from_string(req.at("t").get<std::string>()),
            fy::rational_from_string(req.at("c").get<std::string>())};
}

json handle_bijection(const json& req) {
    fy::Config cfg = config_from(req);
    if (req.contains("partition")) {
        fy::Partition p = fy::partition_from_json(req.at("partition"));
        long long M = req.at("M").get<long long>();
        return fy::multipartition_to_json(fy::charge_decompose(p, M, cfg));
    }
    fy::Multipartition mp = fy::multipartition_from_json(req);
    if ((int)mp.components.size() != cfg.L)
        throw std::invalid_argument("request: components must have L entries");
    auto [lambda, M] = fy::charge_compose(mp, cfg);
    json out;
    out["partition"] = fy::partition_to_json(lambda);
    out["M"] = M;
    return out;
}

json handle_act(const json& req) {
    fy::GeneratorId gen = fy::parse_generator(req.at("gen").get<std::string>());
    fy::ParsedFock parsed = fy::fock_from_json(req.at("vector"));
    int level = req.value("level", -1);
    if (gen.node < 0 || gen.node >= parsed.cfg.N)
        throw std::invalid_argument("request: generator node out of range");
    if (!has_point(req)) {
        auto ctx = fy::symbolic_ctx(parsed.cfg.N, parsed.cfg.L);
        auto out = act_vector(gen, parsed.vec, parsed.cfg, ctx, level);
        return fy::fock_to_json(out, parsed.cfg);
    }
    auto [t, c] = point_from(req);
    auto ctx = fy::numeric_ctx(parsed.cfg.N, parsed.cfg.L, t, c);
    fy::FockVec<fy::Rational> v;
    v.M = parsed.vec.M;
    for (const auto& [lam, coef] : parsed.vec.terms) v.add(lam, coef.specialize(t, c));
    auto out = act_vector(gen, v, parsed.cfg, ctx, level);
    return fy::fock_to_json(out, parsed.cfg);
}

template <class C>
json matrix_of(const fy::GeneratorId& gen, const fy::Config& cfg,
               const std::vector<long long>& charges, int max_boxes, const fy::RingCtx<C>& ctx,
               int level) {
    auto cols = fy::charge_window(charges, max_boxes, cfg);
    auto rows = fy::charge_window(charges, max_boxes + 1, cfg);
    std::map<fy::Partition, int> row_of;
    for (std::size_t k = 0; k < rows.size(); ++k) row_of[rows[k].lambda] = (int)k;
    json entries = json::array();
    for (std::size_t col = 0; col < cols.size(); ++col) {
        auto v = fy::FockVec<C>::basis(cols[col].lambda, cols[col].M);
        auto out = act_vector(gen, v, cfg, ctx, level);
        for (const auto& [lam, coef] : out.terms) {
            auto it = row_of.find(lam);
            if (it == row_of.end())
                throw std::runtime_error("matrix: output left the row window");
            json e;
            e["row"] = it->second;
            e["col"] = (int)col;
            e["coeff"] = fy::coeff_to_json(coef);
            entries.push_back(std::move(e));
        }
    }
    json out;
    out["N"] = cfg.N;
    out["L"] = cfg.L;
    out["charges"] = charges;
    out["gen"] = fy::generator_str(gen);
    json cb = json::array(), rb = json::array();
    for (const auto& we : cols) cb.push_back(fy::multipartition_to_json(we.mp));
    for (const auto& we : rows) rb.push_back(fy::multipartition_to_json(we.mp));
    out["col_basis"] = std::move(cb);
    out["row_basis"] = std::move(rb);
    out["entries"] = std::move(entries);
    return out;
}

json handle_matrix(const json& req) {
    fy::Config cfg = config_from(req);
    auto charges = charges_from(req, cfg);
    fy::GeneratorId gen = fy::parse_generator(req.at("gen").get<std::string>());
    if (gen.node < 0 || gen.node >= cfg.N)
        throw std::invalid_argument("request: generator node out of range");
    int max_boxes = req.at("max_boxes").get<int>();
    if (max_boxes < 0) throw std::invalid_argument("request: max_boxes must be >= 0");
    int level = req.value("level", -1);
    if (!has_point(req)) {
        auto ctx = fy::symbolic_ctx(cfg.N, cfg.L);
        return matrix_of(gen, cfg, charges, max_boxes, ctx, level);
    }
    auto [t, c] = point_from(req);
    auto ctx = fy::numeric_ctx(cfg.N, cfg.L, t, c);
    return matrix_of(gen, cfg, charges, max_boxes, ctx, level);
}

json handle_verify(const json& req) {
    std::vector<fy::CheckSpec> specs;
    if (req.contains("suite")) {
        std::string suite = req.at("suite").get<std::string>();
        if (suite != "affine") throw std::invalid_argument("request: unknown suite");
        fy::Config cfg = config_from(req);
        auto charges = charges_from(req, cfg);
        int max_boxes = req.value("max_boxes", 2);
        if (max_boxes < 0) throw std::invalid_argument("request: max_boxes must be >= 0");
        bool symbolic = req.value("symbolic", true);
        int modes = req.value("modes", 1);
        if (modes != 0 && modes != 1)
            throw std::invalid_argument("request: modes must be 0 or 1");
        specs = fy::finite_relation_checks(cfg, charges, max_boxes, symbolic);
        auto bnd = fy::boundary_relation_checks(cfg, charges, max_boxes, symbolic);
        specs.insert(specs.end(), bnd.begin(), bnd.end());
        if (modes == 0) {
            std::erase_if(specs, [](const fy::CheckSpec& sp) {
                return sp.r != 0 || sp.s != 0 || sp.u != 0;
            });
        }
    } else {
        std::string profile = req.value("profile", "quick");
        if (profile == "quick") specs = fy::quick_profile();
        else if (profile == "full") specs = fy::full_profile();
        else throw std::invalid_argument("request: profile must be quick or full");
    }
    int jobs = req.value("jobs", 1);
    if (jobs < 1) throw std::invalid_argument("request: jobs must be >= 1");
    bool with_millis = req.value("with_millis", true);
    fy::Summary sum = fy::run_many(specs, jobs);
    json report = fy::summary_json(sum, with_millis);
    if (sum.failed > 0) throw VerifyFailed{std::move(report)};
    return report;
}

json handle_verify_daha(const json& req) {
    int n = req.at("n").get<int>();
    int L = req.at("L").get<int>();
    int expbound = req.at("expbound").get<int>();
    std::string mode = req.value("mode", "symbolic");
    json checks = json::array();
    bool all_pass = true;
    auto collect = [&](const auto& results) {
        for (const auto& res : results) {
            json c;
            c["id"] = res.id;
            c["family"] = "H" + std::to_string(res.family);
            c["status"] = res.pass ? "pass" : "fail";
            if (!res.pass) {
                c["counterexample"] = res.counterexample;
                all_pass = false;
            }
            checks.push_back(std::move(c));
        }
    };
    if (mode == "symbolic") {
        auto ctx = fy::symbolic_ctx(3, L);
        collect(fy::check_daha_relations(n, L, expbound, ctx));
    } else if (mode == "sample") {
        auto [t, c] = point_from(req);
        auto ctx = fy::numeric_ctx(3, L, t, c);
        collect(fy::check_daha_relations(n, L, expbound, ctx));
    } else {
        throw std::invalid_argument("request: mode must be symbolic or sample");
    }
    json report;
    report["checks"] = std::move(checks);
    report["passed"] = all_pass;
    if (!all_pass) throw VerifyFailed{std::move(report)};
    return report;
}

json handle_calibrate_nu(const json& req) {
    fy::Config cfg = config_from(req);
    auto charges = charges_from(req, cfg);
    int max_boxes = req.value("max_boxes", 2);
    fy::NuCalibration cal = fy::calibrate_nu(cfg, charges, max_boxes);
    json out;
    out["found"] = cal.found;
    out["default_ok"] = cal.default_ok;
    out["candidates_tried"] = cal.candidates_tried;
    if (cal.found) {
        out["alpha"] = cal.alpha;
        out["gamma"] = cal.gamma;
    }
    if (!cal.found) throw VerifyFailed{std::move(out)};
    return out;
}

json handle_dump_basis(const json& req) {
    fy::Config cfg = config_from(req);
    auto charges = charges_from(req, cfg);
    int max_boxes = req.at("max_boxes").get<int>();
    if (max_boxes < 0) throw std::invalid_argument("request: max_boxes must be >= 0");
    json basis = json::array();
    for (const auto& we : fy::charge_window(charges, max_boxes, cfg)) {
        json e = fy::multipartition_to_json(we.mp);
        e["partition"] = fy::partition_to_json(we.lambda);
        e["M"] = we.M;
        basis.push_back(std::move(e));
    }
    json out;
    out["N"] = cfg.N;
    out["L"] = cfg.L;
    out["basis"] = std::move(basis);
    return out;
}

} // namespace

extern "C" {

fy_session* fy_session_new(void) { return new fy_session; }

void fy_session_free(fy_session* s) { delete s; }

const char* fy_last_error(const fy_session* s) { return s ? s->last_error.c_str() : ""; }

void fy_string_free(char* s) { std::free(s); }

const char* fy_version(void) { return "1.0.0"; }

fy_status fy_bijection(fy_session* s, const char* request, char** response) {
    return run_handler(s, request, response, handle_bijection);
}
fy_status fy_act(fy_session* s, const char* request, char** response) {
    return run_handler(s, request, response, handle_act);
}
fy_status fy_matrix(fy_session* s, const char* request, char** response) {
    return run_handler(s, request, response, handle_matrix);
}
fy_status fy_verify(fy_session* s, const char* request, char** response) {
    return run_handler(s, request, response, handle_verify);
}
fy_status fy_verify_daha(fy_session* s, const char* request, char** response) {
    return run_handler(s, request, response, handle_verify_daha);
}
fy_status fy_calibrate_nu(fy_session* s, const char* request, char** response) {
    return run_handler(s, request, response, handle_calibrate_nu);
}
fy_status fy_dump_basis(fy_session* s, const char* request, char** response) {
    return run_handler(s, request, response, handle_dump_basis);
}

} // extern "C"
