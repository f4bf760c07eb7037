#include "fy/json_io.hpp"

namespace fy {

json parampoly_to_json(const ParamPoly& p) {
    json out = json::array();
    for (const auto& [key, coef] : p.terms()) {
        json term;
        term["t"] = key.first;
        term["c"] = key.second;
        term["num"] = rational_num_string(coef);
        term["den"] = rational_den_string(coef);
        out.push_back(std::move(term));
    }
    return out;
}

ParamPoly parampoly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("parampoly: expected an array of terms");
    ParamPoly p;
    for (const auto& term : j) {
        int dt = term.at("t").get<int>();
        int dc = term.at("c").get<int>();
        Rational num = rational_from_string(term.at("num").get<std::string>());
        Rational den = rational_from_string(term.at("den").get<std::string>());
        if (den == 0) throw std::invalid_argument("parampoly: zero denominator");
        p.add_term(dt, dc, Rational(num / den));
    }
    return p;
}

json partition_to_json(const Partition& p) {
    json out = json::array();
    for (int x : p) out.push_back(x);
    return out;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected an array");
    Partition p;
    for (const auto& x : j) p.push_back(x.get<int>());
    require_partition(p, "partition_from_json");
    return p;
}

json multipartition_to_json(const Multipartition& mp) {
    json comps = json::array();
    for (const auto& p : mp.components) comps.push_back(partition_to_json(p));
    json out;
    out["components"] = std::move(comps);
    out["charges"] = mp.charges;
    return out;
}

Multipartition multipartition_from_json(const json& j) {
    Multipartition mp;
    for (const auto& comp : j.at("components")) mp.components.push_back(partition_from_json(comp));
    mp.charges = j.at("charges").get<std::vector<long long>>();
    if (mp.components.size() != mp.charges.size())
        throw std::invalid_argument("multipartition: components/charges size mismatch");
    return mp;
}

ParsedFock fock_from_json(const json& j) {
    ParsedFock out;
    out.cfg.N = j.at("N").get<int>();
    out.cfg.L = j.at("L").get<int>();
    out.cfg.validate();
    out.charges = j.at("charges").get<std::vector<long long>>();
    if ((int)out.charges.size() != out.cfg.L)
        throw std::invalid_argument("fock vector: need exactly L charges");
    long long M = 0;
    for (long long c : out.charges) M += c;
    out.vec.M = M;
    for (const auto& term : j.at("terms")) {
        Multipartition mp;
        for (const auto& comp : term.at("components")) mp.components.push_back(partition_from_json(comp));
        mp.charges = out.charges;
        auto [lambda, M2] = charge_compose(mp, out.cfg);
        if (M2 != M) throw std::logic_error("fock vector: inconsistent charges");
        out.vec.add(lambda, parampoly_from_json(term.at("coeff")));
    }
    return out;
}

} // namespace fy
