#pragma once
#include "fy/fock.hpp"
#include "fy/parampoly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <vector>

namespace fy {

// Insertion-ordered JSON keeps the documented key order byte-stable.
using json = nlohmann::ordered_json;

// ParamPoly <-> sorted term list [{"t":int,"c":int,"num":str,"den":str}, ...],
// ordered by (t, c) exponent pairs; the zero polynomial is [].
json parampoly_to_json(const ParamPoly& p);
ParamPoly parampoly_from_json(const json& j);

inline json coeff_to_json(const ParamPoly& p) { return parampoly_to_json(p); }
inline json coeff_to_json(const Rational& r) { return parampoly_to_json(ParamPoly(r)); }

// {"components": [[row lengths]...], "charges": [...]}
json multipartition_to_json(const Multipartition& mp);
Multipartition multipartition_from_json(const json& j);

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

// Fock vector presented over the charge blocks:
// {"N":, "L":, "charges": [...], "terms": [{"components": ..., "coeff": ...}]}
// Terms are ordered by (total boxes, components lexicographically). Every term
// must live in the same charge block.
template <class C>
json fock_to_json(const FockVec<C>& v, const Config& cfg) {
    json terms = json::array();
    std::vector<std::pair<Multipartition, json>> rows;
    for (const auto& [lambda, coef] : v.terms) {
        Multipartition mp = charge_decompose(lambda, v.M, cfg);
        rows.emplace_back(std::move(mp), coeff_to_json(coef));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        long long sa = a.first.total_boxes(), sb = b.first.total_boxes();
        if (sa != sb) return sa < sb;
        return a.first.components < b.first.components;
    });
    std::vector<long long> charges;
    for (auto& [mp, coef] : rows) {
        if (charges.empty()) charges = mp.charges;
        else if (charges != mp.charges)
            throw std::invalid_argument("fock_to_json: vector mixes charge blocks");
        json t;
        t["components"] = multipartition_to_json(mp)["components"];
        t["coeff"] = std::move(coef);
        terms.push_back(std::move(t));
    }
    if (charges.empty()) charges = vacuum_charges(v.M, cfg);
    json out;
    out["N"] = cfg.N;
    out["L"] = cfg.L;
    out["charges"] = charges;
    out["terms"] = std::move(terms);
    return out;
}

// Parses the same schema; returns the vector plus the config and charges used.
struct ParsedFock {
    Config cfg;
    std::vector<long long> charges;
    FockVec<ParamPoly> vec;
};
ParsedFock fock_from_json(const json& j);

} // namespace fy
