#pragma once
#include "fy/mutation.hpp"
#include "fy/wedge.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fy {

// One relation or structural identity instance, reproducible from its
// serialized form. Ids: Y1..Y12 (Yangian relations), H1..H4 (degenerate
// double affine Hecke relations), STAB (truncation stability + degree
// invariance), KEY (shift compatibility on padded wedges), CYC (shift
// conjugation realizes the diagram rotation), LEVEL (sum of Cartans),
// CELLX (operator pipeline vs box combinatorics at mode 0).
struct CheckSpec {
    std::string id;
    Config cfg{3, 1};
    std::vector<long long> charges{0};
    int max_boxes = 2;
    int i = 1, j = 1; // node parameters
    int r = 0, s = 0; // mode parameters (for STAB/CYC: mode bound r)
    int u = 0;        // third mode (Serre target)
    int pm = +1;      // +1 -> X^+, -1 -> X^-
    int n = 2;        // tensor size for H-checks
    int expbound = 2; // monomial exponent bound for H-checks
    bool symbolic = true;
    int nu_mode = 0; // 0: nu = 0; 1: generic non-constant nu in Q[t,c]
};

struct CheckOutcome {
    CheckSpec spec;
    bool pass = false;
    std::string counterexample; // empty iff pass
    long long millis = 0;
};

struct Summary {
    std::vector<CheckOutcome> outcomes;
    int passed = 0;
    int failed = 0;
};

CheckOutcome run_check(const CheckSpec& spec);

// Runs checks with `jobs` worker threads (1 = sequential). Outcome order is
// the input order regardless of parallelism. stop_on_failure only takes
// effect in the sequential path.
Summary run_many(const std::vector<CheckSpec>& specs, int jobs = 1, bool stop_on_failure = false);

// Check-grid builders.
std::vector<CheckSpec> daha_checks(int max_n, int max_L, int expbound, bool symbolic, int nu_mode);
std::vector<CheckSpec> finite_relation_checks(const Config& cfg, const std::vector<long long>& charges,
                                              int max_boxes, bool symbolic);
std::vector<CheckSpec> boundary_relation_checks(const Config& cfg, const std::vector<long long>& charges,
                                                int max_boxes, bool symbolic);
std::vector<CheckSpec> structure_checks(const Config& cfg, const std::vector<long long>& charges,
                                        int stab_boxes, int cross_boxes);

// quick = the acceptance set on the shipped default windows; full widens them.
std::vector<CheckSpec> quick_profile();
std::vector<CheckSpec> full_profile();

nlohmann::ordered_json check_params_json(const CheckSpec& spec);
nlohmann::ordered_json outcome_json(const CheckOutcome& o, bool with_millis);
nlohmann::ordered_json summary_json(const Summary& s, bool with_millis);

// Runs the quick profile sequentially under the given seeded defect and
// reports the id of the first check that catches it (nullopt = undetected).
std::optional<std::string> first_failure_id(Mutation m);

// Grid search for the color shift nu(b) = alpha*(b-1) + gamma over small
// rational and c-linear candidates, ordered so that nu = 0 is tried first.
// A candidate is accepted when the stability check and the boundary relation
// probes pass on the given window (sampled pre-pass, symbolic confirmation).
struct NuCalibration {
    bool found = false;
    bool default_ok = false;      // the first accepted candidate was nu = 0
    std::string alpha, gamma;     // accepted candidate, as polynomials in c
    int candidates_tried = 0;
};
NuCalibration calibrate_nu(const Config& cfg, const std::vector<long long>& charges, int max_boxes);

} // namespace fy
