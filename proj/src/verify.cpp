#include "fy/verify.hpp"
#include "fy/affine.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace fy {

namespace {

// ------------------------------------------------------------- term algebra

struct RelTerm {
    ParamPoly coef;
    std::vector<GeneratorId> word; // composed left to right: word[0] applied last
};

GeneratorId Xp(int i, int r) { return GeneratorId{GenKind::Plus, i, r}; }
GeneratorId Xm(int i, int r) { return GeneratorId{GenKind::Minus, i, r}; }
GeneratorId Hh(int i, int r) { return GeneratorId{GenKind::Cartan, i, r}; }

void add_comm(std::vector<RelTerm>& out, const ParamPoly& coef, GeneratorId a, GeneratorId b) {
    out.push_back({coef, {a, b}});
    out.push_back({ParamPoly{} - coef, {b, a}});
}
void add_anti(std::vector<RelTerm>& out, const ParamPoly& coef, GeneratorId a, GeneratorId b) {
    out.push_back({coef, {a, b}});
    out.push_back({coef, {b, a}});
}

bool pair_in(int i, int j, std::initializer_list<std::pair<int, int>> set) {
    for (auto [a, b] : set)
        if (i == a && j == b) return true;
    return false;
}

// LHS - RHS of the relation instance as a formal sum of generator words.
std::vector<RelTerm> relation_terms(const CheckSpec& sp) {
    const int N = sp.cfg.N, i = sp.i, j = sp.j, r = sp.r, s = sp.s, pm = sp.pm;
    const ParamPoly one(1L);
    const ParamPoly hbar = derived_params(N).hbar;
    const ParamPoly beta = derived_params(N).beta;
    GenKind K = pm > 0 ? GenKind::Plus : GenKind::Minus;
    auto X = [&](int node, int mode) { return GeneratorId{K, node, mode}; };
    const bool b68 = pair_in(i, j, {{1, 0}, {0, N - 1}});
    const bool b1011 = pair_in(i, j, {{0, 1}, {N - 1, 0}});
    std::vector<RelTerm> t;

    if (sp.id == "Y1") {
        add_comm(t, one, Hh(i, r), Hh(j, s));
    } else if (sp.id == "Y2") {
        add_comm(t, one, Xp(i, r), Xm(j, s));
        if (i == j) t.push_back({ParamPoly{} - one, {Hh(i, r + s)}});
    } else if (sp.id == "Y3") {
        add_comm(t, one, Hh(i, 0), X(j, s));
        long a = cartan_entry(i, j, N);
        if (a != 0) t.push_back({ParamPoly(-pm * a), {X(j, s)}});
    } else if (sp.id == "Y4") {
        if (b68 || b1011)
            throw std::invalid_argument("Y4: boundary pair has its own relation");
        add_comm(t, one, Hh(i, r + 1), X(j, s));
        add_comm(t, ParamPoly{} - one, Hh(i, r), X(j, s + 1));
        long a = cartan_entry(i, j, N);
        if (a != 0) add_anti(t, hbar * ParamPoly(make_rational(-pm * a, 2)), Hh(i, r), X(j, s));
    } else if (sp.id == "Y5") {
        if (b68 || b1011)
            throw std::invalid_argument("Y5: boundary pair has its own relation");
        add_comm(t, one, X(i, r + 1), X(j, s));
        add_comm(t, ParamPoly{} - one, X(i, r), X(j, s + 1));
        long a = cartan_entry(i, j, N);
        if (a != 0) add_anti(t, hbar * ParamPoly(make_rational(-pm * a, 2)), X(i, r), X(j, s));
    } else if (sp.id == "Y6") {
        if (!b68) throw std::invalid_argument("Y6: (i,j) must be (1,0) or (0,N-1)");
        add_comm(t, one, Hh(i, r + 1), Xp(j, s));
        add_comm(t, ParamPoly{} - one, Hh(i, r), Xp(j, s + 1));
        t.push_back({hbar - beta, {Hh(i, r), Xp(j, s)}});
        t.push_back({beta, {Xp(j, s), Hh(i, r)}});
    } else if (sp.id == "Y7") {
        if (!b68) throw std::invalid_argument("Y7: (i,j) must be (1,0) or (0,N-1)");
        add_comm(t, one, Hh(i, r + 1), Xm(j, s));
        add_comm(t, ParamPoly{} - one, Hh(i, r), Xm(j, s + 1));
        t.push_back({ParamPoly{} - beta, {Hh(i, r), Xm(j, s)}});
        t.push_back({beta - hbar, {Xm(j, s), Hh(i, r)}});
    } else if (sp.id == "Y8") {
        if (!b68) throw std::invalid_argument("Y8: (i,j) must be (1,0) or (0,N-1)");
        add_comm(t, one, Xp(i, r + 1), Xp(j, s));
        add_comm(t, ParamPoly{} - one, Xp(i, r), Xp(j, s + 1));
        t.push_back({hbar - beta, {Xp(i, r), Xp(j, s)}});
        t.push_back({beta, {Xp(j, s), Xp(i, r)}});
    } else if (sp.id == "Y9") {
        if (!b68) throw std::invalid_argument("Y9: (i,j) must be (1,0) or (0,N-1)");
        add_comm(t, one, Xm(i, r + 1), Xm(j, s));
        add_comm(t, ParamPoly{} - one, Xm(i, r), Xm(j, s + 1));
        t.push_back({ParamPoly{} - beta, {Xm(i, r), Xm(j, s)}});
        t.push_back({beta - hbar, {Xm(j, s), Xm(i, r)}});
    } else if (sp.id == "Y10") {
        if (!b1011) throw std::invalid_argument("Y10: (i,j) must be (0,1) or (N-1,0)");
        add_comm(t, one, Hh(i, r + 1), Xp(j, s));
        add_comm(t, ParamPoly{} - one, Hh(i, r), Xp(j, s + 1));
        t.push_back({beta, {Hh(i, r), Xp(j, s)}});
        t.push_back({hbar - beta, {Xp(j, s), Hh(i, r)}});
    } else if (sp.id == "Y11") {
        if (!b1011) throw std::invalid_argument("Y11: (i,j) must be (0,1) or (N-1,0)");
        add_comm(t, one, Hh(i, r + 1), Xm(j, s));
        add_comm(t, ParamPoly{} - one, Hh(i, r), Xm(j, s + 1));
        t.push_back({beta - hbar, {Hh(i, r), Xm(j, s)}});
        t.push_back({ParamPoly{} - beta, {Xm(j, s), Hh(i, r)}});
    } else if (sp.id == "Y12") {
        if (i == j) throw std::invalid_argument("Y12: needs i != j");
        long a = cartan_entry(i, j, N);
        if (a == 0) {
            add_comm(t, one, X(i, r), X(j, sp.u));
        } else {
            for (auto [p, q] : {std::pair{r, s}, std::pair{s, r}}) {
                GeneratorId A = X(i, p), B = X(i, q), Cg = X(j, sp.u);
                t.push_back({one, {A, B, Cg}});
                t.push_back({ParamPoly{} - one, {A, Cg, B}});
                t.push_back({ParamPoly{} - one, {B, Cg, A}});
                t.push_back({one, {Cg, B, A}});
            }
        }
    } else {
        throw std::invalid_argument("unknown relation id: " + sp.id);
    }
    return t;
}

// --------------------------------------------------------------- evaluation

template <class C> C ctx_coeff(const ParamPoly& p, const RingCtx<C>& ctx);
template <> ParamPoly ctx_coeff<ParamPoly>(const ParamPoly& p, const RingCtx<ParamPoly>&) {
    return p;
}
template <> Rational ctx_coeff<Rational>(const ParamPoly& p, const RingCtx<Rational>& ctx) {
    return p.specialize(ctx.t, ctx.c);
}

template <class C>
struct OpCache {
    Config cfg;
    const RingCtx<C>* ctx;
    std::map<std::pair<GeneratorId, Partition>, FockVec<C>> memo;

    FockVec<C> apply(GeneratorId g, const FockVec<C>& v) {
        FockVec<C> out;
        out.M = v.M;
        for (const auto& [lam, coef] : v.terms) {
            auto key = std::make_pair(g, lam);
            auto it = memo.find(key);
            if (it == memo.end()) {
                FockVec<C> basis = FockVec<C>::basis(lam, v.M);
                it = memo.emplace(key, affine_act(g, basis, cfg, *ctx)).first;
            }
            FockVec<C> term = it->second;
            out += term.scale(coef);
        }
        return out;
    }
};

std::string mp_str(const Multipartition& mp) {
    std::ostringstream os;
    os << "|";
    for (std::size_t s = 0; s < mp.components.size(); ++s) {
        if (s) os << ";";
        os << "(";
        for (std::size_t k = 0; k < mp.components[s].size(); ++k)
            os << (k ? "," : "") << mp.components[s][k];
        os << ")";
    }
    os << " @ ";
    for (std::size_t s = 0; s < mp.charges.size(); ++s) os << (s ? "," : "") << mp.charges[s];
    os << ">";
    return os.str();
}

template <class C>
std::string fock_str(const FockVec<C>& v, const Config& cfg) {
    if (v.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, coef] : v.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff_str(coef) << ")*" << mp_str(charge_decompose(lam, v.M, cfg));
    }
    return os.str();
}

template <class C>
std::string residual_str(const WindowEntry& we, const FockVec<C>& residual, const Config& cfg) {
    std::ostringstream os;
    os << "on " << mp_str(we.mp) << ": residual " << fock_str(residual, cfg);
    return os.str();
}

template <class C>
std::optional<std::string> check_relation(const CheckSpec& sp, const RingCtx<C>& ctx) {
    auto terms = relation_terms(sp);
    auto window = charge_window(sp.charges, sp.max_boxes, sp.cfg);
    OpCache<C> oc{sp.cfg, &ctx, {}};
    for (const auto& we : window) {
        FockVec<C> v = FockVec<C>::basis(we.lambda, we.M);
        FockVec<C> acc;
        acc.M = we.M;
        for (const auto& rt : terms) {
            C coef = ctx_coeff<C>(rt.coef, ctx);
            if (coeff_is_zero(coef)) continue;
            FockVec<C> cur = v;
            for (auto it = rt.word.rbegin(); it != rt.word.rend(); ++it) cur = oc.apply(*it, cur);
            acc += cur.scale(coef);
        }
        if (!acc.terms.empty()) return residual_str(we, acc, sp.cfg);
    }
    return std::nullopt;
}

// STAB: finite mode operators agree between truncation levels l and l+1 and
// preserve the z-degree of every basis vector.
template <class C>
std::optional<std::string> check_stab(const CheckSpec& sp, const RingCtx<C>& ctx) {
    auto window = charge_window(sp.charges, sp.max_boxes, sp.cfg);
    for (const auto& we : window) {
        FockVec<C> v = FockVec<C>::basis(we.lambda, we.M);
        long long d = degree(we.lambda, we.M, sp.cfg);
        for (int node = 1; node < sp.cfg.N; ++node)
            for (GenKind kind : {GenKind::Plus, GenKind::Minus, GenKind::Cartan})
                for (int mode = 0; mode <= sp.r; ++mode) {
                    GeneratorId g{kind, node, mode};
                    int l = default_level(we.lambda, we.M, sp.cfg);
                    FockVec<C> o1 = yangian_on_fock(g, v, sp.cfg, ctx, l);
                    FockVec<C> o2 = yangian_on_fock(g, v, sp.cfg, ctx, l + 1);
                    if (!(o1 == o2)) {
                        std::ostringstream os;
                        os << "on " << mp_str(we.mp) << ": " << generator_str(g) << " differs at levels "
                           << l << " and " << l + 1 << ": " << fock_str(o1, sp.cfg) << " vs "
                           << fock_str(o2, sp.cfg);
                        return os.str();
                    }
                    for (const auto& [lam2, c2] : o1.terms)
                        if (degree(lam2, we.M, sp.cfg) != d) {
                            std::ostringstream os;
                            os << "on " << mp_str(we.mp) << ": " << generator_str(g)
                               << " changed the degree";
                            return os.str();
                        }
                }
    }
    return std::nullopt;
}

// KEY: compatibility of mode operators with the shift on padded words.
// Single-shift form at nodes 1..N-2, double-shift form at node N-1.
template <class C>
std::optional<std::string> check_key(const CheckSpec& sp, const RingCtx<C>& ctx) {
    const Config& cfg = sp.cfg;
    const int node = sp.i;
    if (node < 1 || node >= cfg.N) throw std::invalid_argument("KEY: node must be in 1..N-1");
    const bool dbl = (node == cfg.N - 1);
    const int tpow = dbl ? 2 : 1;
    auto window = charge_window(sp.charges, sp.max_boxes, cfg);
    const C one = ctx.rat(1);
    std::vector<GeneratorId> gens = {Xp(node, 0), Xm(node, 0), Hh(node, 0), Xm(node, 1)};
    for (const auto& we : window) {
        const long long M = we.M;
        int l = default_level(we.lambda, M, cfg);
        long long n = charge_residue(M, cfg) + (long long)l * cfg.NL();
        while (n < (long long)we.lambda.size()) n += cfg.NL();
        const long long m_tail = (n - M) / cfg.NL();
        const long long boundary = M - n;
        WedgeWord u = partition_to_word(we.lambda, M, (int)n, cfg);
        WedgeWord pad = dbl ? vln1_indices(m_tail, cfg) : vln_indices(m_tail, cfg);
        const long long Mt = M + (long long)tpow * cfg.L;
        WedgeWord padded = u;
        padded.insert(padded.end(), pad.begin(), pad.end());
        for (GeneratorId g : gens) {
            WVec<C> w1;
            w1.add(padded, one);
            FockVec<C> lf = cap_with_tail(apply_T(finite_mode_op(g, w1, cfg, ctx), cfg, tpow), Mt,
                                          boundary);
            WVec<C> w2;
            w2.add(u, one);
            FockVec<C> rf = cap_with_tail(
                apply_T(wedge_concat(finite_mode_op(g, w2, cfg, ctx), pad), cfg, tpow), Mt, boundary);
            if (!(lf == rf)) {
                std::ostringstream os;
                os << "on " << mp_str(we.mp) << ": " << generator_str(g)
                   << (dbl ? " (double shift)" : " (single shift)") << ": "
                   << fock_str(lf, cfg) << " vs " << fock_str(rf, cfg);
                return os.str();
            }
        }
    }
    return std::nullopt;
}

// CYC: conjugation by the semi-infinite shift realizes the diagram rotation.
// Single conjugation at nodes 2..N-1, double at node 1.
template <class C>
std::optional<std::string> check_cyc(const CheckSpec& sp, const RingCtx<C>& ctx) {
    const Config& cfg = sp.cfg;
    const int node = sp.i;
    if (node < 1 || node >= cfg.N) throw std::invalid_argument("CYC: node must be in 1..N-1");
    const int power = (node == 1) ? 2 : 1;
    auto window = charge_window(sp.charges, sp.max_boxes, cfg);
    for (const auto& we : window) {
        FockVec<C> v = FockVec<C>::basis(we.lambda, we.M);
        for (GenKind kind : {GenKind::Plus, GenKind::Minus, GenKind::Cartan})
            for (int mode = 0; mode <= sp.r; ++mode) {
                GeneratorId g{kind, node, mode};
                FockVec<C> up = v;
                for (int p = 0; p < power; ++p) up = t_infinity(up, cfg, +1);
                FockVec<C> mid = yangian_on_fock(g, up, cfg, ctx);
                for (int p = 0; p < power; ++p) mid = t_infinity(mid, cfg, -1);
                FockVec<C> rhs;
                rhs.M = we.M;
                for (const auto& [coef, gen] : rho_expand(g, power, cfg, ctx)) {
                    FockVec<C> piece = yangian_on_fock(gen, v, cfg, ctx);
                    rhs += piece.scale(coef);
                }
                if (!(mid == rhs)) {
                    std::ostringstream os;
                    os << "on " << mp_str(we.mp) << ": " << generator_str(g) << " conjugated ("
                       << power << "x) gives " << fock_str(mid, cfg) << ", rotation gives "
                       << fock_str(rhs, cfg);
                    return os.str();
                }
            }
    }
    return std::nullopt;
}

// LEVEL: the Cartan modes at r = 0 sum to L times the identity.
template <class C>
std::optional<std::string> check_level(const CheckSpec& sp, const RingCtx<C>& ctx) {
    auto window = charge_window(sp.charges, sp.max_boxes, sp.cfg);
    for (const auto& we : window) {
        FockVec<C> v = FockVec<C>::basis(we.lambda, we.M);
        FockVec<C> acc;
        acc.M = we.M;
        for (int node = 0; node < sp.cfg.N; ++node)
            acc += chevalley_on_fock(GenKind::Cartan, node, v, sp.cfg);
        FockVec<C> expect = v;
        expect.scale(ctx.rat(sp.cfg.L));
        if (!(acc == expect)) {
            std::ostringstream os;
            os << "on " << mp_str(we.mp) << ": sum of Cartans gives " << fock_str(acc, sp.cfg);
            return os.str();
        }
    }
    return std::nullopt;
}

// CELLX: mode-0 operators computed through the wedge pipeline match the direct
// combinatorial action: box addition/removal at the finite nodes, the signed
// one-particle ladder move at node 0 (compared against the shift gluing).
template <class C>
std::optional<std::string> check_cellx(const CheckSpec& sp, const RingCtx<C>& ctx) {
    auto window = charge_window(sp.charges, sp.max_boxes, sp.cfg);
    for (const auto& we : window) {
        FockVec<C> v = FockVec<C>::basis(we.lambda, we.M);
        for (GenKind kind : {GenKind::Plus, GenKind::Minus, GenKind::Cartan})
            for (int node = 0; node < sp.cfg.N; ++node) {
                GeneratorId g{kind, node, 0};
                FockVec<C> pipeline = node == 0 ? node0_op(g, v, sp.cfg, ctx)
                                                : yangian_on_fock(g, v, sp.cfg, ctx);
                FockVec<C> cells = chevalley_on_fock(kind, node, v, sp.cfg);
                if (!(pipeline == cells)) {
                    std::ostringstream os;
                    os << "on " << mp_str(we.mp) << ": " << generator_str(g) << " pipeline gives "
                       << fock_str(pipeline, sp.cfg) << ", cells give " << fock_str(cells, sp.cfg);
                    return os.str();
                }
            }
    }
    return std::nullopt;
}

std::vector<ParamPoly> build_nu(int L, int nu_mode) {
    std::vector<ParamPoly> nu;
    for (int b = 1; b <= L; ++b) {
        if (nu_mode == 0) {
            nu.emplace_back();
        } else {
            ParamPoly p(2L * b - 1);
            p += ParamPoly::t();
            p += ParamPoly::c() * ParamPoly((long)b);
            nu.push_back(std::move(p));
        }
    }
    return nu;
}

template <class C>
std::optional<std::string> check_daha(const CheckSpec& sp, const RingCtx<C>& ctx) {
    int family = sp.id[1] - '0';
    for (const auto& res : check_daha_relations(sp.n, sp.cfg.L, sp.expbound, ctx, family))
        if (!res.pass) return res.id + ": " + res.counterexample;
    return std::nullopt;
}

template <class C>
std::optional<std::string> dispatch_check(const CheckSpec& sp, const RingCtx<C>& ctx) {
    if (sp.id.size() == 2 && sp.id[0] == 'H' && sp.id[1] >= '1' && sp.id[1] <= '4')
        return check_daha(sp, ctx);
    if (sp.id == "STAB") return check_stab(sp, ctx);
    if (sp.id == "KEY") return check_key(sp, ctx);
    if (sp.id == "CYC") return check_cyc(sp, ctx);
    if (sp.id == "LEVEL") return check_level(sp, ctx);
    if (sp.id == "CELLX") return check_cellx(sp, ctx);
    return check_relation(sp, ctx);
}

struct SamplePoint {
    Rational t, c;
};
const std::vector<SamplePoint>& sample_points() {
    static const std::vector<SamplePoint> pts = {
        {make_rational(5, 7), make_rational(3, 11)},
        {make_rational(8, 13), make_rational(-5, 7)},
        {make_rational(-9, 11), make_rational(4, 7)},
    };
    return pts;
}

} // namespace

CheckOutcome run_check(const CheckSpec& sp) {
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome o;
    o.spec = sp;
    try {
        std::optional<std::string> fail;
        if (sp.symbolic) {
            auto ctx = symbolic_ctx(sp.cfg.N, sp.cfg.L, build_nu(sp.cfg.L, sp.nu_mode));
            fail = dispatch_check(sp, ctx);
        } else {
            for (const auto& pt : sample_points()) {
                auto ctx = numeric_ctx(sp.cfg.N, sp.cfg.L, pt.t, pt.c, build_nu(sp.cfg.L, sp.nu_mode));
                fail = dispatch_check(sp, ctx);
                if (fail) {
                    fail = "at t=" + rational_to_string(pt.t) + ", c=" + rational_to_string(pt.c) +
                           ": " + *fail;
                    break;
                }
            }
        }
        o.pass = !fail.has_value();
        if (fail) o.counterexample = *fail;
    } catch (const std::exception& e) {
        o.pass = false;
        o.counterexample = std::string("error: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    o.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return o;
}

Summary run_many(const std::vector<CheckSpec>& specs, int jobs, bool stop_on_failure) {
    Summary sum;
    sum.outcomes.resize(specs.size());
    if (jobs <= 1 || stop_on_failure) {
        for (std::size_t k = 0; k < specs.size(); ++k) {
            sum.outcomes[k] = run_check(specs[k]);
            if (stop_on_failure && !sum.outcomes[k].pass) {
                sum.outcomes.resize(k + 1);
                break;
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k; (k = next.fetch_add(1)) < specs.size();)
                sum.outcomes[k] = run_check(specs[k]);
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& oc : sum.outcomes) (oc.pass ? sum.passed : sum.failed)++;
    return sum;
}

std::vector<CheckSpec> daha_checks(int max_n, int max_L, int expbound, bool symbolic, int nu_mode) {
    std::vector<CheckSpec> out;
    for (int L = 1; L <= max_L; ++L)
        for (int n = 2; n <= max_n; ++n)
            for (int fam = 1; fam <= 4; ++fam) {
                CheckSpec sp;
                sp.id = "H" + std::to_string(fam);
                sp.cfg = Config{3, L};
                sp.n = n;
                sp.expbound = expbound;
                sp.symbolic = symbolic;
                sp.nu_mode = nu_mode;
                out.push_back(std::move(sp));
            }
    return out;
}

std::vector<CheckSpec> finite_relation_checks(const Config& cfg, const std::vector<long long>& charges,
                                              int max_boxes, bool symbolic) {
    std::vector<CheckSpec> out;
    auto base = [&](const char* id) {
        CheckSpec sp;
        sp.id = id;
        sp.cfg = cfg;
        sp.charges = charges;
        sp.max_boxes = max_boxes;
        sp.symbolic = symbolic;
        return sp;
    };
    const int F = cfg.N - 1;
    for (int i = 1; i <= F; ++i)
        for (int j = i; j <= F; ++j)
            for (int r = 0; r <= 1; ++r)
                for (int s = (i == j ? r : 0); s <= 1; ++s) {
                    CheckSpec sp = base("Y1");
                    sp.i = i, sp.j = j, sp.r = r, sp.s = s;
                    out.push_back(std::move(sp));
                }
    for (int i = 1; i <= F; ++i)
        for (int j = 1; j <= F; ++j)
            for (int r = 0; r <= 1; ++r)
                for (int s = 0; s <= 1; ++s) {
                    CheckSpec sp = base("Y2");
                    sp.i = i, sp.j = j, sp.r = r, sp.s = s;
                    out.push_back(std::move(sp));
                }
    for (int i = 1; i <= F; ++i)
        for (int j = 1; j <= F; ++j)
            for (int s = 0; s <= 1; ++s)
                for (int pm : {+1, -1}) {
                    CheckSpec sp = base("Y3");
                    sp.i = i, sp.j = j, sp.s = s, sp.pm = pm;
                    out.push_back(std::move(sp));
                }
    for (const char* id : {"Y4", "Y5"})
        for (int i = 1; i <= F; ++i)
            for (int j = 1; j <= F; ++j)
                for (int r = 0; r <= 1; ++r)
                    for (int s = 0; s <= 1; ++s)
                        for (int pm : {+1, -1}) {
                            CheckSpec sp = base(id);
                            sp.i = i, sp.j = j, sp.r = r, sp.s = s, sp.pm = pm;
                            out.push_back(std::move(sp));
                        }
    for (int i = 1; i <= F; ++i)
        for (int j = 1; j <= F; ++j) {
            if (i == j) continue;
            long a = cartan_entry(i, j, cfg.N);
            for (int pm : {+1, -1})
                for (int u = 0; u <= 1; ++u) {
                    if (a == 0) {
                        CheckSpec sp = base("Y12");
                        sp.i = i, sp.j = j, sp.pm = pm, sp.u = u;
                        out.push_back(std::move(sp));
                        continue;
                    }
                    for (auto [r, s] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
                        CheckSpec sp = base("Y12");
                        sp.i = i, sp.j = j, sp.r = r, sp.s = s, sp.pm = pm, sp.u = u;
                        out.push_back(std::move(sp));
                    }
                }
        }
    return out;
}

std::vector<CheckSpec> boundary_relation_checks(const Config& cfg, const std::vector<long long>& charges,
                                                int max_boxes, bool symbolic) {
    std::vector<CheckSpec> out;
    auto add = [&](const char* id, int i, int j) {
        for (int r = 0; r <= 1; ++r)
            for (int s = 0; s <= 1; ++s) {
                CheckSpec sp;
                sp.id = id;
                sp.cfg = cfg;
                sp.charges = charges;
                sp.max_boxes = max_boxes;
                sp.symbolic = symbolic;
                sp.i = i, sp.j = j, sp.r = r, sp.s = s;
                out.push_back(std::move(sp));
            }
    };
    for (auto [i, j] : {std::pair{1, 0}, std::pair{0, cfg.N - 1}}) {
        add("Y6", i, j);
        add("Y7", i, j);
        add("Y8", i, j);
        add("Y9", i, j);
    }
    for (auto [i, j] : {std::pair{0, 1}, std::pair{cfg.N - 1, 0}}) {
        add("Y10", i, j);
        add("Y11", i, j);
    }
    return out;
}

std::vector<CheckSpec> structure_checks(const Config& cfg, const std::vector<long long>& charges,
                                        int stab_boxes, int cross_boxes) {
    std::vector<CheckSpec> out;
    auto base = [&](const char* id, int boxes) {
        CheckSpec sp;
        sp.id = id;
        sp.cfg = cfg;
        sp.charges = charges;
        sp.max_boxes = boxes;
        return sp;
    };
    {
        CheckSpec sp = base("CELLX", cross_boxes);
        out.push_back(std::move(sp));
    }
    {
        CheckSpec sp = base("LEVEL", cross_boxes);
        out.push_back(std::move(sp));
    }
    {
        CheckSpec sp = base("STAB", stab_boxes);
        sp.r = 1;
        out.push_back(std::move(sp));
    }
    for (int node = 1; node < cfg.N; ++node) {
        CheckSpec sp = base("CYC", 2);
        sp.i = node;
        sp.r = 1;
        out.push_back(std::move(sp));
    }
    for (int node = 1; node < cfg.N; ++node) {
        CheckSpec sp = base("KEY", 2);
        sp.i = node;
        out.push_back(std::move(sp));
    }
    return out;
}

std::vector<CheckSpec> quick_profile() {
    std::vector<CheckSpec> out;
    auto append = [&](std::vector<CheckSpec> v) {
        for (auto& sp : v) out.push_back(std::move(sp));
    };
    // Cheap structural checks first: the sequential fault sweep stops at the
    // first failure, so the broad-coverage checks should cost the least.
    const Config A{3, 1}, B{3, 2};
    const std::vector<long long> cA{0}, cB{-1, 1};
    append(structure_checks(A, cA, 3, 4));
    append(structure_checks(B, cB, 3, 4));
    // small early probes for the mode-1 corrections
    {
        CheckSpec sp;
        sp.id = "Y2";
        sp.cfg = A, sp.charges = cA, sp.max_boxes = 2;
        sp.i = 1, sp.j = 1, sp.r = 1, sp.s = 0;
        out.push_back(std::move(sp));
    }
    {
        CheckSpec sp;
        sp.id = "Y4";
        sp.cfg = A, sp.charges = cA, sp.max_boxes = 2;
        sp.i = 1, sp.j = 1, sp.r = 0, sp.s = 0, sp.pm = -1;
        out.push_back(std::move(sp));
    }
    append(daha_checks(3, 2, 2, true, 0));
    append(daha_checks(3, 2, 2, true, 1));
    append(finite_relation_checks(A, cA, 3, true));
    append(finite_relation_checks(B, cB, 3, true));
    append(boundary_relation_checks(A, cA, 2, true));
    append(boundary_relation_checks(B, cB, 2, false));
    return out;
}

std::vector<CheckSpec> full_profile() {
    std::vector<CheckSpec> out = quick_profile();
    auto append = [&](std::vector<CheckSpec> v) {
        for (auto& sp : v) out.push_back(std::move(sp));
    };
    const Config A{3, 1}, B{3, 2};
    append(finite_relation_checks(A, {0}, 4, true));
    append(boundary_relation_checks(B, {-1, 1}, 2, true));
    return out;
}

nlohmann::ordered_json check_params_json(const CheckSpec& sp) {
    nlohmann::ordered_json p;
    p["N"] = sp.cfg.N;
    p["L"] = sp.cfg.L;
    p["charges"] = sp.charges;
    p["max_boxes"] = sp.max_boxes;
    p["i"] = sp.i;
    p["j"] = sp.j;
    p["r"] = sp.r;
    p["s"] = sp.s;
    p["u"] = sp.u;
    p["pm"] = sp.pm;
    p["n"] = sp.n;
    p["expbound"] = sp.expbound;
    p["mode"] = sp.symbolic ? "symbolic" : "sampled";
    p["nu"] = sp.nu_mode == 0 ? "zero" : "generic";
    return p;
}

nlohmann::ordered_json outcome_json(const CheckOutcome& o, bool with_millis) {
    nlohmann::ordered_json j;
    j["id"] = o.spec.id;
    j["params"] = check_params_json(o.spec);
    j["status"] = o.pass ? "pass" : "fail";
    if (!o.pass) j["counterexample"] = o.counterexample;
    if (with_millis) j["millis"] = o.millis;
    return j;
}

nlohmann::ordered_json summary_json(const Summary& s, bool with_millis) {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& o : s.outcomes) j["checks"].push_back(outcome_json(o, with_millis));
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["total"] = (int)s.outcomes.size();
    return j;
}

std::optional<std::string> first_failure_id(Mutation m) {
    MutationGuard guard(m);
    Summary s = run_many(quick_profile(), 1, true);
    if (!s.outcomes.empty() && !s.outcomes.back().pass) return s.outcomes.back().spec.id;
    return std::nullopt;
}

NuCalibration calibrate_nu(const Config& cfg, const std::vector<long long>& charges, int max_boxes) {
    cfg.validate();
    std::vector<ParamPoly> values;
    for (auto [num, den] : {std::pair{0L, 1L}, {1L, 2L}, {-1L, 2L}, {1L, 1L}, {-1L, 1L}})
        values.push_back(ParamPoly(make_rational(num, den)));
    for (auto [num, den] : {std::pair{1L, 2L}, {-1L, 2L}, {1L, 1L}, {-1L, 1L}})
        values.push_back(ParamPoly::monomial(0, 1, make_rational(num, den)));

    auto probes = [&]() {
        std::vector<CheckSpec> out;
        CheckSpec stab;
        stab.id = "STAB", stab.cfg = cfg, stab.charges = charges;
        stab.max_boxes = max_boxes, stab.r = 1;
        out.push_back(std::move(stab));
        for (const char* id : {"Y6", "Y7"}) {
            CheckSpec sp;
            sp.id = id, sp.cfg = cfg, sp.charges = charges, sp.max_boxes = max_boxes;
            sp.i = 1, sp.j = 0, sp.r = 0, sp.s = 0;
            out.push_back(std::move(sp));
        }
        for (const char* id : {"Y10", "Y11"}) {
            CheckSpec sp;
            sp.id = id, sp.cfg = cfg, sp.charges = charges, sp.max_boxes = max_boxes;
            sp.i = 0, sp.j = 1, sp.r = 0, sp.s = 0;
            out.push_back(std::move(sp));
        }
        return out;
    }();

    NuCalibration result;
    for (const ParamPoly& alpha : values) {
        for (const ParamPoly& gamma : values) {
            ++result.candidates_tried;
            std::vector<ParamPoly> nu;
            for (int b = 1; b <= cfg.L; ++b) {
                ParamPoly p = alpha * ParamPoly((long)(b - 1));
                p += gamma;
                nu.push_back(std::move(p));
            }
            bool ok = true;
            const auto& pt = sample_points().front();
            auto nctx = numeric_ctx(cfg.N, cfg.L, pt.t, pt.c, nu);
            for (const auto& sp : probes)
                if (dispatch_check(sp, nctx)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            auto sctx = symbolic_ctx(cfg.N, cfg.L, nu);
            for (const auto& sp : probes)
                if (dispatch_check(sp, sctx)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            result.found = true;
            result.default_ok = alpha.is_zero() && gamma.is_zero();
            result.alpha = alpha.str();
            result.gamma = gamma.str();
            return result;
        }
    }
    return result;
}

} // namespace fy
