#include "fy/wedge.hpp"
#include "fy/mutation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace fy {

long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
long long floormod(long long a, long long b) { return a - b * floordiv(a, b); }

void Config::validate() const {
    if (N < 3) throw std::invalid_argument("config: N must be >= 3");
    if (L < 1) throw std::invalid_argument("config: L must be >= 1");
}

UTriple decode_index(long long k, const Config& cfg) {
    cfg.validate();
    int a = (int)floormod(k - 1, cfg.N) + 1;           // a = k mod N in {1..N}
    long long q = (a - k) / cfg.N;                     // q = b + L*m
    int b = (int)floormod(q - 1, cfg.L) + 1;           // b = q mod L in {1..L}
    long long m = (q - b) / cfg.L;
    return UTriple{m, b, a};
}

long long encode_index(const UTriple& u, const Config& cfg) {
    cfg.validate();
    if (u.a < 1 || u.a > cfg.N) throw std::invalid_argument("encode_index: a out of range");
    if (u.b < 1 || u.b > cfg.L) throw std::invalid_argument("encode_index: b out of range");
    return u.a - (long long)cfg.N * (u.b + (long long)cfg.L * u.m);
}

std::optional<SignedWord> normal_order(std::vector<long long> ks) {
    int n = (int)ks.size();
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (ks[i] == ks[j]) return std::nullopt;
            if (ks[i] < ks[j]) ++inversions;
        }
    std::sort(ks.begin(), ks.end(), std::greater<long long>());
    return SignedWord{(inversions % 2 == 0) ? +1 : -1, std::move(ks)};
}

int charge_residue(long long M, const Config& cfg) {
    return (int)floormod(M, cfg.NL());
}

WedgeWord partition_to_word(const Partition& lambda, long long M, int n, const Config& cfg) {
    cfg.validate();
    require_partition(lambda, "partition_to_word");
    if (n < (int)lambda.size())
        throw std::invalid_argument("partition_to_word: n shorter than the partition");
    WedgeWord w(n);
    int off = mutation_active(Mutation::WordOffByOne) ? 0 : 1;
    for (int i = 1; i <= n; ++i) {
        int li = (i <= (int)lambda.size()) ? lambda[i - 1] : 0;
        w[i - 1] = M + li - i + off;
    }
    return w;
}

Partition word_to_partition(const WedgeWord& w, long long M) {
    std::vector<int> parts(w.size());
    for (int i = 1; i <= (int)w.size(); ++i) {
        long long li = w[i - 1] - M + i - 1;
        if (li < 0)
            throw std::invalid_argument("word_to_partition: word does not extend the vacuum of M");
        parts[i - 1] = (int)li;
    }
    return normalize_partition(std::move(parts), "word_to_partition");
}

// ------------------------------------------------------------ vacuum pattern

namespace {

struct VacuumKey {
    int N, L;
    long long M;
    auto operator<=>(const VacuumKey&) const = default;
};

std::mutex g_vac_mutex;
std::map<VacuumKey, std::vector<long long>> g_vac_cache;

std::string vac_cache_path(const VacuumKey& key) {
    const char* dir = std::getenv("FY_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/m0_" + std::to_string(key.N) + "_" + std::to_string(key.L) +
           "_" + std::to_string(key.M) + ".json";
}

void vac_load(const VacuumKey& key, std::vector<long long>& vec) {
    std::string path = vac_cache_path(key);
    if (path.empty()) return;
    try {
        std::ifstream in(path);
        if (!in) return;
        nlohmann::json j;
        in >> j;
        std::vector<long long> loaded = j.get<std::vector<long long>>();
        if (loaded.size() > vec.size()) vec = std::move(loaded);
    } catch (...) {
        // cache is advisory only
    }
}

void vac_store(const VacuumKey& key, const std::vector<long long>& vec) {
    std::string path = vac_cache_path(key);
    if (path.empty()) return;
    try {
        std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << nlohmann::json(vec);
        }
        std::rename(tmp.c_str(), path.c_str());
    } catch (...) {
    }
}

} // namespace

long long vacuum_exponent(long long M, int i, const Config& cfg) {
    if (i < 1) throw std::invalid_argument("vacuum_exponent: i must be >= 1");
    VacuumKey key{cfg.N, cfg.L, M};
    std::lock_guard<std::mutex> lock(g_vac_mutex);
    auto& vec = g_vac_cache[key];
    if (vec.empty()) vac_load(key, vec);
    if ((int)vec.size() < i) {
        std::size_t old = vec.size();
        vec.reserve(i);
        for (int j = (int)vec.size() + 1; j <= i; ++j)
            vec.push_back(decode_index(M - j + 1, cfg).m);
        if (vec.size() > old) vac_store(key, vec);
    }
    return vec[i - 1];
}

long long degree(const Partition& lambda, long long M, const Config& cfg) {
    require_partition(lambda, "degree");
    long long d = 0;
    for (int i = 1; i <= (int)lambda.size(); ++i)
        d += vacuum_exponent(M, i, cfg) - decode_index(M + lambda[i - 1] - i + 1, cfg).m;
    return d;
}

long long word_degree(const WedgeWord& w, long long M, const Config& cfg) {
    long long d = 0;
    for (int i = 1; i <= (int)w.size(); ++i)
        d += vacuum_exponent(M, i, cfg) - decode_index(w[i - 1], cfg).m;
    return d;
}

bool in_v_subspace(const WedgeWord& w, long long M, const Config& cfg) {
    for (int i = 1; i <= (int)w.size(); ++i)
        if (decode_index(w[i - 1], cfg).m > vacuum_exponent(M, i, cfg)) return false;
    return true;
}

std::vector<WedgeWord> v_basis(long long M, int n, long long d, const Config& cfg) {
    cfg.validate();
    std::vector<WedgeWord> out;
    if (d < 0) return out;
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    const long long NL = cfg.NL();
    WedgeWord cur(n);
    // Exponent block m contains exactly the indices in [-NL(m+1)+1, -NL*m].
    auto rec = [&](auto&& self, int pos, long long prev, long long deficit) -> void {
        if (pos > n) {
            if (deficit == 0) out.push_back(cur);
            return;
        }
        long long m0 = vacuum_exponent(M, pos, cfg);
        for (long long delta = 0; delta <= deficit; ++delta) {
            long long m = m0 - delta;
            long long hi = -NL * m;
            long long lo = -NL * (m + 1) + 1;
            if (pos > 1) hi = std::min(hi, prev - 1);
            for (long long k = hi; k >= lo; --k) {
                cur[pos - 1] = k;
                self(self, pos + 1, k, deficit - delta);
            }
        }
    };
    rec(rec, 1, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

WedgeWord extend_word(const WedgeWord& w, long long M, int n_prime, const Config& cfg) {
    cfg.validate();
    int n = (int)w.size();
    if (n_prime < n) throw std::invalid_argument("extend_word: target length shorter than word");
    if (!w.empty() && w.back() <= M - n)
        throw std::invalid_argument("extend_word: word collides with the vacuum continuation");
    WedgeWord out = w;
    out.reserve(n_prime);
    for (int i = n + 1; i <= n_prime; ++i) out.push_back(M - i + 1);
    return out;
}

// --------------------------------------------------------- charge bijection

namespace {

// Reduced per-color index of u_k inside its color-b copy: a - N(1 + m).
long long reduced_index(const UTriple& u, const Config& cfg) {
    return u.a - (long long)cfg.N * (1 + u.m);
}

// Inverse: reduced value v and color s give the global index.
long long unreduced_index(long long v, int s, const Config& cfg) {
    long long a = floormod(v - 1, cfg.N) + 1;
    long long m = (a - v) / cfg.N - 1;
    return encode_index(UTriple{m, s, (int)a}, cfg);
}

} // namespace

Multipartition charge_decompose(const Partition& lambda, long long M, const Config& cfg) {
    cfg.validate();
    require_partition(lambda, "charge_decompose");
    const int n = (int)lambda.size() + (int)cfg.NL();
    WedgeWord w = partition_to_word(lambda, M, n, cfg);

    std::vector<std::vector<long long>> streams(cfg.L);
    for (long long k : w) {
        UTriple u = decode_index(k, cfg);
        streams[u.b - 1].push_back(reduced_index(u, cfg));
    }

    Multipartition mp;
    mp.components.resize(cfg.L);
    mp.charges.resize(cfg.L);
    long long charge_sum = 0;
    for (int s = 1; s <= cfg.L; ++s) {
        const auto& ks = streams[s - 1];
        if (ks.empty()) throw std::logic_error("charge_decompose: empty color stream");
        for (std::size_t i = 1; i < ks.size(); ++i)
            if (ks[i] >= ks[i - 1])
                throw std::logic_error("charge_decompose: color stream not strictly decreasing");
        // The final window entry sits in the vacuum tail, so it fixes the charge.
        long long t = (long long)ks.size();
        long long c = ks.back() + t - 1;
        std::vector<int> parts(ks.size());
        for (long long i = 1; i <= t; ++i) {
            long long li = ks[i - 1] - c + i - 1;
            if (li < 0) throw std::logic_error("charge_decompose: negative component part");
            parts[i - 1] = (int)li;
        }
        mp.components[s - 1] = normalize_partition(std::move(parts), "charge_decompose");
        mp.charges[s - 1] = c;
        charge_sum += c;
    }
    if (charge_sum != M)
        throw std::logic_error("charge_decompose: charges do not sum to M");
    return mp;
}

std::pair<Partition, long long> charge_compose(const Multipartition& mp, const Config& cfg) {
    cfg.validate();
    if ((int)mp.components.size() != cfg.L || (int)mp.charges.size() != cfg.L)
        throw std::invalid_argument("charge_compose: need exactly L components and charges");
    for (const auto& p : mp.components) require_partition(p, "charge_compose");

    long long M = 0;
    for (long long c : mp.charges) M += c;

    // Per-color strictly decreasing streams of global indices.
    struct Stream {
        const Partition* lambda;
        long long charge;
        int s;
        long long i = 1; // next 1-based per-color position
        long long head(const Config& cfg) const {
            int li = (i <= (long long)lambda->size()) ? (*lambda)[i - 1] : 0;
            return unreduced_index(charge + li - i + 1, s, cfg);
        }
        bool stable() const { return i > (long long)lambda->size(); }
    };
    std::vector<Stream> streams;
    long long total_boxes = 0, charge_abs = 0;
    for (int s = 1; s <= cfg.L; ++s) {
        streams.push_back(Stream{&mp.components[s - 1], mp.charges[s - 1], s});
        total_boxes += partition_size(mp.components[s - 1]);
        charge_abs += std::llabs(mp.charges[s - 1]);
    }

    const long long NL = cfg.NL();
    const long long cap = NL * (total_boxes + charge_abs + cfg.L + 8);
    std::vector<int> parts;
    long long prev = 0;
    long long vacuum_run = 0;
    for (long long j = 1; j <= cap; ++j) {
        int best = -1;
        long long best_k = 0;
        for (int s = 0; s < cfg.L; ++s) {
            long long k = streams[s].head(cfg);
            if (best < 0 || k > best_k) {
                best = s;
                best_k = k;
            } else if (k == best_k) {
                throw std::logic_error("charge_compose: colliding indices between colors");
            }
        }
        if (j > 1 && best_k >= prev)
            throw std::logic_error("charge_compose: merged word not strictly decreasing");
        prev = best_k;
        streams[best].i += 1;

        long long li = best_k - M + j - 1;
        if (li < 0) throw std::logic_error("charge_compose: negative part");
        parts.push_back((int)li);

        bool all_stable = true;
        for (const auto& st : streams) all_stable &= st.stable();
        vacuum_run = (li == 0 && all_stable) ? vacuum_run + 1 : 0;
        if (vacuum_run >= NL && all_stable) {
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            return {normalize_partition(std::move(parts), "charge_compose"), M};
        }
    }
    throw std::logic_error("charge_compose: failed to reach the vacuum tail");
}

std::vector<long long> vacuum_charges(long long M, const Config& cfg) {
    return charge_decompose({}, M, cfg).charges;
}

} // namespace fy
