#pragma once
#include "fy/partition.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fy {

// Global shape of one run: rank N >= 3 of the cyclic quiver and number of
// W-colors L >= 1. The charge M of a space is carried separately because the
// shift operator moves vectors between different M.
struct Config {
    int N = 3;
    int L = 1;
    long long NL() const { return (long long)N * L; }
    void validate() const;
};

// u_k = z^m w_b v_a with k = a - N(b + L m), a in 1..N, b in 1..L.
struct UTriple {
    long long m;
    int b;
    int a;
    auto operator<=>(const UTriple&) const = default;
};

UTriple decode_index(long long k, const Config& cfg);
long long encode_index(const UTriple& u, const Config& cfg);

long long floordiv(long long a, long long b);
long long floormod(long long a, long long b);

// Strictly decreasing index word of fixed length.
using WedgeWord = std::vector<long long>;

struct SignedWord {
    int sign; // +1 or -1
    WedgeWord word;
};

// Sorts into strictly decreasing order; nullopt when an index repeats.
std::optional<SignedWord> normal_order(std::vector<long long> ks);

// Residue of M mod NL in [0, NL); truncation lengths are s + l*NL.
int charge_residue(long long M, const Config& cfg);

// k_i = M + lambda_i - i + 1 for i = 1..n; requires n >= length(lambda).
WedgeWord partition_to_word(const Partition& lambda, long long M, int n, const Config& cfg);
// Inverse on words all of whose entries exceed M - n.
Partition word_to_partition(const WedgeWord& w, long long M);

// z-exponent m_i^0 of the i-th factor (1-based) of the vacuum sequence
// (M, M-1, M-2, ...). Memoised; FY_CACHE_DIR, when set, persists the table.
long long vacuum_exponent(long long M, int i, const Config& cfg);

// Number of missed z-exponent steps against the vacuum pattern.
long long degree(const Partition& lambda, long long M, const Config& cfg);
long long word_degree(const WedgeWord& w, long long M, const Config& cfg);
bool in_v_subspace(const WedgeWord& w, long long M, const Config& cfg);

// All length-n words with m_i(k_i) <= m_i^0 and total deficit d.
std::vector<WedgeWord> v_basis(long long M, int n, long long d, const Config& cfg);

// Appends the vacuum continuation M-n, M-n-1, ..., M-n'+1.
WedgeWord extend_word(const WedgeWord& w, long long M, int n_prime, const Config& cfg);

// Charge bijection: single partitions at charge M <-> L-component charged
// multipartitions with sum of charges equal to M. The reduced per-color index
// is a - N(1 + m).
Multipartition charge_decompose(const Partition& lambda, long long M, const Config& cfg);
std::pair<Partition, long long> charge_compose(const Multipartition& mp, const Config& cfg);

// Vacuum charges for a given M (decomposition of the empty partition).
std::vector<long long> vacuum_charges(long long M, const Config& cfg);

} // namespace fy
