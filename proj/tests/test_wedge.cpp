#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fy/mutation.hpp"
#include "fy/wedge.hpp"

#include <algorithm>
#include <set>

using namespace fy;

TEST_CASE("index decode examples") {
    Config cfg{3, 2};
    CHECK(decode_index(0, cfg) == UTriple{0, 1, 3});
    CHECK(decode_index(1, cfg) == UTriple{-1, 2, 1});
    CHECK(decode_index(-3, cfg) == UTriple{0, 2, 3});
    CHECK(decode_index(-6, cfg) == UTriple{1, 1, 3});
    CHECK(encode_index(UTriple{0, 1, 3}, cfg) == 0);
}

TEST_CASE("index bijection") {
    for (auto [N, L] : {std::pair{3, 1}, {3, 2}, {4, 2}}) {
        Config cfg{N, L};
        for (long long k = -10 * cfg.NL(); k <= 10 * cfg.NL(); ++k) {
            UTriple u = decode_index(k, cfg);
            CHECK(u.a >= 1);
            CHECK(u.a <= N);
            CHECK(u.b >= 1);
            CHECK(u.b <= L);
            CHECK(encode_index(u, cfg) == k);
        }
        for (long long m = -3; m <= 3; ++m)
            for (int b = 1; b <= L; ++b)
                for (int a = 1; a <= N; ++a) {
                    UTriple u{m, b, a};
                    CHECK(decode_index(encode_index(u, cfg), cfg) == u);
                }
    }
}

TEST_CASE("floor arithmetic") {
    CHECK(floordiv(7, 3) == 2);
    CHECK(floordiv(-7, 3) == -3);
    CHECK(floormod(-7, 3) == 2);
    CHECK(floormod(6, 3) == 0);
}

TEST_CASE("normal ordering") {
    auto a = normal_order({1, 2, 3});
    REQUIRE(a.has_value());
    CHECK(a->word == WedgeWord{3, 2, 1});
    CHECK(a->sign == -1);

    auto b = normal_order({5, 7, 2});
    REQUIRE(b.has_value());
    CHECK(b->word == WedgeWord{7, 5, 2});
    CHECK(b->sign == -1);

    auto c = normal_order({7, 5, 2});
    CHECK(c->sign == 1);
    CHECK_FALSE(normal_order({2, 2}).has_value());
    CHECK(normal_order({})->sign == 1);
}

TEST_CASE("partition to word and back") {
    Config cfg{3, 1};
    CHECK(partition_to_word({2, 2}, 5, 4, cfg) == WedgeWord{7, 6, 3, 2});
    CHECK(word_to_partition({7, 6, 3, 2}, 5) == Partition{2, 2});
    CHECK(partition_to_word({}, 0, 3, cfg) == WedgeWord{0, -1, -2});
    CHECK_THROWS(partition_to_word({1, 1, 1, 1}, 0, 3, cfg));

    for (long long M : {-2LL, 0LL, 3LL})
        for (const auto& lam : partitions_up_to(5)) {
            WedgeWord w = partition_to_word(lam, M, 8, cfg);
            CHECK(std::is_sorted(w.rbegin(), w.rend()));
            CHECK(word_to_partition(w, M) == lam);
        }

    MutationGuard g(Mutation::WordOffByOne);
    CHECK(partition_to_word({2, 2}, 5, 4, cfg) != WedgeWord{7, 6, 3, 2});
}

TEST_CASE("extend word appends the vacuum continuation") {
    Config cfg{3, 2};
    WedgeWord w = partition_to_word({3, 1}, 0, 6, cfg);
    CHECK(extend_word(w, 0, 12, cfg) == partition_to_word({3, 1}, 0, 12, cfg));
}

TEST_CASE("degree counts missed z-steps") {
    Config cfg{3, 1};
    CHECK(degree({}, 0, cfg) == 0);
    CHECK(degree({1}, 0, cfg) == 1);
    CHECK(degree({2}, 0, cfg) == 1);
    CHECK(degree({3}, 0, cfg) == 1);
    CHECK(degree({4}, 0, cfg) == 2);
    CHECK(degree({1, 1}, 0, cfg) == 1);
    for (const auto& lam : partitions_up_to(4)) {
        WedgeWord w = partition_to_word(lam, 0, 9, cfg);
        CHECK(word_degree(w, 0, cfg) == degree(lam, 0, cfg));
        CHECK(in_v_subspace(w, 0, cfg));
    }
}

TEST_CASE("vacuum exponents follow the block pattern") {
    Config cfg{3, 2};
    // vacuum at M = 0: indices 0, -1, -2, ... and their z-exponents
    for (int i = 1; i <= 12; ++i)
        CHECK(vacuum_exponent(0, i, cfg) == decode_index(-i + 1, cfg).m);
    CHECK(vacuum_exponent(0, 1, cfg) == 0);
    CHECK(vacuum_exponent(0, 7, cfg) == 1);
}

TEST_CASE("truncated basis counts") {
    Config cfg{3, 1};
    CHECK(v_basis(0, 3, 0, cfg).size() == 1);
    CHECK(v_basis(0, 3, 1, cfg).size() == 9);

    // oracle: brute-force enumeration over a safely wide index range
    Config cfg2{3, 2};
    for (int n : {2, 3})
        for (long long d = 0; d <= 2; ++d) {
            auto got = v_basis(0, n, d, cfg2);
            std::set<WedgeWord> expect;
            long long lo = -n - cfg2.NL() * (d + 1), hi = cfg2.NL() * (d + 1);
            std::vector<long long> cur;
            auto rec = [&](auto&& self, long long next_max) -> void {
                if ((int)cur.size() == n) {
                    long long deficit = 0;
                    for (int i = 1; i <= n; ++i)
                        deficit += vacuum_exponent(0, i, cfg2) - decode_index(cur[i - 1], cfg2).m;
                    bool ok = deficit == d;
                    for (int i = 1; i <= n && ok; ++i)
                        ok = decode_index(cur[i - 1], cfg2).m <= vacuum_exponent(0, i, cfg2);
                    if (ok) expect.insert(cur);
                    return;
                }
                for (long long k = next_max; k >= lo; --k) {
                    cur.push_back(k);
                    self(self, k - 1);
                    cur.pop_back();
                }
            };
            rec(rec, hi);
            CHECK(got.size() == expect.size());
            for (const auto& w : got) CHECK(expect.count(w) == 1);
        }
}

TEST_CASE("charge bijection examples") {
    Config cfg{3, 2};
    Multipartition mp = charge_decompose({1}, 0, cfg);
    CHECK(mp.components == std::vector<Partition>{{}, {}});
    CHECK(mp.charges == std::vector<long long>{-1, 1});

    auto [lam, M] = charge_compose(mp, cfg);
    CHECK(lam == Partition{1});
    CHECK(M == 0);

    CHECK(vacuum_charges(0, Config{3, 1}) == std::vector<long long>{0});
    Multipartition vac = charge_decompose({}, 0, cfg);
    CHECK(vac.components == std::vector<Partition>{{}, {}});
    CHECK(vac.charges == vacuum_charges(0, cfg));
}

TEST_CASE("charge bijection round trip") {
    for (auto [N, L] : {std::pair{3, 1}, {3, 2}, {4, 2}}) {
        Config cfg{N, L};
        for (long long M : {-1LL, 0LL, 2LL})
            for (const auto& lam : partitions_up_to(6)) {
                Multipartition mp = charge_decompose(lam, M, cfg);
                long long sum = 0;
                for (long long ch : mp.charges) sum += ch;
                CHECK(sum == M);
                auto [lam2, M2] = charge_compose(mp, cfg);
                CHECK(lam2 == lam);
                CHECK(M2 == M);
            }
        // reverse direction: every small multipartition is hit exactly once
        std::set<std::pair<Partition, long long>> seen;
        for (const auto& sh : multipartition_shapes(L, L == 1 ? 6 : 4)) {
            Multipartition mp{sh, vacuum_charges(0, cfg)};
            auto [lam, M] = charge_compose(mp, cfg);
            CHECK(M == 0);
            CHECK(seen.insert({lam, M}).second);
            CHECK(charge_decompose(lam, M, cfg) == mp);
        }
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS(Config{2, 1}.validate());
    CHECK_THROWS(Config{3, 0}.validate());
    CHECK(charge_residue(0, Config{3, 2}) == 0);
    CHECK(charge_residue(-1, Config{3, 2}) == 5);
    CHECK(charge_residue(7, Config{3, 2}) == 1);
}
