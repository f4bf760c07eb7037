#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fy/mutation.hpp"
#include "fy/partition.hpp"

#include <set>

using namespace fy;

TEST_CASE("partition validity and size") {
    CHECK(is_valid_partition({}));
    CHECK(is_valid_partition({2, 1}));
    CHECK(is_valid_partition({3, 3, 1}));
    CHECK_FALSE(is_valid_partition({1, 2}));
    CHECK_FALSE(is_valid_partition({2, 0}));
    CHECK_FALSE(is_valid_partition({-1}));
    CHECK(partition_size({3, 1}) == 4);
    CHECK(partition_size({}) == 0);
    CHECK(normalize_partition({3, 1, 0, 0}, "test") == Partition{3, 1});
    CHECK_THROWS(normalize_partition({1, 2}, "test"));
}

TEST_CASE("partition enumeration is complete and ordered") {
    auto p4 = partitions_of(4);
    CHECK(p4.size() == 5);
    CHECK(p4.front() == Partition{1, 1, 1, 1});
    CHECK(p4.back() == Partition{4});
    auto up3 = partitions_up_to(3);
    CHECK(up3.size() == 7);
    CHECK(up3[0] == Partition{});
    std::set<Partition> dedup(up3.begin(), up3.end());
    CHECK(dedup.size() == up3.size());

    auto shapes = multipartition_shapes(2, 2);
    // (0,0),(0,1),(1,0),(0,2),(0,11),(1,1),(2,0),(11,0) by total size then lex
    CHECK(shapes.size() == 8);
    CHECK(shapes[0] == std::vector<Partition>{{}, {}});
    long long prev = 0;
    for (const auto& sh : shapes) {
        long long tot = partition_size(sh[0]) + partition_size(sh[1]);
        CHECK(tot >= prev);
        prev = tot;
    }
}

TEST_CASE("cell residues") {
    std::vector<long long> c0{0};
    CHECK(cell_residue(Cell{1, 1, 1}, c0, 3) == 0);
    CHECK(cell_residue(Cell{1, 2, 1}, c0, 3) == 2);
    CHECK(cell_residue(Cell{1, 1, 3}, c0, 3) == 2);
    std::vector<long long> cm{-1, 1};
    CHECK(cell_residue(Cell{1, 1, 1}, cm, 3) == 2);
    CHECK(cell_residue(Cell{2, 1, 1}, cm, 3) == 1);

    MutationGuard g(Mutation::ResidueShift);
    CHECK(cell_residue(Cell{1, 1, 1}, c0, 3) != 0);
}

TEST_CASE("addable and removable corners") {
    Multipartition mp{{{2, 1}}, {0}};
    CHECK(addable_cells(mp, 0, 3) == std::vector<Cell>{Cell{1, 2, 2}});
    CHECK(addable_cells(mp, 1, 3) == std::vector<Cell>{Cell{1, 3, 1}});
    CHECK(addable_cells(mp, 2, 3) == std::vector<Cell>{Cell{1, 1, 3}});
    CHECK(removable_cells(mp, 0, 3).empty());
    CHECK(removable_cells(mp, 1, 3) == std::vector<Cell>{Cell{1, 1, 2}});
    CHECK(removable_cells(mp, 2, 3) == std::vector<Cell>{Cell{1, 2, 1}});

    CHECK(with_cell_added({2, 1}, 2) == Partition{2, 2});
    CHECK(with_cell_added({}, 1) == Partition{1});
    CHECK(with_cell_removed({2, 2}, 2) == Partition{2, 1});
    CHECK(with_cell_removed({1}, 1) == Partition{});
}

TEST_CASE("every multipartition has one more addable than removable corner per component") {
    for (int N : {3, 4})
        for (const auto& sh : multipartition_shapes(2, 4)) {
            Multipartition mp{sh, {-1, 1}};
            long long add = 0, rem = 0;
            for (int res = 0; res < N; ++res) {
                add += (long long)addable_cells(mp, res, N).size();
                rem += (long long)removable_cells(mp, res, N).size();
            }
            CHECK(add - rem == 2); // one per component
        }
}

TEST_CASE("mode-0 action by corner cells") {
    using V = MPVec<ParamPoly>;
    Multipartition vac{{{}}, {0}};
    V v;
    v.add(vac, ParamPoly(1L));

    V created = chevalley_apply(GenKind::Minus, 0, v, 3);
    REQUIRE(created.size() == 1);
    CHECK(created.terms().begin()->first == Multipartition{{{1}}, {0}});
    CHECK(created.terms().begin()->second == ParamPoly(1L));

    CHECK(chevalley_apply(GenKind::Minus, 1, v, 3).is_zero());
    CHECK(chevalley_apply(GenKind::Plus, 0, v, 3).is_zero());

    // diagonal eigenvalue: #addable - #removable
    V h = chevalley_apply(GenKind::Cartan, 0, v, 3);
    REQUIRE(h.size() == 1);
    CHECK(h.terms().begin()->second == ParamPoly(1L));

    // (2,1) at charge 0: X^+_1 removes the residue-1 cell (1,2)
    V w;
    w.add(Multipartition{{{2, 1}}, {0}}, ParamPoly(1L));
    V up = chevalley_apply(GenKind::Plus, 1, w, 3);
    REQUIRE(up.size() == 1);
    CHECK(up.terms().begin()->first == Multipartition{{{1, 1}}, {0}});
}

TEST_CASE("sl2-style bracket of corner operators is the diagonal operator") {
    // [X^+_i, X^-_i] = H_i holds already at mode 0 on every vector.
    using V = MPVec<ParamPoly>;
    for (const auto& sh : multipartition_shapes(2, 3)) {
        Multipartition mp{sh, {-1, 1}};
        V v;
        v.add(mp, ParamPoly(1L));
        for (int i = 0; i < 3; ++i) {
            V a = chevalley_apply(GenKind::Plus, i, chevalley_apply(GenKind::Minus, i, v, 3), 3);
            V b = chevalley_apply(GenKind::Minus, i, chevalley_apply(GenKind::Plus, i, v, 3), 3);
            CHECK(a - b == chevalley_apply(GenKind::Cartan, i, v, 3));
        }
    }
}
