#pragma once
#include "fy/generator.hpp"
#include "fy/sparsevec.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace fy {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);
void require_partition(const Partition& p, const char* where);
long long partition_size(const Partition& p);
// Strips trailing zeros and validates; convenience for freshly assembled parts.
Partition normalize_partition(std::vector<int> parts, const char* where);

// L-component charged multipartition. components.size() == charges.size().
struct Multipartition {
    std::vector<Partition> components;
    std::vector<long long> charges;
    auto operator<=>(const Multipartition&) const = default;
    long long total_boxes() const;
};

// Box in component `comp` (1-based), row x (1-based), column y (1-based).
struct Cell {
    int comp;
    int row;
    int col;
    auto operator<=>(const Cell&) const = default;
};

// Residue c_s + col - row mod N, normalized to {0, ..., N-1}.
int cell_residue(const Cell& cell, const std::vector<long long>& charges, int N);

// Corner cells that can be added to / removed from components, keeping each
// component a partition, whose residue equals `residue`. Ordered by
// (component, row).
std::vector<Cell> addable_cells(const Multipartition& mp, int residue, int N);
std::vector<Cell> removable_cells(const Multipartition& mp, int residue, int N);

Partition with_cell_added(const Partition& p, int row);
Partition with_cell_removed(const Partition& p, int row);

// All partitions of n / of size <= max_boxes, deterministic order
// (size, then lexicographic).
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int max_boxes);
// All L-tuples with total box count <= max_boxes, ordered by
// (total size, then componentwise lexicographic).
std::vector<std::vector<Partition>> multipartition_shapes(int L, int max_boxes);

template <class C> using MPVec = SparseVec<Multipartition, C>;

// Mode-0 action by box combinatorics: X^+_i removes residue-i cells,
// X^-_i adds them, H_i is diagonal with eigenvalue #addable_i - #removable_i.
// All structure coefficients are +1.
template <class C>
MPVec<C> chevalley_apply(GenKind kind, int node, const MPVec<C>& v, int N) {
    MPVec<C> out;
    for (const auto& [mp, coef] : v.terms()) {
        if (kind == GenKind::Cartan) {
            long long eig = (long long)addable_cells(mp, node, N).size() -
                            (long long)removable_cells(mp, node, N).size();
            C scaled = coef * coeff_from_rational<C>(make_rational(eig));
            out.add(mp, scaled);
            continue;
        }
        const bool removing = (kind == GenKind::Plus);
        auto cells = removing ? removable_cells(mp, node, N) : addable_cells(mp, node, N);
        for (const Cell& cell : cells) {
            Multipartition next = mp;
            Partition& comp = next.components[cell.comp - 1];
            comp = removing ? with_cell_removed(comp, cell.row) : with_cell_added(comp, cell.row);
            out.add(next, coef);
        }
    }
    return out;
}

} // namespace fy
