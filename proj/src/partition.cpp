#include "fy/partition.hpp"
#include "fy/mutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fy {

bool is_valid_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

void require_partition(const Partition& p, const char* where) {
    if (!is_valid_partition(p))
        throw std::invalid_argument(std::string(where) + ": not a partition");
}

long long partition_size(const Partition& p) {
    long long s = 0;
    for (int x : p) s += x;
    return s;
}

Partition normalize_partition(std::vector<int> parts, const char* where) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    require_partition(parts, where);
    return parts;
}

long long Multipartition::total_boxes() const {
    long long s = 0;
    for (const auto& p : components) s += partition_size(p);
    return s;
}

int cell_residue(const Cell& cell, const std::vector<long long>& charges, int N) {
    if (cell.comp < 1 || cell.comp > (int)charges.size())
        throw std::invalid_argument("cell_residue: component out of range");
    long long r = charges[cell.comp - 1] + cell.col - cell.row;
    if (mutation_active(Mutation::ResidueShift)) r += 1;
    long long m = ((r % N) + N) % N;
    return (int)m;
}

std::vector<Cell> addable_cells(const Multipartition& mp, int residue, int N) {
    std::vector<Cell> out;
    for (int s = 1; s <= (int)mp.components.size(); ++s) {
        const Partition& p = mp.components[s - 1];
        int len = (int)p.size();
        for (int x = 1; x <= len + 1; ++x) {
            int row_len = (x <= len) ? p[x - 1] : 0;
            int above = (x == 1) ? INT32_MAX : p[x - 2];
            if (row_len >= above) continue; // row already as long as the one above
            Cell cell{s, x, row_len + 1};
            if (cell_residue(cell, mp.charges, N) == residue) out.push_back(cell);
        }
    }
    return out;
}

std::vector<Cell> removable_cells(const Multipartition& mp, int residue, int N) {
    std::vector<Cell> out;
    for (int s = 1; s <= (int)mp.components.size(); ++s) {
        const Partition& p = mp.components[s - 1];
        int len = (int)p.size();
        for (int x = 1; x <= len; ++x) {
            int below = (x < len) ? p[x] : 0;
            if (p[x - 1] <= below) continue; // removing would break monotonicity
            Cell cell{s, x, p[x - 1]};
            if (cell_residue(cell, mp.charges, N) == residue) out.push_back(cell);
        }
    }
    return out;
}

Partition with_cell_added(const Partition& p, int row) {
    std::vector<int> q(p);
    if (row == (int)q.size() + 1) q.push_back(1);
    else q.at(row - 1) += 1;
    return normalize_partition(std::move(q), "with_cell_added");
}

Partition with_cell_removed(const Partition& p, int row) {
    std::vector<int> q(p);
    q.at(row - 1) -= 1;
    return normalize_partition(std::move(q), "with_cell_removed");
}

namespace {

void gen_partitions(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int max_boxes) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_boxes; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

std::vector<std::vector<Partition>> multipartition_shapes(int L, int max_boxes) {
    if (L < 1) throw std::invalid_argument("multipartition_shapes: L must be >= 1");
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur(L);
    // Recursive fill component by component, tracking remaining boxes.
    auto rec = [&](auto&& self, int comp, int remaining) -> void {
        if (comp == L) {
            out.push_back(cur);
            return;
        }
        for (int n = 0; n <= remaining; ++n)
            for (const auto& p : partitions_of(n)) {
                cur[comp] = p;
                self(self, comp + 1, remaining - n);
            }
    };
    rec(rec, 0, max_boxes);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long long sa = 0, sb = 0;
        for (const auto& p : a) sa += partition_size(p);
        for (const auto& p : b) sb += partition_size(p);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

} // namespace fy
