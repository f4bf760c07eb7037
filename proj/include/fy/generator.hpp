#pragma once
#include <compare>
#include <string>

namespace fy {

enum class GenKind { Plus, Minus, Cartan };

// One generator X^+_{node,mode}, X^-_{node,mode} or H_{node,mode};
// node lives in Z/N, mode is a non-negative integer.
struct GeneratorId {
    GenKind kind = GenKind::Cartan;
    int node = 0;
    int mode = 0;
    auto operator<=>(const GeneratorId&) const = default;
};

// Cyclic Cartan matrix of type A^(1)_{N-1} (N >= 3).
int cartan_entry(int i, int j, int N);

// Text form "X+ i=1 r=0" / "X- i=0 r=2" / "H i=2 r=1"; parse accepts the same.
std::string generator_str(const GeneratorId& g);
GeneratorId parse_generator(const std::string& s);

} // namespace fy
