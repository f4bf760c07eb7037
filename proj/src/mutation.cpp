#include "fy/mutation.hpp"

#include <stdexcept>

namespace fy {

namespace {
Mutation g_mutation = Mutation::None;
}

void set_mutation(Mutation m) { g_mutation = m; }
Mutation current_mutation() { return g_mutation; }
bool mutation_active(Mutation m) { return g_mutation == m; }

Mutation mutation_by_index(int i) {
    if (i < 1 || i > kMutationCount) throw std::invalid_argument("mutation_by_index: 1..10");
    return static_cast<Mutation>(i);
}

const char* mutation_name(Mutation m) {
    switch (m) {
        case Mutation::None: return "none";
        case Mutation::DividedDiffSign: return "divided-difference-sign";
        case Mutation::DropOmega: return "drop-omega-correction";
        case Mutation::WrongBeta: return "wrong-beta";
        case Mutation::THighWrap: return "t-wrap-mod-NL";
        case Mutation::RWrongBranch: return "r-term-wrong-branch";
        case Mutation::YExchangeSign: return "y-exchange-sign";
        case Mutation::DropDunklConstant: return "drop-dunkl-constant";
        case Mutation::ResidueShift: return "residue-shift";
        case Mutation::RhoUniformGamma: return "rho-uniform-gamma";
        case Mutation::WordOffByOne: return "word-off-by-one";
    }
    return "unknown";
}

} // namespace fy
