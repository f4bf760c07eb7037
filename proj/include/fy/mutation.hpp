#pragma once

namespace fy {

// Deliberate fault injection for sensitivity testing: each value corrupts one
// specific formula site. The verify suite must detect every one of them.
// Production behaviour is Mutation::None; tests flip the global switch.
enum class Mutation {
    None = 0,
    DividedDiffSign,    // flip sign of the ascending branch of the divided difference
    DropOmega,          // omit the quadratic correction in mode-1 operators
    WrongBeta,          // beta = t/2 + N c/4 + c/2 (sign of the N-term flipped)
    THighWrap,          // index map of T wraps on k = 0 mod N*L instead of mod N
    RWrongBranch,       // pairwise color term also swaps when b_first < b_second
    YExchangeSign,      // flip sign of the c/2 exchange sums in y_i
    DropDunklConstant,  // drop the n/(2L) - 1/2 constant in the Dunkl operator
    ResidueShift,       // box residue shifted by one
    RhoUniformGamma,    // rotation expansion uses hbar/2 at the boundary nodes too
    WordOffByOne,       // k_i = M + lambda_i - i instead of M + lambda_i - i + 1
};

void set_mutation(Mutation m);
Mutation current_mutation();
bool mutation_active(Mutation m);

// RAII guard used by tests.
struct MutationGuard {
    explicit MutationGuard(Mutation m) { set_mutation(m); }
    ~MutationGuard() { set_mutation(Mutation::None); }
};

constexpr int kMutationCount = 10;
Mutation mutation_by_index(int i); // 1..10
const char* mutation_name(Mutation m);

} // namespace fy
