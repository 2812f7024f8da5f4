#pragma once

#include <cstdint>
#include <optional>

#include "boolhier/budget.hpp"
#include "boolhier/dfa.hpp"
#include "boolhier/word_orders.hpp"

namespace boolhier {

struct CkdQuery {
    int k = 0;
    int d = 1;
    int n = 1;  // chain length to forbid
    EmbedSemantics semantics = EmbedSemantics::LengthCongruent;
};

struct CkdDecision {
    bool in_class = false;
    // Engaged iff not in_class and the reconstructed chain fits the witness
    // length cap; otherwise witness_truncated is set and the decision stands.
    std::optional<ChainWitness> witness;
    bool witness_truncated = false;
    std::uint64_t configurations_explored = 0;
};

// Decides L(M) n A^+ in C^d_k(n): InClass iff no 1-alternating <=^d_k chain
// of length n exists.  Deterministic breadth-first search over the
// configuration graph of the parallel chain-guessing algorithm: states
// s_0..s_n, per-word length counters mod d, and committed k-letter previews.
// Refuses with BudgetExceeded when |Z|^{n+1} * d^{n+1} * |A|^{k(n+1)} exceeds
// budget.max_configurations.
CkdDecision decide_ckd(const Dfa& m, const CkdQuery& q, const Budget& budget = {});

struct LevelResult {
    std::optional<int> level;  // nullopt = exceeds cap
    bool exceeds_cap() const { return !level.has_value(); }
};

// Smallest n <= cap with decide_ckd InClass.
LevelResult min_level_ckd(const Dfa& m, int k, int d, int cap,
                          EmbedSemantics semantics = EmbedSemantics::LengthCongruent,
                          const Budget& budget = {});

}  // namespace boolhier
