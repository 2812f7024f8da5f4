#pragma once

#include <cstdint>

namespace boolhier {

// Size caps shared by the deciders and oracles.  The defaults are sized for
// desk-scale experiments; pass a custom Budget (or --unsafe-budgets on the
// CLI) to lift them.  Exceeding a cap raises BoundsError (parameter caps) or
// BudgetExceeded (search-size caps); nothing degrades silently.
struct Budget {
    std::uint64_t max_configurations = 100'000'000;  // configuration-graph size
    std::uint64_t max_product_states = 10'000'000;   // simultaneous-loop products
    std::uint64_t max_monoid_size = 1'000'000;       // transition-monoid closure
    int max_k = 4;                                   // context width cap
    int max_d = 6;                                   // modulus cap
    int max_oracle_word_len = 12;                    // plain-word oracle bound cap
    int max_oracle_marked_len = 8;                   // marked oracle: letters per word
    int max_oracle_label_len = 5;                    // marked oracle: label length
    int witness_length_factor = 4;                   // witness cap = factor*|Z|*(n+1)*d

    static Budget unlimited() {
        Budget b;
        b.max_configurations = UINT64_MAX;
        b.max_product_states = UINT64_MAX;
        b.max_monoid_size = UINT64_MAX;
        b.max_k = 1 << 20;
        b.max_d = 1 << 20;
        b.max_oracle_word_len = 64;
        b.max_oracle_marked_len = 64;
        b.max_oracle_label_len = 64;
        return b;
    }
};

}  // namespace boolhier
