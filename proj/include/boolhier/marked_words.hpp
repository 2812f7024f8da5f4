#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolhier/budget.hpp"
#include "boolhier/dfa.hpp"

namespace boolhier {

// A letter of the marked alphabet: base letter plus a label word.
struct MarkedLetter {
    char base;
    std::string label;

    bool operator==(const MarkedLetter& o) const = default;
    auto operator<=>(const MarkedLetter& o) const = default;
};

struct MarkedWord {
    std::vector<MarkedLetter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    bool operator==(const MarkedWord& o) const = default;
    auto operator<=>(const MarkedWord& o) const = default;
};

// f_i(w) = a_1 u_1^i ... a_m u_m^i; expand(w, 0) is the unmarked word f_0(w).
std::string expand(const MarkedWord& w, int i);
std::string unmark(const MarkedWord& w);

// Serialization: base letter followed by the bracketed label, letters
// whitespace-separated, e.g. "a[ba] b[] a[ba]".  The empty marked word
// serializes to the empty string.
std::string to_string(const MarkedWord& w);
MarkedWord parse_marked_word(std::string_view text);

// States along a consistent run: trace[0] = s, trace[i] = state after the
// i-th marked letter (its label loops there), end = trace[size].
struct ConsistencyRun {
    std::vector<State> trace;
    State end;
};

// The run of w from s if every label loops at the state reached after its
// base letter; nullopt otherwise.  is_consistent(m, w) checks from the start
// state (the set B_M of the paper's marked-word machinery).
std::optional<ConsistencyRun> run_marked(const Dfa& m, State s, const MarkedWord& w);
bool is_consistent(const Dfa& m, const MarkedWord& w);

// w embeds into w2 by inserting blocks z*b immediately after occurrences of
// context letters b with nonempty labels, each block ending with a copy of
// its context letter and having unmarked length divisible by d.
bool embeds(const MarkedWord& w, const MarkedWord& w2, int d);

struct MarkedChainWitness {
    std::vector<MarkedWord> words;
    std::vector<bool> memberships;
};

struct MarkedReplayResult {
    bool ok = false;
    std::string reason;
};

// Independent replay: every word M-consistent (and nonempty unless
// allow_empty), adjacent pairs in the insertion relation mod d, memberships
// of the unmarked words strictly alternating starting inside, and, when
// alphabet_condition is set, every nonempty label using the full alphabet.
MarkedReplayResult verify_marked_chain(const Dfa& m, const std::vector<MarkedWord>& words, int d,
                                       int expected_n, bool alphabet_condition, bool allow_empty);

struct MarkedSearchBounds {
    int max_marked_len = 5;  // marked letters per word
    int max_label_len = 3;
};

// Bounded brute-force search for a 1-alternating insertion chain of length n
// of M-consistent marked words.  Labels are explored up to equivalence of
// their transformation on M's states (and their letter set), which preserves
// consistency, membership and the chain relation.  nullopt is not a proof of
// absence.
std::optional<MarkedChainWitness> oracle_marked_chain_search(const Dfa& m, int d, int n,
                                                             const MarkedSearchBounds& bounds,
                                                             bool alphabet_condition,
                                                             const Budget& budget = {});

}  // namespace boolhier
