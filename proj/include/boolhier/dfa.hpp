#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "boolhier/errors.hpp"

namespace boolhier {

using State = int;

// Ordered set of distinct single-symbol letters.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::string_view letters);

    int size() const { return static_cast<int>(letters_.size()); }
    char letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }
    bool contains(char c) const { return index_of(c) >= 0; }
    int index_of(char c) const;  // -1 if absent

    // Throws AlphabetError if some letter of w is not in the alphabet.
    void validate_word(std::string_view w) const;

    const std::string& letters() const { return letters_; }
    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
    bool operator!=(const Alphabet& o) const { return letters_ != o.letters_; }

  private:
    std::string letters_;
};

// Complete deterministic finite automaton M = (A, Z, delta, s0, F).
// The transition table is total: delta has an entry for every (state, letter)
// pair.  States are 0..num_states()-1.  Instances are immutable after
// construction and safe to share between threads.
class Dfa {
  public:
    Dfa(Alphabet alphabet, int num_states, std::vector<State> transitions,
        State start, std::vector<bool> accepting);

    const Alphabet& alphabet() const { return alphabet_; }
    int num_states() const { return num_states_; }
    State start() const { return start_; }
    bool is_accepting(State s) const { return accepting_[static_cast<std::size_t>(s)]; }
    const std::vector<bool>& accepting() const { return accepting_; }

    // delta(s, a) with a given as an alphabet index.
    State next(State s, int letter_index) const {
        return transitions_[static_cast<std::size_t>(s) * alphabet_.size() +
                            static_cast<std::size_t>(letter_index)];
    }
    // delta(s, c); throws AlphabetError for a foreign letter.
    State step(State s, char c) const;

    bool operator==(const Dfa& o) const = default;

  private:
    Alphabet alphabet_;
    int num_states_ = 0;
    std::vector<State> transitions_;  // row-major: state * |A| + letter index
    State start_ = 0;
    std::vector<bool> accepting_;
};

// delta(s0, w); throws AlphabetError for letters outside M's alphabet.
State run(const Dfa& m, std::string_view w);
State run_from(const Dfa& m, State s, std::string_view w);
bool accepts(const Dfa& m, std::string_view w);

// Parses the line-oriented DFA text format, or the equivalent JSON object if
// the input starts with '{'.  Rejects partial transition tables unless
// complete_with_sink is set, in which case missing transitions go to a fresh
// non-accepting sink state.
Dfa parse_dfa(std::string_view text, bool complete_with_sink = false);

// Canonical text form (parse_dfa round-trips it).
std::string to_text(const Dfa& m);

// The unique minimal complete DFA for L(M), with states renumbered in
// breadth-first order from the start state (letters in alphabet order).
Dfa minimize(const Dfa& m);

Dfa complement(const Dfa& m);

// Product automaton; acceptance of a pair is combine(acc1, acc2).
Dfa product(const Dfa& m1, const Dfa& m2, const std::function<bool(bool, bool)>& combine);

bool equivalent(const Dfa& m1, const Dfa& m2);

// Intersects L(M) with A^+: the result rejects the empty word and agrees with
// M on every nonempty word.
Dfa restrict_nonempty(const Dfa& m);

bool is_minimal(const Dfa& m);

}  // namespace boolhier
