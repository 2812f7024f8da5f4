#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolhier/budget.hpp"
#include "boolhier/ckd.hpp"
#include "boolhier/dfa.hpp"
#include "boolhier/marked_words.hpp"

namespace boolhier {

// A single nonempty word u must satisfy delta(t, u) = t for every anchor t
// (and use every letter of the alphabet when require_full_alphabet is set).
struct LoopQuery {
    std::vector<State> anchors;
    bool require_full_alphabet = false;
};

// Reachability in the product of |anchors| copies of M from the anchor tuple
// back to itself with path length >= 1.
bool simultaneous_loop_exists(const Dfa& m, const LoopQuery& q, const Budget& budget = {});

// Shortest such word, lexicographically least among the shortest.
std::optional<std::string> find_simultaneous_loop(const Dfa& m, const LoopQuery& q,
                                                  const Budget& budget = {});

struct MwDecision {
    bool in_class = false;
    std::optional<MarkedChainWitness> witness;
    bool witness_truncated = false;
    std::uint64_t configurations_explored = 0;
};

// Core reachability decider: NotInClass iff a 1-alternating insertion chain
// (mod d) of length n of M-consistent marked words exists, with every
// nonempty label subject to the alphabet condition when set and words
// required nonempty unless allow_empty_words.  The chain is generated left
// to right; labels are never stored, only verified through simultaneous
// loop queries, with the identity of a context label and its block-ending
// copies checked jointly over the accumulated anchor sets.
MwDecision decide_marked_chain(const Dfa& m, int d, int n, bool alphabet_condition,
                               bool allow_empty_words, const Budget& budget = {});

// Level n of the Boolean hierarchy over dot-depth 1/2 (L taken as L(M) n A^+).
MwDecision decide_sigmaB1(const Dfa& m, int n, const Budget& budget = {});

// Same with modular position predicates mod d.
MwDecision decide_sigmaD1(const Dfa& m, int d, int n, const Budget& budget = {});

enum class Tau1Mode { Exact, IterativeDeepening };
enum class Tau1Verdict { InClass, NotInClass, Inconclusive };

struct Tau1Decision {
    Tau1Verdict verdict = Tau1Verdict::Inconclusive;
    std::uint64_t d_reached = 0;  // the modulus that settled (or last tried)
    std::optional<MarkedChainWitness> witness;
    bool witness_truncated = false;
    std::uint64_t configurations_explored = 0;
};

// Exact mode decides via d = (|Z|^|Z|)! and is definitive both ways, but is
// refused with BudgetExceeded unless that d fits the configuration budget
// (tiny automata only).  IterativeDeepening tries the given moduli in order:
// any InClass is definitive; all-NotInClass is only definitive if some tried
// d reached the exact bound, otherwise the verdict is Inconclusive at the
// last d.
Tau1Decision decide_sigmaTau1(const Dfa& m, int n, Tau1Mode mode,
                              const std::vector<std::uint64_t>& d_list = {1, 2, 6},
                              const Budget& budget = {});

// Level n of the Boolean hierarchy over Straubing-Therien level 3/2 for a
// two-letter alphabet.  Preconditions: |A| = 2 (AlphabetArityError) and L(M)
// star-free (NotStarFreeError).  The empty word may participate.
MwDecision decide_sigmaL2_binary(const Dfa& m, int n, const Budget& budget = {});

enum class Family { Ckd, SigmaB1, SigmaD1, SigmaTau1, SigmaL2Binary };

struct HierarchyQuery {
    Family family = Family::SigmaB1;
    int k = 0;  // Ckd only
    int d = 1;  // Ckd / SigmaD1
    EmbedSemantics semantics = EmbedSemantics::LengthCongruent;  // Ckd only
    std::vector<std::uint64_t> d_list = {1, 2, 6};               // SigmaTau1 only
};

// Smallest n <= cap whose decider reports InClass (for SigmaTau1: InClass at
// some tried modulus).
LevelResult min_level(const Dfa& m, const HierarchyQuery& query, int cap,
                      const Budget& budget = {});

}  // namespace boolhier
