#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolhier/budget.hpp"
#include "boolhier/dfa.hpp"

namespace boolhier {

// Semantics of the mod-d position constraint in the (k,d)-embedding.
//
// LiteralEmbedding requires only f(i) = i (mod d) for every position of u.
// LengthCongruent additionally requires |u| = |v| (mod d), which makes the
// order agree with the f_0-length-preserving insertion relation on marked
// words (under LiteralEmbedding, e.g. aa <= aaa for k=0, d=2, so the
// even-length language would not be an upper set of any of these orders).
// LengthCongruent is the default everywhere; LiteralEmbedding is retained
// for experimentation.
enum class EmbedSemantics { LengthCongruent, LiteralEmbedding };

struct OrderParams {
    int k = 0;  // context width >= 0
    int d = 1;  // modulus >= 1
    EmbedSemantics semantics = EmbedSemantics::LengthCongruent;
};

// Length-min(k,|u|) prefix / suffix.
std::string_view prefix_k(std::string_view u, int k);
std::string_view suffix_k(std::string_view u, int k);

// u <=^d_k v: either u = v with |u| <= k, or |u|,|v| > k, the length-k
// prefixes and suffixes agree, and a monotone injective f from positions of
// u to positions of v exists with u[i..i+k] = v[f(i)..f(i)+k] for all
// i < |u|-k and f(i) = i (mod d); under LengthCongruent additionally
// |u| = |v| (mod d).  Decided by dynamic programming over position pairs.
bool leq_kd(std::string_view u, std::string_view v, const OrderParams& p);

// A chain x_0 <= x_1 <= ... <= x_n with strictly alternating membership in
// L(M) starting inside (memberships[0] = true).
struct ChainWitness {
    std::vector<std::string> words;
    std::vector<bool> memberships;
};

struct ReplayResult {
    bool ok = false;
    std::string reason;
};

// Independent replay check: words nonempty and over M's alphabet, adjacent
// pairs related by <=^d_k, memberships recomputed from M strictly alternate
// with x_0 accepted.  If expected_n >= 0 the chain must have length
// expected_n (i.e. expected_n + 1 words).
ReplayResult verify_chain(const Dfa& m, const std::vector<std::string>& words,
                          const OrderParams& p, int expected_n = -1);

// Memo table for <=^d_k over all nonempty words up to a length bound; pair
// results are computed on demand.  The table depends only on the alphabet
// and order parameters, so one instance can be shared across automata.
class WordPoset {
  public:
    WordPoset(Alphabet alphabet, int max_word_len, OrderParams params);

    const std::vector<std::string>& words() const { return words_; }  // (length, lex) order
    const OrderParams& params() const { return params_; }
    bool leq(int i, int j) const;  // indices into words()

  private:
    Alphabet alphabet_;
    OrderParams params_;
    std::vector<std::string> words_;
    mutable std::vector<std::int8_t> memo_;  // -1 unknown, 0 false, 1 true
};

// Shared cache of WordPoset tables keyed by (alphabet, max length, params).
class WordPosetCache {
  public:
    const WordPoset& get(const Alphabet& alphabet, int max_word_len, const OrderParams& params);

  private:
    std::map<std::tuple<std::string, int, int, int, int>, WordPoset> tables_;
};

struct ChainSearchBounds {
    int max_word_len = 8;
    WordPosetCache* cache = nullptr;  // optional shared table
};

// Bounded brute-force search for a 1-alternating <=^d_k chain of length n
// for L(M) over A^+, restricted to words of length <= max_word_len.  Returns
// the chain minimizing total word length (lexicographic tie-breaking), or
// nullopt if none exists within bounds.  A nullopt result is not a proof of
// membership.
std::optional<ChainWitness> oracle_chain_search(const Dfa& m, const OrderParams& p, int n,
                                                const ChainSearchBounds& bounds,
                                                const Budget& budget = {});

}  // namespace boolhier
