#include "boolhier/word_orders.hpp"

#include <algorithm>

namespace boolhier {

std::string_view prefix_k(std::string_view u, int k) {
    return u.substr(0, std::min<std::size_t>(u.size(), static_cast<std::size_t>(std::max(k, 0))));
}

std::string_view suffix_k(std::string_view u, int k) {
    std::size_t len = std::min<std::size_t>(u.size(), static_cast<std::size_t>(std::max(k, 0)));
    return u.substr(u.size() - len);
}

bool leq_kd(std::string_view u, std::string_view v, const OrderParams& p) {
    const int k = p.k, d = p.d;
    const int m = static_cast<int>(u.size()), n = static_cast<int>(v.size());
    if (m <= k || n <= k) return u == v;  // short words relate only to themselves
    if (prefix_k(u, k) != prefix_k(v, k)) return false;
    if (suffix_k(u, k) != suffix_k(v, k)) return false;
    if (p.semantics == EmbedSemantics::LengthCongruent && (n - m) % d != 0) return false;

    // dp[j] = an embedding of u[0..i] exists with f(i) = j.  Window equality
    // is only required for i < m-k; beyond that f is just monotone injective
    // with the residue constraint.
    auto placement_ok = [&](int i, int j) {
        if ((j - i) % d != 0) return false;
        if (i < m - k) {
            if (j + k > n - 1) return false;  // window must fit inside v
            for (int t = 0; t <= k; ++t) {
                if (u[static_cast<std::size_t>(i + t)] != v[static_cast<std::size_t>(j + t)]) return false;
            }
        }
        return true;
    };

    std::vector<char> dp(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) dp[static_cast<std::size_t>(j)] = placement_ok(0, j) ? 1 : 0;
    for (int i = 1; i < m; ++i) {
        // any_before[j] = exists j' < j with dp[j'] set
        std::vector<char> next(static_cast<std::size_t>(n), 0);
        bool any = false;
        for (int j = 0; j < n; ++j) {
            if (any && placement_ok(i, j)) next[static_cast<std::size_t>(j)] = 1;
            any = any || dp[static_cast<std::size_t>(j)];
        }
        dp = std::move(next);
    }
    return std::find(dp.begin(), dp.end(), 1) != dp.end();
}

ReplayResult verify_chain(const Dfa& m, const std::vector<std::string>& words,
                          const OrderParams& p, int expected_n) {
    if (words.empty()) return {false, "empty chain"};
    if (expected_n >= 0 && words.size() != static_cast<std::size_t>(expected_n) + 1) {
        return {false, "chain has " + std::to_string(words.size()) + " words, expected " +
                           std::to_string(expected_n + 1)};
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].empty()) return {false, "word " + std::to_string(i) + " is empty"};
        try {
            m.alphabet().validate_word(words[i]);
        } catch (const AlphabetError& e) {
            return {false, "word " + std::to_string(i) + ": " + e.what()};
        }
    }
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        if (!leq_kd(words[i], words[i + 1], p)) {
            return {false, "pair " + std::to_string(i) + " -> " + std::to_string(i + 1) +
                               " is not related by the order"};
        }
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        bool in = accepts(m, words[i]);
        bool expected = (i % 2 == 0);
        if (in != expected) {
            return {false, "word " + std::to_string(i) + (in ? " is" : " is not") +
                               " accepted; alternation starting inside requires the opposite"};
        }
    }
    return {true, ""};
}

WordPoset::WordPoset(Alphabet alphabet, int max_word_len, OrderParams params)
    : alphabet_(std::move(alphabet)), params_(params) {
    std::vector<std::string> layer{""};
    for (int len = 1; len <= max_word_len; ++len) {
        std::vector<std::string> next;
        next.reserve(layer.size() * static_cast<std::size_t>(alphabet_.size()));
        for (const std::string& w : layer) {
            for (int li = 0; li < alphabet_.size(); ++li) {
                next.push_back(w + alphabet_.letter(li));
            }
        }
        words_.insert(words_.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    memo_.assign(words_.size() * words_.size(), -1);
}

bool WordPoset::leq(int i, int j) const {
    std::size_t key = static_cast<std::size_t>(i) * words_.size() + static_cast<std::size_t>(j);
    if (memo_[key] < 0) {
        memo_[key] = leq_kd(words_[static_cast<std::size_t>(i)], words_[static_cast<std::size_t>(j)], params_) ? 1 : 0;
    }
    return memo_[key] == 1;
}

const WordPoset& WordPosetCache::get(const Alphabet& alphabet, int max_word_len,
                                     const OrderParams& params) {
    auto key = std::make_tuple(alphabet.letters(), max_word_len, params.k, params.d,
                               static_cast<int>(params.semantics));
    auto it = tables_.find(key);
    if (it == tables_.end()) {
        it = tables_.emplace(key, WordPoset(alphabet, max_word_len, params)).first;
    }
    return it->second;
}

namespace {

struct ChainDfs {
    const WordPoset& poset;
    const std::vector<char>& in_lang;
    int n;
    std::vector<int> chain;

    // Exact-total-length DFS; word indices are (length, lex)-sorted so the
    // first chain found at the smallest total is the lexicographically least.
    bool extend(int level, int total_left) {
        if (level > n) return total_left == 0;
        int prev = chain.empty() ? -1 : chain.back();
        std::size_t count = poset.words().size();
        for (int j = 0; j < static_cast<int>(count); ++j) {
            int len = static_cast<int>(poset.words()[static_cast<std::size_t>(j)].size());
            int remaining_words = n - level;
            if (len + remaining_words * len > total_left) break;  // lengths only grow along a chain
            bool want_in = (level % 2 == 0);
            if ((in_lang[static_cast<std::size_t>(j)] != 0) != want_in) continue;
            if (prev >= 0) {
                int prev_len = static_cast<int>(poset.words()[static_cast<std::size_t>(prev)].size());
                if (len < prev_len) continue;
                if (!poset.leq(prev, j)) continue;
            }
            chain.push_back(j);
            if (extend(level + 1, total_left - len)) return true;
            chain.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<ChainWitness> oracle_chain_search(const Dfa& m, const OrderParams& p, int n,
                                                const ChainSearchBounds& bounds,
                                                const Budget& budget) {
    if (n < 1) throw BoundsError("chain length n must be >= 1");
    if (p.k < 0 || p.k > budget.max_k) {
        throw BoundsError("k = " + std::to_string(p.k) + " outside [0, " + std::to_string(budget.max_k) + "]");
    }
    if (p.d < 1 || p.d > budget.max_d) {
        throw BoundsError("d = " + std::to_string(p.d) + " outside [1, " + std::to_string(budget.max_d) + "]");
    }
    if (bounds.max_word_len < 1 || bounds.max_word_len > budget.max_oracle_word_len) {
        throw BoundsError("max_word_len = " + std::to_string(bounds.max_word_len) + " exceeds cap " +
                          std::to_string(budget.max_oracle_word_len));
    }

    WordPosetCache local_cache;
    WordPosetCache& cache = bounds.cache ? *bounds.cache : local_cache;
    const WordPoset& poset = cache.get(m.alphabet(), bounds.max_word_len, p);

    std::vector<char> in_lang(poset.words().size());
    bool any_in = false, any_out = false;
    for (std::size_t i = 0; i < poset.words().size(); ++i) {
        in_lang[i] = accepts(m, poset.words()[i]) ? 1 : 0;
        (in_lang[i] ? any_in : any_out) = true;
    }
    if (!any_in || !any_out) return std::nullopt;  // alternation needs both kinds

    int max_total = (n + 1) * bounds.max_word_len;
    for (int total = n + 1; total <= max_total; ++total) {
        ChainDfs dfs{poset, in_lang, n, {}};
        if (dfs.extend(0, total)) {
            ChainWitness w;
            for (int idx : dfs.chain) {
                w.words.push_back(poset.words()[static_cast<std::size_t>(idx)]);
                w.memberships.push_back(in_lang[static_cast<std::size_t>(idx)] != 0);
            }
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace boolhier
