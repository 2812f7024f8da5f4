#include "boolhier/marked_words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "boolhier/monoid.hpp"

namespace boolhier {

std::string expand(const MarkedWord& w, int i) {
    std::string out;
    for (const MarkedLetter& ml : w.letters) {
        out.push_back(ml.base);
        for (int r = 0; r < i; ++r) out += ml.label;
    }
    return out;
}

std::string unmark(const MarkedWord& w) { return expand(w, 0); }

std::string to_string(const MarkedWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out.push_back(' ');
        out.push_back(w.letters[i].base);
        out.push_back('[');
        out += w.letters[i].label;
        out.push_back(']');
    }
    return out;
}

MarkedWord parse_marked_word(std::string_view text) {
    MarkedWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 3 || tok[1] != '[' || tok.back() != ']') {
            throw SyntaxError("bad marked letter '" + tok + "', expected e.g. a[ba] or b[]");
        }
        w.letters.push_back(MarkedLetter{tok[0], tok.substr(2, tok.size() - 3)});
    }
    return w;
}

std::optional<ConsistencyRun> run_marked(const Dfa& m, State s, const MarkedWord& w) {
    ConsistencyRun run;
    run.trace.push_back(s);
    State cur = s;
    for (const MarkedLetter& ml : w.letters) {
        State after_base = m.step(cur, ml.base);
        if (run_from(m, after_base, ml.label) != after_base) return std::nullopt;
        cur = after_base;
        run.trace.push_back(cur);
    }
    run.end = cur;
    return run;
}

bool is_consistent(const Dfa& m, const MarkedWord& w) {
    return run_marked(m, m.start(), w).has_value();
}

bool embeds(const MarkedWord& w, const MarkedWord& w2, int d) {
    if (d < 1) throw BoundsError("modulus d must be >= 1");
    const auto& a = w.letters;
    const auto& b = w2.letters;
    const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
    if (m > n) return false;

    // dp[i][j]: a[0..i) matched into b[0..j), every skipped b-letter inside a
    // completed block attached after a matched context occurrence.  Blocks
    // are skips of length divisible by d ending with a copy of the context
    // letter; consecutive blocks after one occurrence merge, so repeated
    // skips cost nothing extra.
    std::vector<char> prev(static_cast<std::size_t>(n) + 1, 0), cur(static_cast<std::size_t>(n) + 1, 0);
    auto block_closure = [&](std::vector<char>& row, int i) {
        // i = letters of a matched so far; context letter a[i-1]
        if (i == 0 || a[static_cast<std::size_t>(i - 1)].label.empty()) return;
        const MarkedLetter& ctx = a[static_cast<std::size_t>(i - 1)];
        std::vector<char> residue_seen(static_cast<std::size_t>(d), 0);
        for (int j = 0; j <= n; ++j) {
            if (j > 0 && residue_seen[static_cast<std::size_t>(j % d)] &&
                b[static_cast<std::size_t>(j - 1)] == ctx) {
                row[static_cast<std::size_t>(j)] = 1;
            }
            if (row[static_cast<std::size_t>(j)]) residue_seen[static_cast<std::size_t>(j % d)] = 1;
        }
    };

    prev[0] = 1;
    block_closure(prev, 0);  // no-op, kept for symmetry
    for (int i = 1; i <= m; ++i) {
        std::fill(cur.begin(), cur.end(), 0);
        for (int j = 1; j <= n; ++j) {
            if (prev[static_cast<std::size_t>(j - 1)] &&
                a[static_cast<std::size_t>(i - 1)] == b[static_cast<std::size_t>(j - 1)]) {
                cur[static_cast<std::size_t>(j)] = 1;
            }
        }
        block_closure(cur, i);
        std::swap(prev, cur);
    }
    return prev[static_cast<std::size_t>(n)] == 1;
}

MarkedReplayResult verify_marked_chain(const Dfa& m, const std::vector<MarkedWord>& words, int d,
                                       int expected_n, bool alphabet_condition, bool allow_empty) {
    if (words.empty()) return {false, "empty chain"};
    if (expected_n >= 0 && words.size() != static_cast<std::size_t>(expected_n) + 1) {
        return {false, "chain has " + std::to_string(words.size()) + " words, expected " +
                           std::to_string(expected_n + 1)};
    }
    const int full_mask = (1 << m.alphabet().size()) - 1;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const MarkedWord& w = words[i];
        if (!allow_empty && w.empty()) return {false, "word " + std::to_string(i) + " is empty"};
        for (const MarkedLetter& ml : w.letters) {
            try {
                m.alphabet().validate_word(std::string_view(&ml.base, 1));
                m.alphabet().validate_word(ml.label);
            } catch (const AlphabetError& e) {
                return {false, "word " + std::to_string(i) + ": " + e.what()};
            }
            if (alphabet_condition && !ml.label.empty()) {
                int mask = 0;
                for (char c : ml.label) mask |= 1 << m.alphabet().index_of(c);
                if (mask != full_mask) {
                    return {false, "word " + std::to_string(i) + ": label '" + ml.label +
                                       "' does not use the full alphabet"};
                }
            }
        }
        if (!is_consistent(m, w)) {
            return {false, "word " + std::to_string(i) + " is not consistent with loops in M"};
        }
    }
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        if (!embeds(words[i], words[i + 1], d)) {
            return {false, "pair " + std::to_string(i) + " -> " + std::to_string(i + 1) +
                               " is not in the insertion relation mod " + std::to_string(d)};
        }
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        bool in = accepts(m, unmark(words[i]));
        bool expected = (i % 2 == 0);
        if (in != expected) {
            return {false, "unmarked word " + std::to_string(i) + (in ? " is" : " is not") +
                               " accepted; alternation starting inside requires the opposite"};
        }
    }
    return {true, ""};
}

namespace {

// Labels explored up to (transformation on Z, letter set): consistency,
// membership of unmarked words and the insertion relation only see labels
// through loop behavior, letter content and pairwise equality, and mapping
// every label of a class to one representative preserves all three.
struct LabelClass {
    Transformation action;
    int alph_mask;
    std::string rep;  // shortest, lexicographically least realization
};

struct LabelUniverse {
    std::vector<LabelClass> classes;  // nonempty labels only

    static LabelUniverse build(const Dfa& m, int max_label_len, bool alphabet_condition) {
        LabelUniverse u;
        std::map<std::pair<std::vector<State>, int>, std::size_t> index;
        const int full_mask = (1 << m.alphabet().size()) - 1;
        std::vector<std::pair<std::string, std::pair<Transformation, int>>> layer;
        layer.emplace_back("", std::make_pair(identity_transformation(m.num_states()), 0));
        for (int len = 1; len <= max_label_len; ++len) {
            std::vector<std::pair<std::string, std::pair<Transformation, int>>> next;
            for (const auto& [word, ta] : layer) {
                for (int li = 0; li < m.alphabet().size(); ++li) {
                    std::string w2 = word + m.alphabet().letter(li);
                    Transformation act = ta.first.then(letter_transformation(m, li));
                    int mask = ta.second | (1 << li);
                    next.emplace_back(std::move(w2), std::make_pair(std::move(act), mask));
                }
            }
            for (const auto& [word, ta] : next) {
                if (alphabet_condition && ta.second != full_mask) continue;
                auto key = std::make_pair(ta.first.map, ta.second);
                if (index.emplace(key, u.classes.size()).second) {
                    u.classes.push_back(LabelClass{ta.first, ta.second, word});
                }
            }
            layer = std::move(next);
        }
        return u;
    }
};

// Abstract marked letter: base letter index plus label class (-1 = empty label).
struct AbsLetter {
    int base;
    int label_class;
    bool operator==(const AbsLetter& o) const = default;
};

struct AbsWord {
    std::vector<AbsLetter> letters;
};

struct MarkedOracle {
    const Dfa& m;
    int d, n;
    MarkedSearchBounds bounds;
    LabelUniverse labels;
    std::uint64_t nodes = 0;
    std::uint64_t node_cap;

    MarkedWord concretize(const AbsWord& w) const {
        MarkedWord out;
        for (const AbsLetter& al : w.letters) {
            out.letters.push_back(MarkedLetter{
                m.alphabet().letter(al.base),
                al.label_class < 0 ? std::string()
                                   : labels.classes[static_cast<std::size_t>(al.label_class)].rep});
        }
        return out;
    }

    bool label_loops_at(int label_class, State t) const {
        if (label_class < 0) return true;
        return labels.classes[static_cast<std::size_t>(label_class)].action(t) == t;
    }

    void bump() {
        if (++nodes > node_cap) {
            throw BudgetExceeded("marked-chain oracle exceeded its node budget");
        }
    }

    // Successor generation: rebuilds w left-to-right, optionally inserting
    // one block after each occurrence with a nonempty label (several blocks
    // after one occurrence merge into one, so one suffices).  Consistency is
    // threaded through the rebuild, which also re-validates the suffix after
    // every insertion since blocks may shift the run's states.  f is called
    // with each proper extension and its end state; returns true once f does.
    template <typename F>
    bool gen_successors(const AbsWord& w, int p, State cur, AbsWord& built, F&& f) {
        bump();
        if (p >= 1 && w.letters[static_cast<std::size_t>(p - 1)].label_class >= 0) {
            if (grow_block(w, p, cur, built, 0, f)) return true;
        }
        return continue_plain(w, p, cur, built, f);
    }

    template <typename F>
    bool continue_plain(const AbsWord& w, int p, State cur, AbsWord& built, F&& f) {
        int len = static_cast<int>(w.letters.size());
        if (p == len) {
            if (built.letters.size() > w.letters.size()) return f(built, cur);
            return false;
        }
        const AbsLetter& al = w.letters[static_cast<std::size_t>(p)];
        State after = m.next(cur, al.base);
        if (!label_loops_at(al.label_class, after)) return false;  // suffix turned inconsistent
        built.letters.push_back(al);
        bool done = gen_successors(w, p + 1, after, built, f);
        built.letters.pop_back();
        return done;
    }

    // Block anchored at w[p-1]: content so far has blen letters; may close
    // with the context copy when the unmarked block length is divisible by d.
    template <typename F>
    bool grow_block(const AbsWord& w, int p, State cur, AbsWord& built, int blen, F&& f) {
        bump();
        int len = static_cast<int>(w.letters.size());
        int suffix = len - p;
        const AbsLetter& ctx = w.letters[static_cast<std::size_t>(p - 1)];
        if ((blen + 1) % d == 0 &&
            static_cast<int>(built.letters.size()) + 1 + suffix <= bounds.max_marked_len) {
            State after = m.next(cur, ctx.base);
            if (label_loops_at(ctx.label_class, after)) {
                built.letters.push_back(ctx);
                bool done = continue_plain(w, p, after, built, f);
                built.letters.pop_back();
                if (done) return true;
            }
        }
        if (static_cast<int>(built.letters.size()) + 2 + suffix > bounds.max_marked_len) return false;
        for (int base = 0; base < m.alphabet().size(); ++base) {
            State after = m.next(cur, base);
            built.letters.push_back(AbsLetter{base, -1});
            if (grow_block(w, p, after, built, blen + 1, f)) return true;
            built.letters.pop_back();
            for (std::size_t c = 0; c < labels.classes.size(); ++c) {
                if (!label_loops_at(static_cast<int>(c), after)) continue;
                built.letters.push_back(AbsLetter{base, static_cast<int>(c)});
                if (grow_block(w, p, after, built, blen + 1, f)) return true;
                built.letters.pop_back();
            }
        }
        return false;
    }

    // DFS over chain levels; level = index of w in the chain.
    bool extend_chain(const AbsWord& w, int level, std::vector<AbsWord>& chain) {
        if (level == n) return true;
        bool want_in = ((level + 1) % 2 == 0);
        AbsWord built;
        return gen_successors(w, 0, m.start(), built, [&](const AbsWord& w2, State end) {
            if (m.is_accepting(end) != want_in) return false;
            chain.push_back(w2);
            if (extend_chain(w2, level + 1, chain)) return true;
            chain.pop_back();
            return false;
        });
    }

    // Enumerates consistent start words of exactly `len` letters in lex
    // order; returns true when a full chain has been found.
    bool enum_starts(AbsWord& w, State cur, int len, std::vector<AbsWord>& chain) {
        bump();
        if (static_cast<int>(w.letters.size()) == len) {
            if (!m.is_accepting(cur)) return false;
            // w needs at least one nonempty label to anchor any insertion
            bool has_anchor = std::any_of(w.letters.begin(), w.letters.end(),
                                          [](const AbsLetter& al) { return al.label_class >= 0; });
            if (!has_anchor) return false;
            chain.assign(1, w);
            if (extend_chain(w, 0, chain)) return true;
            chain.clear();
            return false;
        }
        for (int base = 0; base < m.alphabet().size(); ++base) {
            State after = m.next(cur, base);
            w.letters.push_back(AbsLetter{base, -1});
            if (enum_starts(w, after, len, chain)) return true;
            w.letters.pop_back();
            for (std::size_t c = 0; c < labels.classes.size(); ++c) {
                if (!label_loops_at(static_cast<int>(c), after)) continue;
                w.letters.push_back(AbsLetter{base, static_cast<int>(c)});
                if (enum_starts(w, after, len, chain)) return true;
                w.letters.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<MarkedChainWitness> oracle_marked_chain_search(const Dfa& m, int d, int n,
                                                             const MarkedSearchBounds& bounds,
                                                             bool alphabet_condition,
                                                             const Budget& budget) {
    if (n < 1) throw BoundsError("chain length n must be >= 1");
    if (d < 1) throw BoundsError("modulus d must be >= 1");
    if (bounds.max_marked_len < 1 || bounds.max_marked_len > budget.max_oracle_marked_len) {
        throw BoundsError("max_marked_len = " + std::to_string(bounds.max_marked_len) +
                          " exceeds cap " + std::to_string(budget.max_oracle_marked_len));
    }
    if (bounds.max_label_len < 0 || bounds.max_label_len > budget.max_oracle_label_len) {
        throw BoundsError("max_label_len = " + std::to_string(bounds.max_label_len) +
                          " exceeds cap " + std::to_string(budget.max_oracle_label_len));
    }
    if (m.num_states() == 1) return std::nullopt;  // no alternation in a trivial language

    MarkedOracle oracle{m, d, n, bounds, LabelUniverse::build(m, bounds.max_label_len, alphabet_condition),
                        0, 100'000'000};
    std::vector<AbsWord> chain;
    for (int len = 1; len <= bounds.max_marked_len; ++len) {
        AbsWord w;
        if (oracle.enum_starts(w, m.start(), len, chain)) {
            MarkedChainWitness witness;
            for (const AbsWord& aw : chain) {
                MarkedWord cw = oracle.concretize(aw);
                witness.memberships.push_back(accepts(m, unmark(cw)));
                witness.words.push_back(std::move(cw));
            }
            return witness;
        }
    }
    return std::nullopt;
}

}  // namespace boolhier
