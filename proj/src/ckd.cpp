#include "boolhier/ckd.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

namespace boolhier {

namespace {

// Generating-phase configuration of the parallel chain-guessing search.
//
// The k-letter previews hold letters committed to be appended next: a step
// consumes the shared head letter of words j..n and pushes one fresh guess,
// and on termination every word flushes its pending preview, so the previews
// denote the last k letters of the finished words.  Words of length <= k
// cannot take part in a 1-alternating chain (they relate only to themselves,
// so memberships cannot alternate), hence every word gets at least one
// consumed letter plus the k flushed ones.
struct Config {
    std::vector<std::uint8_t> states;    // n+1 entries
    std::vector<std::uint8_t> residues;  // n+1 entries, values < d
    std::vector<std::uint8_t> previews;  // (n+1)*k letter indices
    bool started = false;                // some step appended to word 0

    std::string key() const {
        std::string s;
        s.reserve(states.size() + residues.size() + previews.size() + 1);
        s.append(states.begin(), states.end());
        s.append(residues.begin(), residues.end());
        s.append(previews.begin(), previews.end());
        s.push_back(started ? 1 : 0);
        return s;
    }
};

struct Edge {
    int parent;          // index of predecessor config, -1 for start configs
    std::uint8_t j;      // words j..n received the letter
    std::uint8_t letter; // alphabet index of the appended letter
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = saturating_mul(r, base);
    return r;
}

}  // namespace

CkdDecision decide_ckd(const Dfa& m, const CkdQuery& q, const Budget& budget) {
    const int k = q.k, d = q.d, n = q.n;
    const int na = m.alphabet().size();
    const int nz = m.num_states();
    if (n < 1) throw BoundsError("chain length n must be >= 1");
    if (k < 0 || k > budget.max_k) {
        throw BoundsError("k = " + std::to_string(k) + " outside [0, " + std::to_string(budget.max_k) + "]");
    }
    if (d < 1 || d > budget.max_d) {
        throw BoundsError("d = " + std::to_string(d) + " outside [1, " + std::to_string(budget.max_d) + "]");
    }
    if (nz > 255 || d > 255 || na > 255) throw BudgetExceeded("automaton or parameters too large");

    std::uint64_t bound = saturating_mul(
        saturating_mul(saturating_pow(static_cast<std::uint64_t>(nz), n + 1),
                       saturating_pow(static_cast<std::uint64_t>(d), n + 1)),
        saturating_pow(static_cast<std::uint64_t>(na), k * (n + 1)));
    if (bound > budget.max_configurations) {
        throw BudgetExceeded("configuration bound " +
                             (bound == UINT64_MAX ? std::string("overflows") : std::to_string(bound)) +
                             " exceeds budget " + std::to_string(budget.max_configurations));
    }

    const bool length_congruent = (q.semantics == EmbedSemantics::LengthCongruent);

    std::vector<Config> configs;
    std::vector<Edge> edges;
    std::unordered_map<std::string, int> seen;
    auto intern = [&](Config c, int parent, int j, int letter) -> int {
        auto [it, inserted] = seen.emplace(c.key(), static_cast<int>(configs.size()));
        if (!inserted) return -1;
        configs.push_back(std::move(c));
        edges.push_back(Edge{parent, static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(letter)});
        return it->second;
    };

    // Start configurations: any valid chain has equal length-k prefixes all
    // along (pairwise prefix equality is part of the order), and the initial
    // previews commit exactly those prefixes, so only equal preview tuples
    // can lead to acceptance; one start configuration per k-word.
    {
        std::vector<std::uint8_t> preview(static_cast<std::size_t>(k), 0);
        for (;;) {
            Config c;
            c.states.assign(static_cast<std::size_t>(n) + 1, static_cast<std::uint8_t>(m.start()));
            c.residues.assign(static_cast<std::size_t>(n) + 1, 0);
            c.previews.reserve(static_cast<std::size_t>(k) * (n + 1));
            for (int i = 0; i <= n; ++i) {
                c.previews.insert(c.previews.end(), preview.begin(), preview.end());
            }
            intern(std::move(c), -1, 0, 0);
            // next k-word in lex order
            int pos = k - 1;
            while (pos >= 0 && preview[static_cast<std::size_t>(pos)] == na - 1) {
                preview[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++preview[static_cast<std::size_t>(pos)];
        }
    }

    auto accepting_config = [&](const Config& c) {
        if (!c.started) return false;
        if (k >= 1) {
            // The flushed letters are shared by all words: previews and
            // residues must agree across the tuple.
            for (int i = 1; i <= n; ++i) {
                if (c.residues[static_cast<std::size_t>(i)] != c.residues[0]) return false;
                for (int t = 0; t < k; ++t) {
                    if (c.previews[static_cast<std::size_t>(i) * k + t] != c.previews[static_cast<std::size_t>(t)]) {
                        return false;
                    }
                }
            }
        } else if (length_congruent) {
            for (int i = 1; i <= n; ++i) {
                if (c.residues[static_cast<std::size_t>(i)] != c.residues[0]) return false;
            }
        }
        for (int i = 0; i <= n; ++i) {
            State s = c.states[static_cast<std::size_t>(i)];
            for (int t = 0; t < k; ++t) {
                s = m.next(s, c.previews[static_cast<std::size_t>(i) * k + t]);
            }
            if (m.is_accepting(s) != (i % 2 == 0)) return false;
        }
        return true;
    };

    std::uint64_t explored = 0;
    int accept_id = -1;
    for (int cur = 0; cur < static_cast<int>(configs.size()) && accept_id < 0; ++cur) {
        ++explored;
        if (explored > budget.max_configurations) {
            throw BudgetExceeded("explored configurations exceed budget");
        }
        if (accepting_config(configs[static_cast<std::size_t>(cur)])) {
            accept_id = cur;
            break;
        }
        for (int j = 0; j <= n; ++j) {
            const Config& c = configs[static_cast<std::size_t>(cur)];  // re-fetch: vector may grow
            // Shared step into words j..n: previews and residues of the
            // affected words must agree (prefix condition and mod-d position
            // condition of the order).
            bool ok = true;
            for (int i = j + 1; i <= n && ok; ++i) {
                if (c.residues[static_cast<std::size_t>(i)] != c.residues[static_cast<std::size_t>(j)]) ok = false;
                for (int t = 0; t < k && ok; ++t) {
                    if (c.previews[static_cast<std::size_t>(i) * k + t] !=
                        c.previews[static_cast<std::size_t>(j) * k + t]) {
                        ok = false;
                    }
                }
            }
            if (!ok) continue;
            int consumed = k >= 1 ? c.previews[static_cast<std::size_t>(j) * k] : -1;
            for (int g = 0; g < na; ++g) {
                const Config& parent = configs[static_cast<std::size_t>(cur)];
                int a = k >= 1 ? consumed : g;  // k = 0: the step letter is guessed directly
                Config next = parent;
                for (int i = j; i <= n; ++i) {
                    next.states[static_cast<std::size_t>(i)] =
                        static_cast<std::uint8_t>(m.next(next.states[static_cast<std::size_t>(i)], a));
                    next.residues[static_cast<std::size_t>(i)] =
                        static_cast<std::uint8_t>((next.residues[static_cast<std::size_t>(i)] + 1) % d);
                    if (k >= 1) {
                        for (int t = 0; t < k - 1; ++t) {
                            next.previews[static_cast<std::size_t>(i) * k + t] =
                                next.previews[static_cast<std::size_t>(i) * k + t + 1];
                        }
                        next.previews[static_cast<std::size_t>(i) * k + (k - 1)] = static_cast<std::uint8_t>(g);
                    }
                }
                next.started = parent.started || (j == 0);
                intern(std::move(next), cur, j, a);
            }
        }
    }

    CkdDecision decision;
    decision.configurations_explored = explored;
    if (accept_id < 0) {
        decision.in_class = true;
        return decision;
    }
    decision.in_class = false;

    // Reconstruct the chain by replaying the path.
    std::vector<int> path;
    for (int id = accept_id; id >= 0; id = edges[static_cast<std::size_t>(id)].parent) path.push_back(id);
    std::reverse(path.begin(), path.end());
    std::vector<std::string> words(static_cast<std::size_t>(n) + 1);
    for (std::size_t step = 1; step < path.size(); ++step) {  // path[0] is a start config
        const Edge& e = edges[static_cast<std::size_t>(path[step])];
        char letter = m.alphabet().letter(e.letter);
        for (int i = e.j; i <= n; ++i) words[static_cast<std::size_t>(i)].push_back(letter);
    }
    const Config& acc = configs[static_cast<std::size_t>(accept_id)];
    for (int i = 0; i <= n; ++i) {
        for (int t = 0; t < k; ++t) {
            words[static_cast<std::size_t>(i)].push_back(
                m.alphabet().letter(acc.previews[static_cast<std::size_t>(i) * k + t]));
        }
    }

    std::size_t cap = static_cast<std::size_t>(budget.witness_length_factor) *
                      static_cast<std::size_t>(nz) * static_cast<std::size_t>(n + 1) *
                      static_cast<std::size_t>(d);
    for (const std::string& w : words) {
        if (w.size() > cap) {
            decision.witness_truncated = true;
            return decision;
        }
    }
    ChainWitness witness;
    witness.words = std::move(words);
    for (int i = 0; i <= n; ++i) {
        witness.memberships.push_back(accepts(m, witness.words[static_cast<std::size_t>(i)]));
    }
    decision.witness = std::move(witness);
    return decision;
}

LevelResult min_level_ckd(const Dfa& m, int k, int d, int cap, EmbedSemantics semantics,
                          const Budget& budget) {
    if (cap < 1) throw BoundsError("level cap must be >= 1");
    for (int n = 1; n <= cap; ++n) {
        if (decide_ckd(m, CkdQuery{k, d, n, semantics}, budget).in_class) {
            return LevelResult{n};
        }
    }
    return LevelResult{std::nullopt};
}

}  // namespace boolhier
