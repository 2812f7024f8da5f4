#include "boolhier/mw_decider.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "boolhier/monoid.hpp"

namespace boolhier {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = saturating_mul(r, base);
    return r;
}

std::vector<State> anchors_of_mask(std::uint32_t mask) {
    std::vector<State> v;
    for (State s = 0; mask; ++s, mask >>= 1) {
        if (mask & 1) v.push_back(s);
    }
    return v;
}

// BFS over tuples of anchor states (plus a seen-letter mask when the
// alphabet condition is on); a loop is a path of length >= 1 from the anchor
// tuple back to itself with a full mask.
struct LoopProduct {
    const Dfa& m;
    std::vector<State> anchors;
    bool full_alphabet;

    std::size_t tuple_count = 1;
    int mask_count = 1;

    LoopProduct(const Dfa& dfa, const LoopQuery& q, const Budget& budget)
        : m(dfa), anchors(q.anchors), full_alphabet(q.require_full_alphabet) {
        std::sort(anchors.begin(), anchors.end());
        anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
        if (anchors.empty()) throw BoundsError("loop query needs a nonempty anchor set");
        for (State s : anchors) {
            if (s < 0 || s >= m.num_states()) throw BoundsError("loop anchor out of range");
        }
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            count = saturating_mul(count, static_cast<std::uint64_t>(m.num_states()));
        }
        if (full_alphabet) {
            count = saturating_mul(count, std::uint64_t{1} << m.alphabet().size());
            mask_count = 1 << m.alphabet().size();
        }
        if (count > budget.max_product_states) {
            throw BudgetExceeded("loop product of " + std::to_string(anchors.size()) +
                                 " automaton copies exceeds the product-state budget");
        }
        tuple_count = static_cast<std::size_t>(count);
    }

    std::size_t encode(const std::vector<State>& tuple, int mask) const {
        std::size_t idx = 0;
        for (std::size_t i = tuple.size(); i-- > 0;) {
            idx = idx * static_cast<std::size_t>(m.num_states()) + static_cast<std::size_t>(tuple[i]);
        }
        if (full_alphabet) idx = idx * static_cast<std::size_t>(mask_count) + static_cast<std::size_t>(mask);
        return idx;
    }

    // Returns the shortest (lexicographically least) loop word, if any.
    std::optional<std::string> search(bool want_witness) const {
        const int na = m.alphabet().size();
        const int full_mask = full_alphabet ? (1 << na) - 1 : 0;
        std::size_t target = encode(anchors, full_mask);

        std::vector<std::int32_t> pred(tuple_count, -2);  // -2 unvisited; else predecessor id
        std::vector<std::int8_t> pred_letter(tuple_count, -1);
        std::vector<std::size_t> frontier;

        // Seed with one-letter successors of the anchor tuple.
        std::vector<State> tuple(anchors.size());
        for (int a = 0; a < na; ++a) {
            for (std::size_t i = 0; i < anchors.size(); ++i) tuple[i] = m.next(anchors[i], a);
            int mask = full_alphabet ? (1 << a) : 0;
            std::size_t id = encode(tuple, mask);
            if (pred[id] == -2) {
                pred[id] = -1;
                pred_letter[id] = static_cast<std::int8_t>(a);
                frontier.push_back(id);
            }
            if (id == target) {
                return std::string(1, m.alphabet().letter(a));
            }
        }
        std::vector<std::size_t> next;
        while (!frontier.empty()) {
            next.clear();
            for (std::size_t cur : frontier) {
                // decode
                std::size_t rest = cur;
                int mask = 0;
                if (full_alphabet) {
                    mask = static_cast<int>(rest % static_cast<std::size_t>(mask_count));
                    rest /= static_cast<std::size_t>(mask_count);
                }
                for (std::size_t i = 0; i < anchors.size(); ++i) {
                    tuple[i] = static_cast<State>(rest % static_cast<std::size_t>(m.num_states()));
                    rest /= static_cast<std::size_t>(m.num_states());
                }
                for (int a = 0; a < na; ++a) {
                    std::vector<State> t2(anchors.size());
                    for (std::size_t i = 0; i < anchors.size(); ++i) t2[i] = m.next(tuple[i], a);
                    int m2 = full_alphabet ? (mask | (1 << a)) : 0;
                    std::size_t id = encode(t2, m2);
                    if (pred[id] != -2) continue;
                    pred[id] = static_cast<std::int32_t>(cur);
                    pred_letter[id] = static_cast<std::int8_t>(a);
                    if (id == target) {
                        if (!want_witness) return std::string();
                        std::string word;
                        std::size_t walk = id;
                        for (;;) {
                            word.push_back(m.alphabet().letter(pred_letter[walk]));
                            if (pred[walk] < 0) break;
                            walk = static_cast<std::size_t>(pred[walk]);
                        }
                        std::reverse(word.begin(), word.end());
                        return word;
                    }
                    next.push_back(id);
                }
            }
            frontier.swap(next);
        }
        return std::nullopt;
    }
};

}  // namespace

bool simultaneous_loop_exists(const Dfa& m, const LoopQuery& q, const Budget& budget) {
    return LoopProduct(m, q, budget).search(false).has_value();
}

std::optional<std::string> find_simultaneous_loop(const Dfa& m, const LoopQuery& q,
                                                  const Budget& budget) {
    return LoopProduct(m, q, budget).search(true);
}

namespace {

enum class MwKind : std::uint8_t { EmitEmpty, EmitLoop, EmitContext, CloseDischarge, CloseRechain };

struct MwFrame {
    std::uint8_t level;
    std::uint8_t base;          // alphabet index of the context letter
    std::uint32_t obligation;   // states the shared label must fix, as a bitmask
    std::uint32_t f0_residue;   // unmarked length of the open block so far, mod d

    bool operator==(const MwFrame& o) const = default;
};

struct MwConfig {
    std::vector<std::uint8_t> states;  // n+1 entries
    std::vector<MwFrame> stack;        // levels strictly increase bottom to top
    bool started = false;              // word 0 is nonempty

    std::string key() const {
        std::string s;
        s.reserve(states.size() + 1 + stack.size() * 10);
        s.append(states.begin(), states.end());
        s.push_back(started ? 1 : 0);
        for (const MwFrame& f : stack) {
            s.push_back(static_cast<char>(f.level));
            s.push_back(static_cast<char>(f.base));
            for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((f.obligation >> (8 * b)) & 0xff));
            for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((f.f0_residue >> (8 * b)) & 0xff));
        }
        return s;
    }
};

struct MwEdge {
    int parent;
    MwKind kind;
    std::uint8_t letter;  // base letter of the emitted letter (or end copy)
    std::uint8_t level;   // EmitContext: level of the opened block; CloseRechain: new level
};

struct MwSearch {
    const Dfa& m;
    int d, n;
    bool alphabet_condition, allow_empty;
    const Budget& budget;

    std::vector<MwConfig> configs;
    std::vector<MwEdge> edges;
    std::unordered_map<std::string, int> seen;
    std::map<std::uint32_t, bool> loop_cache;
    std::uint64_t explored = 0;

    bool loop_exists(std::uint32_t obligation_mask) {
        auto it = loop_cache.find(obligation_mask);
        if (it != loop_cache.end()) return it->second;
        LoopQuery q{anchors_of_mask(obligation_mask), alphabet_condition};
        bool ok = simultaneous_loop_exists(m, q, budget);
        loop_cache.emplace(obligation_mask, ok);
        return ok;
    }

    void intern(MwConfig c, int parent, MwKind kind, int letter, int level) {
        auto [it, inserted] = seen.emplace(c.key(), static_cast<int>(configs.size()));
        if (!inserted) return;
        configs.push_back(std::move(c));
        edges.push_back(MwEdge{parent, kind, static_cast<std::uint8_t>(letter),
                               static_cast<std::uint8_t>(level)});
    }

    bool accepting(const MwConfig& c) const {
        if (!c.stack.empty()) return false;
        if (!allow_empty && !c.started) return false;
        for (int i = 0; i <= n; ++i) {
            if (m.is_accepting(c.states[static_cast<std::size_t>(i)]) != (i % 2 == 0)) return false;
        }
        return true;
    }

    // Runs the BFS; returns the accepting config id or -1.
    int run() {
        {
            MwConfig init;
            init.states.assign(static_cast<std::size_t>(n) + 1, static_cast<std::uint8_t>(m.start()));
            intern(std::move(init), -1, MwKind::EmitEmpty, 0, 0);
        }
        const int na = m.alphabet().size();
        for (int cur = 0; cur < static_cast<int>(configs.size()); ++cur) {
            if (++explored > budget.max_configurations) {
                throw BudgetExceeded("explored configurations exceed budget");
            }
            if (accepting(configs[static_cast<std::size_t>(cur)])) return cur;

            const int top_level = configs[static_cast<std::size_t>(cur)].stack.empty()
                                      ? 0
                                      : configs[static_cast<std::size_t>(cur)].stack.back().level;

            // Emit a shared marked letter into words top_level..n.
            for (int a = 0; a < na; ++a) {
                // (1) empty label
                {
                    const MwConfig& c = configs[static_cast<std::size_t>(cur)];
                    MwConfig nc = c;
                    apply_letter(nc, top_level, a);
                    intern(std::move(nc), cur, MwKind::EmitEmpty, a, 0);
                }
                // (2) nonempty label discharged immediately (never anchors a block)
                {
                    const MwConfig& c = configs[static_cast<std::size_t>(cur)];
                    std::uint32_t anchors = 0;
                    for (int i = top_level; i <= n; ++i) {
                        anchors |= std::uint32_t{1}
                                   << m.next(c.states[static_cast<std::size_t>(i)], a);
                    }
                    if (loop_exists(anchors)) {
                        MwConfig nc = c;
                        apply_letter(nc, top_level, a);
                        intern(std::move(nc), cur, MwKind::EmitLoop, a, 0);
                    }
                }
                // (3) context letter: defer the label and open the first
                // anchored block at some deeper level.
                for (int lvl = top_level + 1; lvl <= n; ++lvl) {
                    const MwConfig& c = configs[static_cast<std::size_t>(cur)];
                    MwConfig nc = c;
                    apply_letter(nc, top_level, a);
                    std::uint32_t anchors = 0;
                    for (int i = top_level; i <= n; ++i) {
                        anchors |= std::uint32_t{1} << nc.states[static_cast<std::size_t>(i)];
                    }
                    nc.stack.push_back(MwFrame{static_cast<std::uint8_t>(lvl),
                                               static_cast<std::uint8_t>(a), anchors, 0});
                    intern(std::move(nc), cur, MwKind::EmitContext, a, lvl);
                }
            }

            // Close the top block with its context copy.
            if (!configs[static_cast<std::size_t>(cur)].stack.empty()) {
                const MwConfig& c0 = configs[static_cast<std::size_t>(cur)];
                const MwFrame top = c0.stack.back();
                if ((top.f0_residue + 1) % static_cast<std::uint32_t>(d) == 0) {
                    MwConfig closed = c0;
                    closed.stack.pop_back();
                    std::uint32_t obligation = top.obligation;
                    for (int i = top.level; i <= n; ++i) {
                        State s2 = m.next(closed.states[static_cast<std::size_t>(i)], top.base);
                        closed.states[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s2);
                        obligation |= std::uint32_t{1} << s2;
                    }
                    // (4) discharge: one shared label must fix every anchor
                    if (loop_exists(obligation)) {
                        MwConfig nc = closed;
                        intern(std::move(nc), cur, MwKind::CloseDischarge, top.base, 0);
                    }
                    // (5) keep the thread open: the end copy (or the original
                    // context) anchors a further block; any level above the
                    // frame below is realizable (equal-level runs merge into
                    // one insertion).
                    int below = closed.stack.empty() ? 0 : closed.stack.back().level;
                    for (int lvl = below + 1; lvl <= n; ++lvl) {
                        MwConfig nc = closed;
                        nc.stack.push_back(MwFrame{static_cast<std::uint8_t>(lvl), top.base,
                                                   obligation, 0});
                        intern(std::move(nc), cur, MwKind::CloseRechain, top.base, lvl);
                    }
                }
            }
        }
        return -1;
    }

    void apply_letter(MwConfig& c, int level, int a) const {
        for (int i = level; i <= n; ++i) {
            c.states[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(m.next(c.states[static_cast<std::size_t>(i)], a));
        }
        if (!c.stack.empty()) {
            c.stack.back().f0_residue = (c.stack.back().f0_residue + 1) % static_cast<std::uint32_t>(d);
        }
        if (level == 0) c.started = true;
    }

    // Reconstructs a concrete chain witness by replaying the accepting path
    // and synthesizing one shared label per thread from its final loop query.
    std::optional<MarkedChainWitness> reconstruct(int accept_id, bool* truncated) const {
        std::vector<int> path;
        for (int id = accept_id; id >= 0; id = edges[static_cast<std::size_t>(id)].parent) {
            path.push_back(id);
        }
        std::reverse(path.begin(), path.end());

        struct EmittedLetter {
            int level;
            char base;
            int thread = -1;           // shared-label thread, if any
            std::uint32_t own_query = 0;  // EmitLoop anchor mask
        };
        struct Thread {
            std::uint32_t anchors = 0;
        };
        std::vector<EmittedLetter> letters;
        std::vector<Thread> threads;
        std::vector<int> frame_thread;  // parallel to the mirrored stack
        std::vector<MwConfig> trail;    // configs along the path for state lookups

        // Replay to recover letters and threads.
        MwConfig c;
        c.states.assign(static_cast<std::size_t>(n) + 1, static_cast<std::uint8_t>(m.start()));
        for (std::size_t step = 1; step < path.size(); ++step) {
            const MwEdge& e = edges[static_cast<std::size_t>(path[step])];
            int top_level = c.stack.empty() ? 0 : c.stack.back().level;
            switch (e.kind) {
                case MwKind::EmitEmpty: {
                    apply_letter(c, top_level, e.letter);
                    letters.push_back({top_level, m.alphabet().letter(e.letter), -1, 0});
                    break;
                }
                case MwKind::EmitLoop: {
                    std::uint32_t anchors = 0;
                    for (int i = top_level; i <= n; ++i) {
                        anchors |= std::uint32_t{1}
                                   << m.next(c.states[static_cast<std::size_t>(i)], e.letter);
                    }
                    apply_letter(c, top_level, e.letter);
                    letters.push_back({top_level, m.alphabet().letter(e.letter), -1, anchors});
                    break;
                }
                case MwKind::EmitContext: {
                    apply_letter(c, top_level, e.letter);
                    std::uint32_t anchors = 0;
                    for (int i = top_level; i <= n; ++i) {
                        anchors |= std::uint32_t{1} << c.states[static_cast<std::size_t>(i)];
                    }
                    threads.push_back(Thread{anchors});
                    letters.push_back({top_level, m.alphabet().letter(e.letter),
                                       static_cast<int>(threads.size()) - 1, 0});
                    c.stack.push_back(MwFrame{e.level, e.letter, anchors, 0});
                    frame_thread.push_back(static_cast<int>(threads.size()) - 1);
                    break;
                }
                case MwKind::CloseDischarge:
                case MwKind::CloseRechain: {
                    MwFrame top = c.stack.back();
                    c.stack.pop_back();
                    int tid = frame_thread.back();
                    frame_thread.pop_back();
                    std::uint32_t extra = 0;
                    for (int i = top.level; i <= n; ++i) {
                        State s2 = m.next(c.states[static_cast<std::size_t>(i)], top.base);
                        c.states[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(s2);
                        extra |= std::uint32_t{1} << s2;
                    }
                    threads[static_cast<std::size_t>(tid)].anchors |= extra;
                    letters.push_back({top.level, m.alphabet().letter(top.base), tid, 0});
                    if (e.kind == MwKind::CloseRechain) {
                        c.stack.push_back(MwFrame{e.level, top.base,
                                                  threads[static_cast<std::size_t>(tid)].anchors, 0});
                        frame_thread.push_back(tid);
                    }
                    break;
                }
            }
        }

        // Synthesize one label per thread and per own-loop letter.
        std::vector<std::string> thread_labels(threads.size());
        for (std::size_t t = 0; t < threads.size(); ++t) {
            auto label = find_simultaneous_loop(
                m, LoopQuery{anchors_of_mask(threads[t].anchors), alphabet_condition}, budget);
            if (!label) return std::nullopt;  // should not happen: existence was verified
            thread_labels[t] = *label;
        }

        MarkedChainWitness witness;
        witness.words.resize(static_cast<std::size_t>(n) + 1);
        for (const EmittedLetter& el : letters) {
            std::string label;
            if (el.thread >= 0) {
                label = thread_labels[static_cast<std::size_t>(el.thread)];
            } else if (el.own_query != 0) {
                auto own = find_simultaneous_loop(
                    m, LoopQuery{anchors_of_mask(el.own_query), alphabet_condition}, budget);
                if (!own) return std::nullopt;
                label = *own;
            }
            for (int i = el.level; i <= n; ++i) {
                witness.words[static_cast<std::size_t>(i)].letters.push_back(
                    MarkedLetter{el.base, label});
            }
        }
        std::size_t cap = static_cast<std::size_t>(budget.witness_length_factor) *
                          static_cast<std::size_t>(m.num_states()) *
                          static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(d);
        for (const MarkedWord& w : witness.words) {
            if (w.size() > cap) {
                *truncated = true;
                return std::nullopt;
            }
        }
        for (const MarkedWord& w : witness.words) {
            witness.memberships.push_back(accepts(m, unmark(w)));
        }
        return witness;
    }
};

std::uint64_t mw_config_bound(const Dfa& m, std::uint64_t d, int n) {
    // states-part * sum over stack depths of C(n, depth) * (per-frame choices)^depth
    std::uint64_t states_part = saturating_pow(static_cast<std::uint64_t>(m.num_states()), n + 1);
    std::uint64_t per_frame = saturating_mul(
        saturating_mul(static_cast<std::uint64_t>(m.alphabet().size()),
                       saturating_pow(2, m.num_states())),
        d);
    std::uint64_t stack_part = 0;
    std::uint64_t choose = 1;  // C(n, t)
    std::uint64_t frame_pow = 1;
    for (int t = 0; t <= n; ++t) {
        stack_part = saturating_add(stack_part, saturating_mul(choose, frame_pow));
        choose = choose * static_cast<std::uint64_t>(n - t) / static_cast<std::uint64_t>(t + 1);
        frame_pow = saturating_mul(frame_pow, per_frame);
    }
    return saturating_mul(states_part, stack_part);
}

}  // namespace

MwDecision decide_marked_chain(const Dfa& m, int d, int n, bool alphabet_condition,
                               bool allow_empty_words, const Budget& budget) {
    if (n < 1) throw BoundsError("chain length n must be >= 1");
    if (d < 1) throw BoundsError("modulus d must be >= 1");
    if (m.num_states() > 30) throw BudgetExceeded("state bitmasks support at most 30 states");

    std::uint64_t bound = mw_config_bound(m, static_cast<std::uint64_t>(d), n);
    if (bound > budget.max_configurations) {
        throw BudgetExceeded("configuration bound " +
                             (bound == UINT64_MAX ? std::string("overflows") : std::to_string(bound)) +
                             " exceeds budget " + std::to_string(budget.max_configurations));
    }

    MwSearch search{m, d, n, alphabet_condition, allow_empty_words, budget};
    int accept_id = search.run();
    MwDecision decision;
    decision.configurations_explored = search.explored;
    if (accept_id < 0) {
        decision.in_class = true;
        return decision;
    }
    decision.in_class = false;
    bool truncated = false;
    decision.witness = search.reconstruct(accept_id, &truncated);
    decision.witness_truncated = truncated;
    return decision;
}

MwDecision decide_sigmaB1(const Dfa& m, int n, const Budget& budget) {
    return decide_marked_chain(m, 1, n, false, false, budget);
}

MwDecision decide_sigmaD1(const Dfa& m, int d, int n, const Budget& budget) {
    if (d < 1 || d > budget.max_d) {
        throw BoundsError("d = " + std::to_string(d) + " outside [1, " + std::to_string(budget.max_d) + "]");
    }
    return decide_marked_chain(m, d, n, false, false, budget);
}

namespace {

// (|Z|^|Z|)! with saturation.
std::uint64_t exact_tau1_modulus(const Dfa& m) {
    std::uint64_t c = saturating_pow(static_cast<std::uint64_t>(m.num_states()), m.num_states());
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= c; ++i) {
        f = saturating_mul(f, i);
        if (f == UINT64_MAX) break;
    }
    return f;
}

}  // namespace

Tau1Decision decide_sigmaTau1(const Dfa& m, int n, Tau1Mode mode,
                              const std::vector<std::uint64_t>& d_list, const Budget& budget) {
    std::uint64_t exact_d = exact_tau1_modulus(m);
    Tau1Decision out;
    if (mode == Tau1Mode::Exact) {
        if (mw_config_bound(m, exact_d, n) > budget.max_configurations) {
            throw BudgetExceeded("exact mode needs d = (|Z|^|Z|)!, which exceeds the configuration budget");
        }
        MwDecision dec = decide_marked_chain(m, static_cast<int>(exact_d), n, false, false, budget);
        out.verdict = dec.in_class ? Tau1Verdict::InClass : Tau1Verdict::NotInClass;
        out.d_reached = exact_d;
        out.witness = std::move(dec.witness);
        out.witness_truncated = dec.witness_truncated;
        out.configurations_explored = dec.configurations_explored;
        return out;
    }
    if (d_list.empty()) throw BoundsError("iterative deepening needs a nonempty d list");
    for (std::uint64_t d : d_list) {
        if (d < 1) throw BoundsError("modulus d must be >= 1");
        if (mw_config_bound(m, d, n) > budget.max_configurations) {
            throw BudgetExceeded("d = " + std::to_string(d) + " exceeds the configuration budget");
        }
        MwDecision dec = decide_marked_chain(m, static_cast<int>(d), n, false, false, budget);
        out.configurations_explored += dec.configurations_explored;
        out.d_reached = d;
        if (dec.in_class) {
            out.verdict = Tau1Verdict::InClass;  // Sigma^{tau_d}_1(n) is included in Sigma^tau_1(n)
            return out;
        }
        out.witness = std::move(dec.witness);
        out.witness_truncated = dec.witness_truncated;
    }
    // All tried moduli rejected; only definitive if the exact bound was tried.
    out.verdict = (out.d_reached >= exact_d) ? Tau1Verdict::NotInClass : Tau1Verdict::Inconclusive;
    return out;
}

MwDecision decide_sigmaL2_binary(const Dfa& m, int n, const Budget& budget) {
    if (m.alphabet().size() != 2) {
        throw AlphabetArityError("the level-3/2 Boolean hierarchy decider needs |A| = 2, got |A| = " +
                                 std::to_string(m.alphabet().size()));
    }
    if (!is_aperiodic(m, budget)) {
        throw NotStarFreeError("L(M) is not star-free (aperiodic); the characterization does not apply");
    }
    return decide_marked_chain(m, 1, n, true, true, budget);
}

LevelResult min_level(const Dfa& m, const HierarchyQuery& query, int cap, const Budget& budget) {
    if (cap < 1) throw BoundsError("level cap must be >= 1");
    for (int level = 1; level <= cap; ++level) {
        bool in = false;
        switch (query.family) {
            case Family::Ckd:
                in = decide_ckd(m, CkdQuery{query.k, query.d, level, query.semantics}, budget).in_class;
                break;
            case Family::SigmaB1:
                in = decide_sigmaB1(m, level, budget).in_class;
                break;
            case Family::SigmaD1:
                in = decide_sigmaD1(m, query.d, level, budget).in_class;
                break;
            case Family::SigmaTau1:
                in = decide_sigmaTau1(m, level, Tau1Mode::IterativeDeepening, query.d_list, budget)
                         .verdict == Tau1Verdict::InClass;
                break;
            case Family::SigmaL2Binary:
                in = decide_sigmaL2_binary(m, level, budget).in_class;
                break;
        }
        if (in) return LevelResult{level};
    }
    return LevelResult{std::nullopt};
}

}  // namespace boolhier
