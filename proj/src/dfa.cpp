#include "boolhier/dfa.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

namespace boolhier {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty()) {
        throw ValidationError("alphabet must contain at least one letter");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(letters_[i]))) {
            throw ValidationError("alphabet letters must be printable symbols");
        }
        for (std::size_t j = i + 1; j < letters_.size(); ++j) {
            if (letters_[i] == letters_[j]) {
                throw ValidationError(std::string("duplicate alphabet letter '") + letters_[i] + "'");
            }
        }
    }
}

int Alphabet::index_of(char c) const {
    auto pos = letters_.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

void Alphabet::validate_word(std::string_view w) const {
    for (char c : w) {
        if (!contains(c)) {
            throw AlphabetError(std::string("letter '") + c + "' is not in alphabet '" + letters_ + "'");
        }
    }
}

Dfa::Dfa(Alphabet alphabet, int num_states, std::vector<State> transitions,
         State start, std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      transitions_(std::move(transitions)),
      start_(start),
      accepting_(std::move(accepting)) {
    if (num_states_ <= 0) throw ValidationError("automaton needs at least one state");
    if (transitions_.size() != static_cast<std::size_t>(num_states_) * alphabet_.size()) {
        throw ValidationError("transition table size does not match |states| * |alphabet|");
    }
    if (start_ < 0 || start_ >= num_states_) throw ValidationError("start state out of range");
    if (accepting_.size() != static_cast<std::size_t>(num_states_)) {
        throw ValidationError("accepting vector size does not match state count");
    }
    for (State t : transitions_) {
        if (t < 0 || t >= num_states_) throw ValidationError("transition target out of range");
    }
}

State Dfa::step(State s, char c) const {
    int li = alphabet_.index_of(c);
    if (li < 0) {
        throw AlphabetError(std::string("letter '") + c + "' is not in alphabet '" +
                            alphabet_.letters() + "'");
    }
    return next(s, li);
}

State run_from(const Dfa& m, State s, std::string_view w) {
    for (char c : w) s = m.step(s, c);
    return s;
}

State run(const Dfa& m, std::string_view w) { return run_from(m, m.start(), w); }

bool accepts(const Dfa& m, std::string_view w) { return m.is_accepting(run(m, w)); }

namespace {

Dfa build_from_parts(const std::string& alphabet, int num_states, State start,
                     const std::vector<State>& accepting_states,
                     const std::vector<std::array<int, 3>>& triples,  // (from, letter idx, to)
                     bool complete_with_sink) {
    if (num_states <= 0) throw ValidationError("states must be >= 1");
    Alphabet a(alphabet);
    int n = num_states;
    std::vector<State> table(static_cast<std::size_t>(n) * a.size(), -1);
    for (const auto& t : triples) {
        auto [from, li, to] = t;
        if (from < 0 || from >= n) throw ValidationError("transition source state out of range");
        if (to < 0 || to >= n) throw ValidationError("transition target state out of range");
        State& cell = table[static_cast<std::size_t>(from) * a.size() + li];
        if (cell != -1) {
            throw ValidationError("duplicate transition for state " + std::to_string(from) +
                                  " on letter '" + std::string(1, a.letter(li)) + "'");
        }
        cell = to;
    }
    bool missing = std::find(table.begin(), table.end(), -1) != table.end();
    if (missing) {
        if (!complete_with_sink) {
            for (int s = 0; s < n; ++s) {
                for (int li = 0; li < a.size(); ++li) {
                    if (table[static_cast<std::size_t>(s) * a.size() + li] == -1) {
                        throw ValidationError("missing transition for state " + std::to_string(s) +
                                              " on letter '" + std::string(1, a.letter(li)) + "'");
                    }
                }
            }
        }
        State sink = n;
        n += 1;
        std::vector<State> wide(static_cast<std::size_t>(n) * a.size(), sink);
        for (int s = 0; s < num_states; ++s) {
            for (int li = 0; li < a.size(); ++li) {
                State t = table[static_cast<std::size_t>(s) * a.size() + li];
                wide[static_cast<std::size_t>(s) * a.size() + li] = (t == -1) ? sink : t;
            }
        }
        table = std::move(wide);
    }
    std::vector<bool> acc(static_cast<std::size_t>(n), false);
    for (State s : accepting_states) {
        if (s < 0 || s >= num_states) throw ValidationError("accepting state out of range");
        acc[static_cast<std::size_t>(s)] = true;
    }
    return Dfa(std::move(a), n, std::move(table), start, std::move(acc));
}

Dfa parse_dfa_json(std::string_view text, bool complete_with_sink) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("invalid DFA JSON: ") + e.what());
    }
    for (const char* key : {"alphabet", "states", "start", "accepting", "transitions"}) {
        if (!j.contains(key)) throw SyntaxError(std::string("DFA JSON missing key '") + key + "'");
    }
    std::string alphabet = j["alphabet"].get<std::string>();
    int num_states = j["states"].get<int>();
    State start = j["start"].get<State>();
    std::vector<State> accepting = j["accepting"].get<std::vector<State>>();
    Alphabet a(alphabet);
    std::vector<std::array<int, 3>> triples;
    for (const auto& t : j["transitions"]) {
        if (!t.is_array() || t.size() != 3) {
            throw SyntaxError("each transition must be [from, \"letter\", to]");
        }
        std::string letter = t[1].get<std::string>();
        if (letter.size() != 1) throw SyntaxError("transition letter must be a single symbol");
        int li = a.index_of(letter[0]);
        if (li < 0) throw ValidationError("transition uses letter outside the alphabet");
        triples.push_back({t[0].get<int>(), li, t[2].get<int>()});
    }
    if (start < 0 || start >= num_states) throw ValidationError("start state out of range");
    return build_from_parts(alphabet, num_states, start, accepting, triples, complete_with_sink);
}

}  // namespace

Dfa parse_dfa(std::string_view text, bool complete_with_sink) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw SyntaxError("empty DFA description");
    if (text[first] == '{') return parse_dfa_json(text, complete_with_sink);

    std::string alphabet;
    int num_states = -1;
    State start = -1;
    bool saw_start = false;
    std::vector<State> accepting;
    std::vector<std::array<int, 3>> triples;
    Alphabet a;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        auto fail = [&](const std::string& msg) -> SyntaxError {
            return SyntaxError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "alphabet:") {
            if (!(ls >> alphabet)) throw fail("expected letters after 'alphabet:'");
            a = Alphabet(alphabet);
        } else if (tok == "states:") {
            if (!(ls >> num_states)) throw fail("expected a number after 'states:'");
        } else if (tok == "start:") {
            if (!(ls >> start)) throw fail("expected a state after 'start:'");
            saw_start = true;
        } else if (tok == "accepting:") {
            State s;
            while (ls >> s) accepting.push_back(s);
        } else {
            // transition line: "<from> <letter> <to>"
            int from;
            try {
                std::size_t used = 0;
                from = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw fail("unrecognized directive '" + tok + "'");
            }
            std::string letter;
            int to;
            if (!(ls >> letter >> to)) throw fail("expected '<from> <letter> <to>'");
            if (letter.size() != 1) throw fail("transition letter must be a single symbol");
            if (alphabet.empty()) throw fail("transition before 'alphabet:' line");
            int li = a.index_of(letter[0]);
            if (li < 0) throw ValidationError("line " + std::to_string(lineno) +
                                              ": letter '" + letter + "' not in alphabet");
            std::string rest;
            if (ls >> rest) throw fail("trailing tokens after transition");
            triples.push_back({from, li, to});
        }
    }
    if (alphabet.empty()) throw SyntaxError("missing 'alphabet:' line");
    if (num_states < 0) throw SyntaxError("missing 'states:' line");
    if (!saw_start) throw SyntaxError("missing 'start:' line");
    if (start < 0 || start >= num_states) throw ValidationError("start state out of range");
    return build_from_parts(alphabet, num_states, start, accepting, triples, complete_with_sink);
}

std::string to_text(const Dfa& m) {
    std::ostringstream out;
    out << "alphabet: " << m.alphabet().letters() << "\n";
    out << "states: " << m.num_states() << "\n";
    out << "start: " << m.start() << "\n";
    out << "accepting:";
    for (State s = 0; s < m.num_states(); ++s) {
        if (m.is_accepting(s)) out << ' ' << s;
    }
    out << "\n";
    for (State s = 0; s < m.num_states(); ++s) {
        for (int li = 0; li < m.alphabet().size(); ++li) {
            out << s << ' ' << m.alphabet().letter(li) << ' ' << m.next(s, li) << "\n";
        }
    }
    return out.str();
}

namespace {

// Reachable states in BFS order (start first, letters in alphabet order).
std::vector<State> reachable_order(const Dfa& m) {
    std::vector<State> order;
    std::vector<bool> seen(static_cast<std::size_t>(m.num_states()), false);
    std::queue<State> q;
    q.push(m.start());
    seen[static_cast<std::size_t>(m.start())] = true;
    while (!q.empty()) {
        State s = q.front();
        q.pop();
        order.push_back(s);
        for (int li = 0; li < m.alphabet().size(); ++li) {
            State t = m.next(s, li);
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                q.push(t);
            }
        }
    }
    return order;
}

}  // namespace

Dfa minimize(const Dfa& m) {
    // Restrict to reachable states.
    std::vector<State> order = reachable_order(m);
    std::vector<int> idx(static_cast<std::size_t>(m.num_states()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) idx[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    int n = static_cast<int>(order.size());
    int na = m.alphabet().size();

    // Moore partition refinement.
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cls[static_cast<std::size_t>(i)] = m.is_accepting(order[static_cast<std::size_t>(i)]) ? 1 : 0;
    int num_classes = 2;
    {
        bool any_acc = false, any_rej = false;
        for (int c : cls) (c ? any_acc : any_rej) = true;
        if (!any_acc || !any_rej) {
            num_classes = 1;
            std::fill(cls.begin(), cls.end(), 0);
        }
    }
    for (;;) {
        std::map<std::vector<int>, int> sig_to_class;
        std::vector<int> next_cls(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(na) + 1);
            sig.push_back(cls[static_cast<std::size_t>(i)]);
            for (int li = 0; li < na; ++li) {
                State t = m.next(order[static_cast<std::size_t>(i)], li);
                sig.push_back(cls[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])]);
            }
            auto [it, inserted] = sig_to_class.emplace(std::move(sig), static_cast<int>(sig_to_class.size()));
            next_cls[static_cast<std::size_t>(i)] = it->second;
        }
        int next_n = static_cast<int>(sig_to_class.size());
        if (next_n == num_classes) break;
        num_classes = next_n;
        cls = std::move(next_cls);
    }

    // Build the quotient, then renumber canonically by BFS from the start.
    int qn = num_classes;
    std::vector<State> qtable(static_cast<std::size_t>(qn) * na, -1);
    std::vector<bool> qacc(static_cast<std::size_t>(qn), false);
    for (int i = 0; i < n; ++i) {
        int c = cls[static_cast<std::size_t>(i)];
        qacc[static_cast<std::size_t>(c)] = m.is_accepting(order[static_cast<std::size_t>(i)]);
        for (int li = 0; li < na; ++li) {
            State t = m.next(order[static_cast<std::size_t>(i)], li);
            qtable[static_cast<std::size_t>(c) * na + li] = cls[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
        }
    }
    State qstart = cls[static_cast<std::size_t>(idx[static_cast<std::size_t>(m.start())])];
    Dfa quotient(m.alphabet(), qn, std::move(qtable), qstart, std::move(qacc));

    std::vector<State> corder = reachable_order(quotient);  // all states reachable in the quotient
    std::vector<int> cidx(static_cast<std::size_t>(qn), -1);
    for (std::size_t i = 0; i < corder.size(); ++i) cidx[static_cast<std::size_t>(corder[i])] = static_cast<int>(i);
    int fn = static_cast<int>(corder.size());
    std::vector<State> ftable(static_cast<std::size_t>(fn) * na);
    std::vector<bool> facc(static_cast<std::size_t>(fn));
    for (int i = 0; i < fn; ++i) {
        facc[static_cast<std::size_t>(i)] = quotient.is_accepting(corder[static_cast<std::size_t>(i)]);
        for (int li = 0; li < na; ++li) {
            ftable[static_cast<std::size_t>(i) * na + li] =
                cidx[static_cast<std::size_t>(quotient.next(corder[static_cast<std::size_t>(i)], li))];
        }
    }
    return Dfa(m.alphabet(), fn, std::move(ftable), 0, std::move(facc));
}

Dfa complement(const Dfa& m) {
    std::vector<bool> acc(static_cast<std::size_t>(m.num_states()));
    for (State s = 0; s < m.num_states(); ++s) acc[static_cast<std::size_t>(s)] = !m.is_accepting(s);
    std::vector<State> table(static_cast<std::size_t>(m.num_states()) * m.alphabet().size());
    for (State s = 0; s < m.num_states(); ++s) {
        for (int li = 0; li < m.alphabet().size(); ++li) {
            table[static_cast<std::size_t>(s) * m.alphabet().size() + li] = m.next(s, li);
        }
    }
    return Dfa(m.alphabet(), m.num_states(), std::move(table), m.start(), std::move(acc));
}

Dfa product(const Dfa& m1, const Dfa& m2, const std::function<bool(bool, bool)>& combine) {
    if (m1.alphabet() != m2.alphabet()) {
        throw AlphabetMismatch("product requires identical alphabets ('" + m1.alphabet().letters() +
                               "' vs '" + m2.alphabet().letters() + "')");
    }
    int na = m1.alphabet().size();
    std::map<std::pair<State, State>, int> idx;
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State a, State b) {
        auto [it, inserted] = idx.emplace(std::make_pair(a, b), static_cast<int>(pairs.size()));
        if (inserted) pairs.emplace_back(a, b);
        return it->second;
    };
    intern(m1.start(), m2.start());
    // Expand reachable pairs in discovery (BFS) order; pairs grows as we scan.
    std::vector<State> table;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        for (int li = 0; li < na; ++li) {
            table.push_back(intern(m1.next(a, li), m2.next(b, li)));
        }
    }
    std::vector<bool> acc(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        acc[i] = combine(m1.is_accepting(pairs[i].first), m2.is_accepting(pairs[i].second));
    }
    return Dfa(m1.alphabet(), static_cast<int>(pairs.size()), std::move(table), 0, std::move(acc));
}

bool equivalent(const Dfa& m1, const Dfa& m2) {
    Dfa diff = product(m1, m2, [](bool a, bool b) { return a != b; });
    for (State s : reachable_order(diff)) {
        if (diff.is_accepting(s)) return false;
    }
    return true;
}

Dfa restrict_nonempty(const Dfa& m) {
    // Fresh start state that mirrors the original start's transitions but
    // never accepts; unchanged on every nonempty word.
    int na = m.alphabet().size();
    int n = m.num_states() + 1;
    State fresh = m.num_states();
    std::vector<State> table(static_cast<std::size_t>(n) * na);
    for (State s = 0; s < m.num_states(); ++s) {
        for (int li = 0; li < na; ++li) {
            table[static_cast<std::size_t>(s) * na + li] = m.next(s, li);
        }
    }
    for (int li = 0; li < na; ++li) {
        table[static_cast<std::size_t>(fresh) * na + li] = m.next(m.start(), li);
    }
    std::vector<bool> acc(static_cast<std::size_t>(n), false);
    for (State s = 0; s < m.num_states(); ++s) acc[static_cast<std::size_t>(s)] = m.is_accepting(s);
    return Dfa(m.alphabet(), n, std::move(table), fresh, std::move(acc));
}

bool is_minimal(const Dfa& m) { return minimize(m).num_states() == m.num_states(); }

}  // namespace boolhier
