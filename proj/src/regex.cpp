#include "boolhier/regex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace boolhier {

namespace {

using AstPtr = std::shared_ptr<const RegexAst>;

AstPtr make_node(RegexAst::Kind kind, char letter = 0, AstPtr left = nullptr, AstPtr right = nullptr) {
    auto n = std::make_shared<RegexAst>();
    n->kind = kind;
    n->letter = letter;
    n->left = std::move(left);
    n->right = std::move(right);
    return n;
}

class Parser {
  public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    AstPtr parse() {
        AstPtr r = parse_union();
        skip_ws();
        if (pos_ != text_.size()) {
            throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "' at position " +
                              std::to_string(pos_));
        }
        return r;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    AstPtr parse_union() {
        AstPtr r = parse_concat();
        while (peek() == '|') {
            ++pos_;
            AstPtr rhs = parse_concat();
            r = make_node(RegexAst::Kind::Union, 0, std::move(r), std::move(rhs));
        }
        return r;
    }

    AstPtr parse_concat() {
        AstPtr r;
        for (;;) {
            char c = peek();
            if (c == '\0' || c == '|' || c == ')') break;
            AstPtr f = parse_repeat();
            r = r ? make_node(RegexAst::Kind::Concat, 0, std::move(r), std::move(f)) : f;
        }
        return r ? r : make_node(RegexAst::Kind::Epsilon);
    }

    AstPtr parse_repeat() {
        AstPtr r = parse_atom();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = make_node(RegexAst::Kind::Star, 0, std::move(r));
            } else if (c == '+') {
                ++pos_;
                // r+ = r r*
                r = make_node(RegexAst::Kind::Concat, 0, r, make_node(RegexAst::Kind::Star, 0, r));
            } else {
                break;
            }
        }
        return r;
    }

    AstPtr parse_atom() {
        if (at_end()) throw SyntaxError("unexpected end of pattern");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            if (peek() == ')') {  // "()" is epsilon
                ++pos_;
                return make_node(RegexAst::Kind::Epsilon);
            }
            AstPtr r = parse_union();
            if (peek() != ')') throw SyntaxError("missing ')' at position " + std::to_string(pos_));
            ++pos_;
            return r;
        }
        if (c == '{') {
            ++pos_;
            if (peek() != '}') throw SyntaxError("expected '}' after '{'");
            ++pos_;
            return make_node(RegexAst::Kind::EmptySet);
        }
        if (c == '*' || c == '+' || c == '|' || c == ')' || c == '}') {
            throw SyntaxError(std::string("unexpected '") + c + "' at position " + std::to_string(pos_));
        }
        if (!alphabet_.contains(c)) {
            throw AlphabetError(std::string("letter '") + c + "' is not in alphabet '" +
                                alphabet_.letters() + "'");
        }
        ++pos_;
        return make_node(RegexAst::Kind::Letter, c);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

// Thompson-style NFA with epsilon transitions.
struct Nfa {
    struct Trans {
        int from;
        int letter;  // -1 = epsilon, else alphabet index
        int to;
    };
    int num_states = 0;
    std::vector<Trans> transitions;
    int start = 0, accept = 0;

    int fresh() { return num_states++; }
};

// Returns (start, accept) fragment states.
std::pair<int, int> build_nfa(const RegexAst& r, const Alphabet& a, Nfa& nfa) {
    int s = nfa.fresh();
    int t = nfa.fresh();
    switch (r.kind) {
        case RegexAst::Kind::EmptySet:
            break;  // no path from s to t
        case RegexAst::Kind::Epsilon:
            nfa.transitions.push_back({s, -1, t});
            break;
        case RegexAst::Kind::Letter: {
            int li = a.index_of(r.letter);
            if (li < 0) throw AlphabetError(std::string("letter '") + r.letter + "' not in alphabet");
            nfa.transitions.push_back({s, li, t});
            break;
        }
        case RegexAst::Kind::Concat: {
            auto [ls, lt] = build_nfa(*r.left, a, nfa);
            auto [rs, rt] = build_nfa(*r.right, a, nfa);
            nfa.transitions.push_back({s, -1, ls});
            nfa.transitions.push_back({lt, -1, rs});
            nfa.transitions.push_back({rt, -1, t});
            break;
        }
        case RegexAst::Kind::Union: {
            auto [ls, lt] = build_nfa(*r.left, a, nfa);
            auto [rs, rt] = build_nfa(*r.right, a, nfa);
            nfa.transitions.push_back({s, -1, ls});
            nfa.transitions.push_back({s, -1, rs});
            nfa.transitions.push_back({lt, -1, t});
            nfa.transitions.push_back({rt, -1, t});
            break;
        }
        case RegexAst::Kind::Star: {
            auto [ls, lt] = build_nfa(*r.left, a, nfa);
            nfa.transitions.push_back({s, -1, t});
            nfa.transitions.push_back({s, -1, ls});
            nfa.transitions.push_back({lt, -1, ls});
            nfa.transitions.push_back({lt, -1, t});
            break;
        }
    }
    return {s, t};
}

}  // namespace

std::shared_ptr<const RegexAst> parse_regex(std::string_view pattern, const Alphabet& alphabet) {
    return Parser(pattern, alphabet).parse();
}

Dfa from_regex(const RegexAst& r, const Alphabet& alphabet) {
    Nfa nfa;
    auto [s, t] = build_nfa(r, alphabet, nfa);
    nfa.start = s;
    nfa.accept = t;

    // Adjacency for epsilon closure and letter moves.
    std::vector<std::vector<int>> eps(static_cast<std::size_t>(nfa.num_states));
    std::vector<std::vector<std::pair<int, int>>> moves(static_cast<std::size_t>(nfa.num_states));
    for (const auto& tr : nfa.transitions) {
        if (tr.letter < 0) {
            eps[static_cast<std::size_t>(tr.from)].push_back(tr.to);
        } else {
            moves[static_cast<std::size_t>(tr.from)].emplace_back(tr.letter, tr.to);
        }
    }
    auto closure = [&](std::set<int> states) {
        std::vector<int> work(states.begin(), states.end());
        while (!work.empty()) {
            int u = work.back();
            work.pop_back();
            for (int v : eps[static_cast<std::size_t>(u)]) {
                if (states.insert(v).second) work.push_back(v);
            }
        }
        return states;
    };

    int na = alphabet.size();
    std::map<std::set<int>, int> idx;
    std::vector<std::set<int>> subsets;
    auto intern = [&](std::set<int> ss) {
        auto [it, inserted] = idx.emplace(std::move(ss), static_cast<int>(subsets.size()));
        if (inserted) subsets.push_back(it->first);
        return it->second;
    };
    intern(closure({nfa.start}));
    std::vector<State> table;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (int li = 0; li < na; ++li) {
            std::set<int> next;
            for (int u : subsets[i]) {
                for (auto [l, v] : moves[static_cast<std::size_t>(u)]) {
                    if (l == li) next.insert(v);
                }
            }
            table.push_back(intern(closure(std::move(next))));
        }
    }
    std::vector<bool> acc(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        acc[i] = subsets[i].count(nfa.accept) > 0;
    }
    // The empty subset acts as the sink, so the subset automaton is complete.
    Dfa dfa(alphabet, static_cast<int>(subsets.size()), std::move(table), 0, std::move(acc));
    return minimize(dfa);
}

Dfa from_regex(std::string_view pattern, const Alphabet& alphabet) {
    return from_regex(*parse_regex(pattern, alphabet), alphabet);
}

}  // namespace boolhier
