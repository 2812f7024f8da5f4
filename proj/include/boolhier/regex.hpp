#pragma once

#include <memory>
#include <string_view>

#include "boolhier/dfa.hpp"

namespace boolhier {

// Regular-expression syntax tree.  Nodes: empty set, epsilon, single letter,
// concatenation, union, Kleene star.
struct RegexAst {
    enum class Kind { EmptySet, Epsilon, Letter, Concat, Union, Star };
    Kind kind;
    char letter = 0;  // Kind::Letter only
    std::shared_ptr<const RegexAst> left, right;
};

// Grammar: literals, '|', juxtaposition, '*', '+' (one or more), '()' for
// grouping, '{}' for the empty set, '()' (empty group) for epsilon.
// Whitespace between tokens is ignored.  Letters must belong to `alphabet`.
std::shared_ptr<const RegexAst> parse_regex(std::string_view pattern, const Alphabet& alphabet);

// Minimal complete DFA for L(r) over the given alphabet (Thompson NFA,
// subset construction, completion, minimization).
Dfa from_regex(const RegexAst& r, const Alphabet& alphabet);
Dfa from_regex(std::string_view pattern, const Alphabet& alphabet);

}  // namespace boolhier
