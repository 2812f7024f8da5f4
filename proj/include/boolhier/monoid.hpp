#pragma once

#include <vector>

#include "boolhier/budget.hpp"
#include "boolhier/dfa.hpp"

namespace boolhier {

// Total map Z -> Z, represented as the vector of target states.
struct Transformation {
    std::vector<State> map;

    bool operator==(const Transformation& o) const = default;
    bool operator<(const Transformation& o) const { return map < o.map; }

    State operator()(State s) const { return map[static_cast<std::size_t>(s)]; }

    // this followed by g: (compose(g))(s) = g(this(s)).
    Transformation then(const Transformation& g) const;
};

Transformation identity_transformation(int num_states);
Transformation letter_transformation(const Dfa& m, int letter_index);

// Closure of the letter transformations under composition, including the
// identity; sorted for a canonical result.  Throws BudgetExceeded when the
// closure grows past budget.max_monoid_size.
std::vector<Transformation> transition_monoid(const Dfa& m, const Budget& budget = {});

// True iff the syntactic monoid contains no nontrivial group, i.e. every
// element t satisfies t^i = t^{i+1} for some i.  Computed on minimize(m), so
// equivalent automata always agree.
bool is_aperiodic(const Dfa& m, const Budget& budget = {});

}  // namespace boolhier
