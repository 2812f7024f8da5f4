#include "boolhier/monoid.hpp"

#include <algorithm>
#include <set>

namespace boolhier {

Transformation Transformation::then(const Transformation& g) const {
    Transformation r;
    r.map.resize(map.size());
    for (std::size_t s = 0; s < map.size(); ++s) {
        r.map[s] = g.map[static_cast<std::size_t>(map[s])];
    }
    return r;
}

Transformation identity_transformation(int num_states) {
    Transformation t;
    t.map.resize(static_cast<std::size_t>(num_states));
    for (int s = 0; s < num_states; ++s) t.map[static_cast<std::size_t>(s)] = s;
    return t;
}

Transformation letter_transformation(const Dfa& m, int letter_index) {
    Transformation t;
    t.map.resize(static_cast<std::size_t>(m.num_states()));
    for (State s = 0; s < m.num_states(); ++s) t.map[static_cast<std::size_t>(s)] = m.next(s, letter_index);
    return t;
}

std::vector<Transformation> transition_monoid(const Dfa& m, const Budget& budget) {
    std::vector<Transformation> generators;
    for (int li = 0; li < m.alphabet().size(); ++li) {
        generators.push_back(letter_transformation(m, li));
    }
    std::set<Transformation> seen;
    seen.insert(identity_transformation(m.num_states()));
    std::vector<Transformation> work(seen.begin(), seen.end());
    while (!work.empty()) {
        Transformation t = std::move(work.back());
        work.pop_back();
        for (const Transformation& g : generators) {
            Transformation u = t.then(g);
            if (seen.insert(u).second) {
                if (seen.size() > budget.max_monoid_size) {
                    throw BudgetExceeded("transition monoid exceeds " +
                                         std::to_string(budget.max_monoid_size) + " elements");
                }
                work.push_back(std::move(u));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

// t^i = t^{i+1} for some i <= bound?
bool eventually_idempotent(const Transformation& t, std::size_t bound) {
    Transformation p = t;
    for (std::size_t i = 0; i <= bound; ++i) {
        Transformation q = p.then(t);
        if (q == p) return true;
        p = std::move(q);
    }
    return false;
}

}  // namespace

bool is_aperiodic(const Dfa& m, const Budget& budget) {
    Dfa minimal = minimize(m);
    std::vector<Transformation> monoid = transition_monoid(minimal, budget);
    for (const Transformation& t : monoid) {
        if (!eventually_idempotent(t, monoid.size())) return false;
    }
    return true;
}

}  // namespace boolhier
