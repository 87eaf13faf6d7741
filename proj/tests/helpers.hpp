#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "actsets/act_set.hpp"
#include "actsets/information.hpp"

namespace actsets::testing {

inline StateSpace space2() { return StateSpace::of_dimension(2); }
inline StateSpace space3() { return StateSpace::of_dimension(3); }

inline UtilityAct act(const StateSpace& s, std::initializer_list<long long> cs) {
    std::vector<Rational> v;
    for (long long c : cs) v.push_back(Rational(c));
    return UtilityAct(s, std::move(v));
}

inline UtilityAct act_q(const StateSpace& s, std::initializer_list<const char*> cs) {
    std::vector<Rational> v;
    for (const char* c : cs) v.push_back(parse_rational(c));
    return UtilityAct(s, std::move(v));
}

inline Belief belief(const StateSpace& s, std::initializer_list<const char*> cs) {
    std::vector<Rational> v;
    for (const char* c : cs) v.push_back(parse_rational(c));
    return Belief(s, std::move(v));
}

// The worked two-state menu: hull vertices (0,0), (4,-1), (7,-5).
inline ActSet menu_set(const StateSpace& s) {
    return ActSet::canonicalize(s, {act(s, {0, 0}), act(s, {4, -1}), act(s, {7, -5})});
}

// The extra act extending the menu, and the segment tying the two together.
inline UtilityAct extra_act(const StateSpace& s) { return act(s, {8, -8}); }
inline ActSet segment_set(const StateSpace& s) {
    return ActSet::canonicalize(s, {act(s, {0, 0}), act(s, {1, -3})});
}

inline InfoStructure two_dirac_structure(const StateSpace& s) {
    return InfoStructure(s, {Signal{Rational(1, 2), Belief::dirac(s, 0)},
                             Signal{Rational(1, 2), Belief::dirac(s, 1)}});
}

}  // namespace actsets::testing
