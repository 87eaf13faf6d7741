#pragma once

#include <string>
#include <vector>

#include "actsets/errors.hpp"
#include "actsets/rational.hpp"

namespace actsets {

/// Finite set of states of nature. Every geometric object references exactly
/// one space; operations reject operands from different spaces.
class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> labels);
    static StateSpace of_dimension(int k);  // labels "s1".."sK"

    int dimension() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const StateSpace&, const StateSpace&) = default;

private:
    std::vector<std::string> labels_;
};

void require_same_space(const StateSpace& a, const StateSpace& b);

/// Vector of per-state utilities; the primal side of the pairing.
class UtilityAct {
public:
    UtilityAct(StateSpace space, std::vector<Rational> coords);

    const StateSpace& space() const { return space_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    int dimension() const { return static_cast<int>(coords_.size()); }

    friend bool operator==(const UtilityAct& a, const UtilityAct& b) {
        return a.space_ == b.space_ && a.coords_ == b.coords_;
    }

private:
    StateSpace space_;
    std::vector<Rational> coords_;
};

/// Strict lexicographic order on coordinates (spaces must match).
bool lex_less(const UtilityAct& a, const UtilityAct& b);

/// a >= b in every coordinate.
bool componentwise_geq(const UtilityAct& a, const UtilityAct& b);

UtilityAct act_sum(const UtilityAct& a, const UtilityAct& b);
UtilityAct act_difference(const UtilityAct& a, const UtilityAct& b);
UtilityAct act_scale(const UtilityAct& a, const Rational& factor);
UtilityAct zero_act(const StateSpace& space);

/// Probability distribution over the states; the dual side of the pairing.
/// Coordinates are nonnegative and sum to exactly one.
class Belief {
public:
    Belief(StateSpace space, std::vector<Rational> coords);
    static Belief dirac(const StateSpace& space, int state);
    static Belief uniform(const StateSpace& space);

    const StateSpace& space() const { return space_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    int dimension() const { return static_cast<int>(coords_.size()); }
    std::vector<double> to_doubles() const;

    friend bool operator==(const Belief& a, const Belief& b) {
        return a.space_ == b.space_ && a.coords_ == b.coords_;
    }

private:
    StateSpace space_;
    std::vector<Rational> coords_;
};

/// Expected utility <p, a>.
Rational dot(const Belief& p, const UtilityAct& a);

/// Convex combination t*p + (1-t)*q, exact.
Belief belief_mix(const Belief& p, const Belief& q, const Rational& t);

std::string format_act(const UtilityAct& a);
std::string format_belief(const Belief& p);

}  // namespace actsets
