#include "actsets/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace actsets {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw DegenerateInput("state space needs at least one state");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw DegenerateInput("state labels must be distinct");
}

StateSpace StateSpace::of_dimension(int k) {
    if (k < 1) throw DegenerateInput("state space needs at least one state");
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) labels.push_back("s" + std::to_string(i));
    return StateSpace(std::move(labels));
}

void require_same_space(const StateSpace& a, const StateSpace& b) {
    if (!(a == b)) throw SpaceMismatch("operands reference different state spaces");
}

UtilityAct::UtilityAct(StateSpace space, std::vector<Rational> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != space_.dimension())
        throw DegenerateInput("utility act has " + std::to_string(coords_.size()) +
                              " coordinates, expected " + std::to_string(space_.dimension()));
}

bool lex_less(const UtilityAct& a, const UtilityAct& b) {
    require_same_space(a.space(), b.space());
    return std::lexicographical_compare(a.coords().begin(), a.coords().end(),
                                        b.coords().begin(), b.coords().end());
}

bool componentwise_geq(const UtilityAct& a, const UtilityAct& b) {
    require_same_space(a.space(), b.space());
    for (size_t i = 0; i < a.coords().size(); ++i)
        if (a.coords()[i] < b.coords()[i]) return false;
    return true;
}

UtilityAct act_sum(const UtilityAct& a, const UtilityAct& b) {
    require_same_space(a.space(), b.space());
    std::vector<Rational> c(a.coords());
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
    return UtilityAct(a.space(), std::move(c));
}

UtilityAct act_difference(const UtilityAct& a, const UtilityAct& b) {
    require_same_space(a.space(), b.space());
    std::vector<Rational> c(a.coords());
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
    return UtilityAct(a.space(), std::move(c));
}

UtilityAct act_scale(const UtilityAct& a, const Rational& factor) {
    std::vector<Rational> c(a.coords());
    for (auto& x : c) x *= factor;
    return UtilityAct(a.space(), std::move(c));
}

UtilityAct zero_act(const StateSpace& space) {
    return UtilityAct(space, std::vector<Rational>(static_cast<size_t>(space.dimension()), Rational(0)));
}

Belief::Belief(StateSpace space, std::vector<Rational> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != space_.dimension())
        throw DegenerateInput("belief has " + std::to_string(coords_.size()) +
                              " coordinates, expected " + std::to_string(space_.dimension()));
    Rational sum = 0;
    for (const auto& c : coords_) {
        if (c < 0) throw DegenerateInput("belief coordinate below zero");
        sum += c;
    }
    if (sum != 1) throw DegenerateInput("belief coordinates sum to " + format_rational(sum) + ", expected 1");
}

Belief Belief::dirac(const StateSpace& space, int state) {
    std::vector<Rational> c(static_cast<size_t>(space.dimension()), Rational(0));
    c.at(static_cast<size_t>(state)) = 1;
    return Belief(space, std::move(c));
}

Belief Belief::uniform(const StateSpace& space) {
    Rational w = Rational(1) / space.dimension();
    std::vector<Rational> c(static_cast<size_t>(space.dimension()), w);
    return Belief(space, std::move(c));
}

std::vector<double> Belief::to_doubles() const {
    std::vector<double> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(to_double(c));
    return out;
}

Rational dot(const Belief& p, const UtilityAct& a) {
    require_same_space(p.space(), a.space());
    Rational acc = 0;
    for (size_t i = 0; i < p.coords().size(); ++i) acc += p.coords()[i] * a.coords()[i];
    return acc;
}

Belief belief_mix(const Belief& p, const Belief& q, const Rational& t) {
    require_same_space(p.space(), q.space());
    if (t < 0 || t > 1) throw DegenerateInput("mix weight outside [0,1]");
    std::vector<Rational> c(p.coords().size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = t * p.coords()[i] + (1 - t) * q.coords()[i];
    return Belief(p.space(), std::move(c));
}

std::string format_act(const UtilityAct& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.coords().size(); ++i) {
        if (i) os << ",";
        os << format_rational(a.coords()[i]);
    }
    os << ")";
    return os.str();
}

std::string format_belief(const Belief& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.coords().size(); ++i) {
        if (i) os << ",";
        os << format_rational(p.coords()[i]);
    }
    os << ")";
    return os.str();
}

}  // namespace actsets
