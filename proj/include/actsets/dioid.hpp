#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "actsets/act_set.hpp"

namespace actsets {

/// Element of the dioid of comprehensive act sets: a set or the explicit empty
/// sentinel. The sentinel is the neutral element for union and absorbs fusion;
/// R_-^K is the fusion unit.
class DioidElement {
public:
    static DioidElement empty(StateSpace space) { return DioidElement(std::move(space)); }
    static DioidElement of(ActSet set) { return DioidElement(std::move(set)); }

    bool is_empty() const { return !set_.has_value(); }
    const ActSet& set() const;
    const StateSpace& space() const { return space_; }

    friend bool operator==(const DioidElement& a, const DioidElement& b) {
        if (!(a.space_ == b.space_)) return false;
        if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();
        return *a.set_ == *b.set_;
    }

private:
    explicit DioidElement(StateSpace space) : space_(std::move(space)) {}
    explicit DioidElement(ActSet set) : space_(set.space()), set_(std::move(set)) {}

    StateSpace space_;
    std::optional<ActSet> set_;
};

/// Union of decision makers: closed convex hull of the set union.
ActSet oplus(const ActSet& a, const ActSet& b);
DioidElement oplus(const DioidElement& a, const DioidElement& b);

/// Fusion of decision makers: Minkowski sum.
ActSet otimes(const ActSet& a, const ActSet& b);
DioidElement otimes(const DioidElement& a, const DioidElement& b);

/// Largest T with l + T contained in m (Minkowski erosion). Computed over m's
/// facets with offsets lowered by l's support; intersecting translates over
/// l's generators suffices: m is convex, so any convex combination of
/// generators that fits is implied, and the recession part of l fits because
/// m is comprehensive.
DioidElement star_difference(const ActSet& m, const ActSet& l);

/// kappa >= 0; the empty sentinel stays empty.
DioidElement scale(const DioidElement& g, const Rational& kappa);

struct DioidLawReport {
    int triples_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks the dioid axioms on each triple (commutativity, associativity,
/// distributivity, idempotent union, neutral/absorbing sentinel, fusion unit)
/// by canonical-form equality.
DioidLawReport check_dioid_laws(const std::vector<std::array<DioidElement, 3>>& triples);

}  // namespace actsets
