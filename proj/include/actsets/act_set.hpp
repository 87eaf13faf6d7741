#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "actsets/space.hpp"

namespace actsets {

/// One supporting halfspace <normal, x> <= offset. Normals of comprehensive
/// polyhedra are nonnegative, so they normalize into the belief simplex.
struct Facet {
    Belief normal;
    Rational offset;
};

/// Facet/vertex enumeration refuse state spaces above this dimension
/// (enumeration is exponential in it). Support evaluation has no cap.
int dimension_cap();
void set_dimension_cap(int cap);

/// Closed convex comprehensive polyhedron conv(generators) + R_-^K in
/// canonical V-form: the generators are exactly the vertices, lexicographically
/// sorted, and the facet form is derived lazily and cached. Immutable.
class ActSet {
public:
    /// Canonical set for R_-^K + conv(acts). Dominated and non-vertex acts are
    /// removed; the result does not depend on the input order.
    /// Throws DegenerateInput when acts is empty (the empty set is represented
    /// by the dioid sentinel, never by an empty generator list).
    static ActSet canonicalize(const StateSpace& space, std::vector<UtilityAct> acts);

    /// R_-^K itself, generators {0}; the fusion unit.
    static ActSet lower_orthant(const StateSpace& space);

    /// {a} + R_-^K, the degenerate single-decision maker.
    static ActSet singleton(UtilityAct a);

    const StateSpace& space() const { return space_; }
    const std::vector<UtilityAct>& generators() const { return gens_; }

    /// Restricted support function: max over generators of <p, g>.
    Rational support(const Belief& p) const;

    /// Minimal facet form; computed on first use and cached (thread-safe,
    /// idempotent fill). Throws DimensionCap above the enumeration cap.
    const std::vector<Facet>& facets() const;

    /// Membership via the facet inequalities.
    bool contains(const UtilityAct& x) const;

    /// other is a subset of this set (every generator of other satisfies every
    /// facet of this).
    bool contains_set(const ActSet& other) const;

    /// Minkowski translate by a single act.
    ActSet translate(const UtilityAct& shift) const;

    /// factor > 0 scales every generator; factor == 0 collapses to R_-^K.
    ActSet scale(const Rational& factor) const;

    /// Canonical-form equality.
    friend bool operator==(const ActSet& a, const ActSet& b) {
        return a.space_ == b.space_ && a.gens_ == b.gens_;
    }

private:
    ActSet(StateSpace space, std::vector<UtilityAct> canonical_sorted);

    struct FacetCache;
    StateSpace space_;
    std::vector<UtilityAct> gens_;
    std::shared_ptr<FacetCache> cache_;

    friend std::optional<ActSet> vertex_enumerate(const StateSpace&, const std::vector<Facet>&);
};

/// Inverse of the facet form: canonical V-form of the intersection of the
/// halfspaces. Throws UnboundedSupport when the normals do not positively span
/// the nonnegative orthant (support +inf somewhere on the simplex), and
/// DimensionCap above the cap. Returns nullopt for an infeasible system; with
/// simplex-valued normals that cannot arise (no nonnegative combination of
/// normals with unit coordinate sums can vanish), so the branch exists for the
/// contract only.
std::optional<ActSet> vertex_enumerate(const StateSpace& space, const std::vector<Facet>& facets);

/// "[(0,0),(4,-1)] + R_-" style canonical rendering.
std::string format_act_set(const ActSet& set);

}  // namespace actsets
