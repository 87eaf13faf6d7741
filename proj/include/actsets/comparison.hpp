#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actsets/dioid.hpp"
#include "actsets/information.hpp"

namespace actsets {

/// Outcome of the "values information more" decision. When holds is true the
/// witness T satisfies l ⊗ T = m exactly; the erosion m ∼ l is reported either
/// way as the diagnostic.
struct ComparisonVerdict {
    bool holds = false;
    std::optional<ActSet> witness;
    DioidElement erosion;
    std::string evidence;
};

/// Exact decision: m values information more than l iff the star-difference
/// reconstructs m, that is l ⊗ (m ∼ l) = m. The witness is the erosion.
ComparisonVerdict values_more(const ActSet& m, const ActSet& l);

/// Midpoint-convexity falsifier for support(m) - support(l) at seeded random
/// rational belief pairs, exact comparisons. False is conclusive, true is
/// evidence only.
bool convexity_probe(const ActSet& m, const ActSet& l, int trials, std::uint64_t seed = 0);

/// Checks the relative-value dominance inequality on every (structure,
/// partition) pair of the suite.
bool values_more_strong(const ActSet& m, const ActSet& l,
                        const std::vector<std::pair<InfoStructure, Partition>>& suite);

/// Region of the simplex where one generator attains the support function.
/// halfspaces are the <owner - other, p> >= 0 constraints; the simplex
/// constraints are implicit. Cells cover the simplex and are full-dimensional
/// for canonical generators.
struct NormalCell {
    UtilityAct owner;
    std::vector<std::pair<std::vector<Rational>, Rational>> halfspaces;
    std::vector<Belief> vertices;
};
std::vector<NormalCell> normal_cells(const ActSet& g);

/// Every cell of m is contained in some cell of l (cell containment decided by
/// the vertex test).
bool refines(const ActSet& m, const ActSet& l);

/// Union-flexibility analysis of l ⊕ g versus l.
struct UnionFlexibilityReport {
    /// Necessary and sufficient: the union values information more
    /// (decided exactly through values_more(l ⊕ g, l)).
    bool more_valuable = false;
    /// Necessary: {support(g) <= support(l)} convex, sampled midpoints
    /// (false conclusive).
    bool region_convex_probe = true;
    /// Necessary: per generator of g, the attainment region maps into a single
    /// cell of l. Exact polytope inclusion.
    bool generator_inclusions = true;
    /// Sufficient route one: g = l ⊗ h for some h.
    bool fusion_factor_found = false;
    /// Sufficient route two: some generator of l satisfies the two-sided
    /// inclusion condition; index into l's generators.
    std::optional<int> sufficient_generator;
};
UnionFlexibilityReport union_flexibility_check(const ActSet& l, const ActSet& g,
                                               int probe_trials = 2000,
                                               std::uint64_t probe_seed = 0);

/// Little-flexibility analysis of l ⊕ {a} versus l.
struct LittleFlexibilityReport {
    bool already_contained = false;  // a in l, so the union is l itself
    /// Generators of l passing both inclusions (indices into l's generators).
    std::vector<int> qualifying;
    bool holds = false;
};
LittleFlexibilityReport little_flexibility_check(const ActSet& l, const UtilityAct& a_hat);

/// Witness R_-^K ⊗ [0, a - gen] for a qualifying generator; checks the exact
/// identity l ⊕ ({a} + R_-^K) = l ⊗ witness before returning. Throws
/// NoQualifyingGenerator when the inclusions fail for gen.
DioidElement little_flexibility_witness(const ActSet& l, const UtilityAct& a_hat,
                                        const UtilityAct& gen);

}  // namespace actsets
