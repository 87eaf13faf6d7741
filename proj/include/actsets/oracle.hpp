#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "actsets/act_set.hpp"
#include "actsets/information.hpp"
#include "actsets/value_function.hpp"

// Brute-force verifiers. Independent of the fast paths they validate:
// membership goes through the LP kernel rather than the facet machinery, and
// convexity scans evaluate raw generator maxima on integer lattices. They may
// be exponential; performance is not a goal here.

namespace actsets::oracle {

/// All rational beliefs whose coordinates are multiples of 1/resolution.
class SimplexGrid {
public:
    SimplexGrid(const StateSpace& space, int resolution);
    const StateSpace& space() const { return space_; }
    int resolution() const { return resolution_; }
    const std::vector<Belief>& points() const { return points_; }

private:
    StateSpace space_;
    int resolution_;
    std::vector<Belief> points_;
};

/// Plain maximum of dot products over raw acts, no canonicalization.
Rational brute_support(const std::vector<UtilityAct>& acts, const Belief& p);

/// Every lattice act x in [lo,hi]^K with step 1/step_denominator such that
/// x + g lies in m for each generator g of l. Membership is decided by the
/// exact LP kernel.
std::vector<UtilityAct> brute_star_difference(const ActSet& m, const ActSet& l,
                                              const Rational& lo, const Rational& hi,
                                              int step_denominator);

/// Midpoint convexity of support(m) - support(l) over all grid pairs;
/// returns a violating pair when one exists. Exact.
struct MidpointViolation {
    Belief p;
    Belief q;
};
std::optional<MidpointViolation> find_convexity_violation(const ActSet& m, const ActSet& l,
                                                          const SimplexGrid& grid);
bool brute_convexity_difference(const ActSet& m, const ActSet& l, const SimplexGrid& grid);

/// Midpoint convexity of a value function over all grid pairs. Exact for
/// piecewise-linear bodies; numeric bodies compare up to their tolerance.
/// False is conclusive, true is grid-level evidence.
bool brute_convexity(const ValueFunction& f, const SimplexGrid& grid);

struct InstanceParams {
    int dimension = 2;
    int min_generators = 2;
    int max_generators = 6;
    int coordinate_bound = 9;        // integer coordinates in [-bound, bound]
    int min_signals = 2;
    int max_signals = 4;
    int posterior_denominator = 12;  // posteriors on the 1/12 grid
};

struct RandomInstance {
    ActSet first;
    ActSet second;
    InfoStructure info;
};

/// Deterministic for a fixed seed; output satisfies all type invariants.
RandomInstance random_instance(std::uint64_t seed, const InstanceParams& params);

ActSet random_act_set(const StateSpace& space, std::uint64_t seed, const InstanceParams& params);

std::vector<Belief> random_beliefs(const StateSpace& space, int count, std::uint64_t seed,
                                   int max_denominator = 40);
InfoStructure random_info_structure(const StateSpace& space, std::uint64_t seed,
                                    const InstanceParams& params);
Partition random_partition(int signal_count, std::uint64_t seed);

}  // namespace actsets::oracle
