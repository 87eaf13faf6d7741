#pragma once

#include <vector>

#include "actsets/act_set.hpp"
#include "actsets/value_function.hpp"

namespace actsets {

struct Signal {
    Rational weight;  // strictly positive
    Belief posterior;
};

/// Finitely supported distribution over posterior beliefs. Weights sum to
/// exactly one.
class InfoStructure {
public:
    InfoStructure(const StateSpace& space, std::vector<Signal> signals);
    static InfoStructure constant(Belief prior);

    const StateSpace& space() const { return space_; }
    const std::vector<Signal>& signals() const { return signals_; }
    int signal_count() const { return static_cast<int>(signals_.size()); }

    /// Weight-average of the posteriors.
    Belief prior() const;

    /// Signals with identical posteriors merged, then sorted; the canonical
    /// form used for comparisons.
    InfoStructure normalized() const;
    bool equivalent_to(const InfoStructure& other) const;

private:
    StateSpace space_;
    std::vector<Signal> signals_;
};

/// Disjoint nonempty blocks covering the signal indices {0..n-1}.
class Partition {
public:
    Partition(int signal_count, std::vector<std::vector<int>> blocks);
    static Partition trivial(int signal_count);   // one block
    static Partition discrete(int signal_count);  // singletons

    int signal_count() const { return signal_count_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

private:
    int signal_count_;
    std::vector<std::vector<int>> blocks_;
};

/// Conditional averaging over the blocks: one signal per block with the block
/// weight and the weight-average posterior. Preserves the prior exactly.
InfoStructure garble(const InfoStructure& q, const Partition& partition);

/// Exhaustive partition search is refused above this many signals.
int signal_cap();

/// True when some partition of fine's signals garbles onto coarse (compared
/// after merging identical posteriors).
bool is_refinement(const InfoStructure& fine, const InfoStructure& coarse);

/// Expected support at the posteriors minus support at the prior. Nonnegative
/// by Jensen; exact.
Rational voi(const ActSet& g, const InfoStructure& q);

/// Numeric-mode value of information for a value function body.
double voi(const ValueFunction& f, const InfoStructure& q);

/// Expected-support gap between two comparable structures; requires
/// is_refinement(fine, coarse) and equals voi(fine) - voi(coarse) exactly.
Rational relative_voi(const ActSet& g, const InfoStructure& fine, const InfoStructure& coarse);

}  // namespace actsets
