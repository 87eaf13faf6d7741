#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "actsets/dioid.hpp"
#include "actsets/space.hpp"

namespace actsets {

/// Convex value function over beliefs. Three bodies:
///   - piecewise-linear: p -> max over pieces of <p, piece>, pieces canonical
///     under the same reduction as act-set generators (exact mode);
///   - numeric oracle with a comparison tolerance (numeric mode);
///   - bottom: the constant minus-infinity sentinel, image of the empty set.
class ValueFunction {
public:
    using NumericFn = std::function<double(const std::vector<double>&)>;

    static ValueFunction pwl(const StateSpace& space, std::vector<UtilityAct> pieces);
    static ValueFunction bottom(const StateSpace& space);
    static ValueFunction numeric(const StateSpace& space, NumericFn fn, double tolerance = 1e-9);

    bool is_pwl() const { return kind_ == Kind::Pwl; }
    bool is_numeric() const { return kind_ == Kind::Numeric; }
    bool is_bottom() const { return kind_ == Kind::Bottom; }
    const StateSpace& space() const { return space_; }

    /// Piecewise-linear pieces (ModeMismatch for other bodies).
    const std::vector<UtilityAct>& pieces() const;
    double tolerance() const { return tolerance_; }

    /// Exact evaluation; piecewise-linear bodies only.
    Rational eval_exact(const Belief& p) const;

    /// Evaluation for any body; bottom gives -inf.
    double eval(const std::vector<double>& p) const;
    double eval(const Belief& p) const;

private:
    enum class Kind { Pwl, Numeric, Bottom };
    ValueFunction(StateSpace space, Kind kind) : space_(std::move(space)), kind_(kind) {}

    StateSpace space_;
    Kind kind_;
    std::vector<UtilityAct> pieces_;
    NumericFn fn_;
    double tolerance_ = 0.0;

    friend ValueFunction sigma(const DioidElement& g);
};

/// Set-to-function homomorphism: the restricted support function. The empty
/// sentinel maps to bottom.
ValueFunction sigma(const DioidElement& g);
ValueFunction sigma(const ActSet& g);

/// Function-to-set inverse: exact on piecewise-linear and bottom bodies
/// (ModeMismatch on numeric ones; use theta_membership for those).
DioidElement theta(const ValueFunction& f);

/// Pointwise max / sum. Exact on piecewise-linear operands; numeric operands
/// compose; mixing the two modes is rejected.
ValueFunction pointwise_max(const ValueFunction& a, const ValueFunction& b);
ValueFunction pointwise_sum(const ValueFunction& a, const ValueFunction& b);

/// p -> sum_k p_k ln p_k with the 0 ln 0 = 0 convention; numeric body.
ValueFunction negentropy(const StateSpace& space);

/// Membership oracle for the set a numeric value function corresponds to:
/// x belongs iff max over the simplex of <p,x> - f(p) is at most the
/// tolerance. The inner maximization runs projected-gradient ascent with
/// seeded restarts, so excess() never overestimates the true maximum.
class NumericMembership {
public:
    NumericMembership(ValueFunction f, std::uint64_t seed, int restarts);
    bool contains(const std::vector<double>& act) const;
    double excess(const std::vector<double>& act) const;
    const ValueFunction& function() const { return f_; }

private:
    ValueFunction f_;
    std::uint64_t seed_;
    int restarts_;
};

/// Validates convexity of the body with 10,000 seeded midpoint tests at the
/// function's tolerance (NotConvex on failure), then wraps it.
NumericMembership theta_membership(const ValueFunction& f, std::uint64_t seed = 0);

/// Positively homogeneous extension: agrees with the base on the simplex,
/// scales along rays of the nonnegative orthant, is 0 at the origin and +inf
/// outside the orthant.
class HomogeneousExtension {
public:
    explicit HomogeneousExtension(ValueFunction base);

    /// Exact evaluation (piecewise-linear base); nullopt encodes +inf.
    std::optional<Rational> eval_exact(const std::vector<Rational>& y) const;

    /// Any base; +inf is the IEEE infinity.
    double eval(const std::vector<double>& y) const;

    const ValueFunction& base() const { return base_; }

private:
    ValueFunction base_;
};

}  // namespace actsets
