#include "actsets/value_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace actsets {

ValueFunction ValueFunction::pwl(const StateSpace& space, std::vector<UtilityAct> pieces) {
    // same reduction as act-set generators
    ActSet canonical = ActSet::canonicalize(space, std::move(pieces));
    ValueFunction f(space, Kind::Pwl);
    f.pieces_ = canonical.generators();
    return f;
}

ValueFunction ValueFunction::bottom(const StateSpace& space) {
    return ValueFunction(space, Kind::Bottom);
}

ValueFunction ValueFunction::numeric(const StateSpace& space, NumericFn fn, double tolerance) {
    if (!fn) throw DegenerateInput("numeric value function needs an evaluator");
    if (tolerance <= 0) throw DegenerateInput("numeric tolerance must be positive");
    ValueFunction f(space, Kind::Numeric);
    f.fn_ = std::move(fn);
    f.tolerance_ = tolerance;
    return f;
}

const std::vector<UtilityAct>& ValueFunction::pieces() const {
    if (kind_ != Kind::Pwl) throw ModeMismatch("value function has no piecewise-linear pieces");
    return pieces_;
}

Rational ValueFunction::eval_exact(const Belief& p) const {
    if (kind_ != Kind::Pwl)
        throw ModeMismatch("exact evaluation needs a piecewise-linear value function");
    require_same_space(space_, p.space());
    Rational best = dot(p, pieces_.front());
    for (size_t i = 1; i < pieces_.size(); ++i) {
        Rational v = dot(p, pieces_[i]);
        if (v > best) best = std::move(v);
    }
    return best;
}

double ValueFunction::eval(const std::vector<double>& p) const {
    if (static_cast<int>(p.size()) != space_.dimension())
        throw DegenerateInput("belief vector has the wrong dimension");
    switch (kind_) {
        case Kind::Bottom:
            return -std::numeric_limits<double>::infinity();
        case Kind::Numeric:
            return fn_(p);
        case Kind::Pwl: {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& piece : pieces_) {
                double v = 0;
                for (size_t i = 0; i < p.size(); ++i) v += p[i] * to_double(piece[static_cast<int>(i)]);
                best = std::max(best, v);
            }
            return best;
        }
    }
    return 0;  // unreachable
}

double ValueFunction::eval(const Belief& p) const {
    require_same_space(space_, p.space());
    if (kind_ == Kind::Pwl) return to_double(eval_exact(p));
    return eval(p.to_doubles());
}

ValueFunction sigma(const DioidElement& g) {
    if (g.is_empty()) return ValueFunction::bottom(g.space());
    ValueFunction f(g.space(), ValueFunction::Kind::Pwl);
    f.pieces_ = g.set().generators();  // already canonical
    return f;
}

ValueFunction sigma(const ActSet& g) { return sigma(DioidElement::of(g)); }

DioidElement theta(const ValueFunction& f) {
    if (f.is_bottom()) return DioidElement::empty(f.space());
    if (f.is_numeric())
        throw ModeMismatch("theta on a numeric oracle has no finite representation; "
                           "use theta_membership");
    return DioidElement::of(ActSet::canonicalize(f.space(), f.pieces()));
}

ValueFunction pointwise_max(const ValueFunction& a, const ValueFunction& b) {
    require_same_space(a.space(), b.space());
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
    if (a.is_pwl() && b.is_pwl()) {
        std::vector<UtilityAct> pieces = a.pieces();
        pieces.insert(pieces.end(), b.pieces().begin(), b.pieces().end());
        return ValueFunction::pwl(a.space(), std::move(pieces));
    }
    if (a.is_numeric() && b.is_numeric()) {
        auto fa = a, fb = b;
        return ValueFunction::numeric(
            a.space(),
            [fa, fb](const std::vector<double>& p) { return std::max(fa.eval(p), fb.eval(p)); },
            std::max(a.tolerance(), b.tolerance()));
    }
    throw ModeMismatch("pointwise max across exact and numeric modes is rejected");
}

ValueFunction pointwise_sum(const ValueFunction& a, const ValueFunction& b) {
    require_same_space(a.space(), b.space());
    if (a.is_bottom() || b.is_bottom()) return ValueFunction::bottom(a.space());
    if (a.is_pwl() && b.is_pwl()) {
        std::vector<UtilityAct> pieces;
        pieces.reserve(a.pieces().size() * b.pieces().size());
        for (const auto& x : a.pieces())
            for (const auto& y : b.pieces()) pieces.push_back(act_sum(x, y));
        return ValueFunction::pwl(a.space(), std::move(pieces));
    }
    if (a.is_numeric() && b.is_numeric()) {
        auto fa = a, fb = b;
        return ValueFunction::numeric(
            a.space(),
            [fa, fb](const std::vector<double>& p) { return fa.eval(p) + fb.eval(p); },
            std::max(a.tolerance(), b.tolerance()));
    }
    throw ModeMismatch("pointwise sum across exact and numeric modes is rejected");
}

ValueFunction negentropy(const StateSpace& space) {
    return ValueFunction::numeric(
        space,
        [](const std::vector<double>& p) {
            double acc = 0;
            for (double x : p)
                if (x > 0) acc += x * std::log(x);
            return acc;
        },
        1e-9);
}

namespace {

// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(std::vector<double> v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cum = 0;
    double theta = 0;
    int rho = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        cum += u[i];
        double t = (cum - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0) {
            rho = static_cast<int>(i + 1);
            theta = t;
        }
    }
    if (rho == 0) theta = (cum - 1.0) / static_cast<double>(u.size());
    for (auto& x : v) x = std::max(0.0, x - theta);
    double s = 0;
    for (double x : v) s += x;
    if (s > 0)
        for (auto& x : v) x /= s;  // guard against drift
    return v;
}

std::vector<double> numeric_gradient(const ValueFunction& f, const std::vector<double>& p) {
    const double h = 1e-7;
    std::vector<double> g(p.size());
    std::vector<double> lo = p, hi = p;
    for (size_t i = 0; i < p.size(); ++i) {
        double step_lo = std::min(h, p[i] * 0.5);  // stay inside the orthant
        lo[i] = p[i] - step_lo;
        hi[i] = p[i] + h;
        g[i] = (f.eval(hi) - f.eval(lo)) / (h + step_lo);
        lo[i] = p[i];
        hi[i] = p[i];
    }
    return g;
}

}  // namespace

NumericMembership::NumericMembership(ValueFunction f, std::uint64_t seed, int restarts)
    : f_(std::move(f)), seed_(seed), restarts_(restarts) {
    if (f_.is_bottom()) throw DegenerateInput("bottom has no membership oracle");
    if (restarts_ < 1) throw DegenerateInput("membership oracle needs at least one restart");
}

double NumericMembership::excess(const std::vector<double>& act) const {
    const int k = f_.space().dimension();
    if (static_cast<int>(act.size()) != k) throw DegenerateInput("act vector has the wrong dimension");

    std::mt19937_64 rng(seed_);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    auto objective = [&](const std::vector<double>& p) {
        double v = -f_.eval(p);
        for (int i = 0; i < k; ++i) v += p[static_cast<size_t>(i)] * act[static_cast<size_t>(i)];
        return v;
    };

    double best = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts_; ++r) {
        std::vector<double> p(static_cast<size_t>(k));
        if (r < k) {
            p.assign(static_cast<size_t>(k), 1e-9);
            p[static_cast<size_t>(r)] = 1.0;
            p = project_to_simplex(std::move(p));
        } else if (r == k) {
            p.assign(static_cast<size_t>(k), 1.0 / k);
        } else {
            double s = 0;
            for (auto& x : p) {
                x = -std::log(std::max(unif(rng), 1e-12));
                s += x;
            }
            for (auto& x : p) x /= s;
        }
        for (int it = 0; it < 400; ++it) {
            std::vector<double> grad = numeric_gradient(f_, p);
            double step = 0.5 / (1.0 + it * 0.25);
            for (int i = 0; i < k; ++i)
                p[static_cast<size_t>(i)] += step * (act[static_cast<size_t>(i)] - grad[static_cast<size_t>(i)]);
            p = project_to_simplex(std::move(p));
        }
        best = std::max(best, objective(p));
    }
    return best;
}

bool NumericMembership::contains(const std::vector<double>& act) const {
    double tol = f_.is_numeric() ? f_.tolerance() : 1e-9;
    return excess(act) <= tol;
}

NumericMembership theta_membership(const ValueFunction& f, std::uint64_t seed) {
    if (f.is_bottom()) throw DegenerateInput("bottom has no membership oracle");
    if (f.is_numeric()) {
        // midpoint validation; theta is meaningless on non-convex input
        const int k = f.space().dimension();
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        auto sample = [&] {
            std::vector<double> p(static_cast<size_t>(k));
            double s = 0;
            for (auto& x : p) {
                x = -std::log(std::max(unif(rng), 1e-12));
                s += x;
            }
            for (auto& x : p) x /= s;
            return p;
        };
        for (int t = 0; t < 10000; ++t) {
            auto p = sample();
            auto q = sample();
            std::vector<double> mid(p.size());
            for (size_t i = 0; i < p.size(); ++i) mid[i] = 0.5 * (p[i] + q[i]);
            if (f.eval(mid) > 0.5 * (f.eval(p) + f.eval(q)) + f.tolerance())
                throw NotConvex("numeric oracle failed the midpoint convexity validation");
        }
    }
    return NumericMembership(f, seed, 50);
}

HomogeneousExtension::HomogeneousExtension(ValueFunction base) : base_(std::move(base)) {
    if (base_.is_bottom())
        throw DegenerateInput("the bottom function has no homogeneous extension here");
}

std::optional<Rational> HomogeneousExtension::eval_exact(const std::vector<Rational>& y) const {
    if (static_cast<int>(y.size()) != base_.space().dimension())
        throw DegenerateInput("vector has the wrong dimension");
    Rational total = 0;
    bool outside = false;
    for (const auto& c : y) {
        if (c < 0) outside = true;
        total += c;
    }
    if (outside) return std::nullopt;  // +inf off the nonnegative orthant
    if (total == 0) return Rational(0);
    std::vector<Rational> scaled(y);
    for (auto& c : scaled) c /= total;
    return total * base_.eval_exact(Belief(base_.space(), std::move(scaled)));
}

double HomogeneousExtension::eval(const std::vector<double>& y) const {
    if (static_cast<int>(y.size()) != base_.space().dimension())
        throw DegenerateInput("vector has the wrong dimension");
    double total = 0;
    for (double c : y) {
        if (c < 0) return std::numeric_limits<double>::infinity();
        total += c;
    }
    if (total == 0) return 0.0;
    std::vector<double> scaled(y);
    for (auto& c : scaled) c /= total;
    return total * base_.eval(scaled);
}

}  // namespace actsets
