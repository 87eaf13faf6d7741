#include "actsets/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>

#include "detail/geometry_kernel.hpp"

namespace actsets::oracle {

namespace {

// all K-part compositions of n, lexicographic
std::vector<std::vector<int>> compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == k - 1) {
            cur[static_cast<size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace

SimplexGrid::SimplexGrid(const StateSpace& space, int resolution)
    : space_(space), resolution_(resolution) {
    if (resolution < 1) throw DegenerateInput("grid resolution must be positive");
    for (const auto& comp : compositions(resolution, space.dimension())) {
        std::vector<Rational> coords;
        coords.reserve(comp.size());
        for (int c : comp) coords.push_back(Rational(c) / resolution);
        points_.push_back(Belief(space_, std::move(coords)));
    }
}

Rational brute_support(const std::vector<UtilityAct>& acts, const Belief& p) {
    if (acts.empty()) throw DegenerateInput("brute support needs at least one act");
    Rational best = dot(p, acts.front());
    for (size_t i = 1; i < acts.size(); ++i) best = std::max(best, dot(p, acts[i]));
    return best;
}

namespace {

using detail::Rat64;

template <class S>
std::vector<detail::Vec<S>> to_vecs(const std::vector<UtilityAct>& acts) {
    std::vector<detail::Vec<S>> out;
    for (const auto& a : acts) {
        detail::Vec<S> v;
        for (const auto& c : a.coords()) {
            if constexpr (std::is_same_v<S, Rat64>)
                v.push_back(detail::to_rat64(c));
            else
                v.push_back(c);
        }
        out.push_back(std::move(v));
    }
    return out;
}

template <class S>
bool lattice_member(const std::vector<detail::Vec<S>>& gens,
                    const std::vector<detail::Vec<S>>& rays, const detail::Vec<S>& x) {
    return detail::in_convex_plus_cone(gens, rays, x);
}

}  // namespace

std::vector<UtilityAct> brute_star_difference(const ActSet& m, const ActSet& l,
                                              const Rational& lo, const Rational& hi,
                                              int step_denominator) {
    require_same_space(m.space(), l.space());
    if (step_denominator < 1) throw DegenerateInput("step denominator must be positive");
    if (hi < lo) throw DegenerateInput("empty lattice box");
    const int k = m.space().dimension();

    // integer numerator range of the lattice
    using boost::multiprecision::mpz_int;
    auto ceil_num = [&](const Rational& r) {
        mpz_int num = boost::multiprecision::numerator(r) * step_denominator;
        mpz_int den = boost::multiprecision::denominator(r);
        mpz_int q = num / den;
        if (q * den < num) q += 1;
        return q.convert_to<long long>();
    };
    auto floor_num = [&](const Rational& r) {
        mpz_int num = boost::multiprecision::numerator(r) * step_denominator;
        mpz_int den = boost::multiprecision::denominator(r);
        mpz_int q = num / den;
        if (q * den > num) q -= 1;
        return q.convert_to<long long>();
    };
    const long long first = ceil_num(lo);
    const long long last = floor_num(hi);
    if (last < first) return {};

    // componentwise necessary condition: x_c + max_g g_c <= max over m of m_c
    std::vector<Rational> cap(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) {
        Rational mmax = m.generators().front()[c];
        for (const auto& g : m.generators()) mmax = std::max(mmax, g[c]);
        Rational lmax = l.generators().front()[c];
        for (const auto& g : l.generators()) lmax = std::max(lmax, g[c]);
        cap[static_cast<size_t>(c)] = mmax - lmax;
    }

    auto mg64 = [&]() -> std::optional<std::vector<detail::Vec<Rat64>>> {
        try {
            return to_vecs<Rat64>(m.generators());
        } catch (const detail::ArithmeticOverflow&) {
            return std::nullopt;
        }
    }();
    std::vector<detail::Vec<Rat64>> rays64;
    std::vector<detail::Vec<Rational>> raysBig;
    for (int c = 0; c < k; ++c) {
        detail::Vec<Rat64> r64(static_cast<size_t>(k), Rat64(0));
        r64[static_cast<size_t>(c)] = Rat64(-1);
        rays64.push_back(std::move(r64));
        detail::Vec<Rational> rb(static_cast<size_t>(k), Rational(0));
        rb[static_cast<size_t>(c)] = Rational(-1);
        raysBig.push_back(std::move(rb));
    }
    auto mgBig = to_vecs<Rational>(m.generators());

    auto member_of_m = [&](const std::vector<Rational>& x) {
        if (mg64) {
            try {
                detail::Vec<Rat64> v;
                v.reserve(x.size());
                for (const auto& c : x) v.push_back(detail::to_rat64(c));
                return lattice_member(*mg64, rays64, v);
            } catch (const detail::ArithmeticOverflow&) {
            }
        }
        return lattice_member(mgBig, raysBig, x);
    };

    std::vector<UtilityAct> found;
    std::vector<long long> digits(static_cast<size_t>(k), first);
    for (;;) {
        std::vector<Rational> x(static_cast<size_t>(k));
        bool plausible = true;
        for (int c = 0; c < k; ++c) {
            x[static_cast<size_t>(c)] = Rational(digits[static_cast<size_t>(c)]) / step_denominator;
            if (x[static_cast<size_t>(c)] > cap[static_cast<size_t>(c)]) plausible = false;
        }
        if (plausible) {
            bool inside = true;
            for (const auto& g : l.generators()) {
                std::vector<Rational> shifted(x);
                for (int c = 0; c < k; ++c) shifted[static_cast<size_t>(c)] += g[c];
                if (!member_of_m(shifted)) {
                    inside = false;
                    break;
                }
            }
            if (inside) found.push_back(UtilityAct(m.space(), x));
        }
        int pos = k - 1;
        while (pos >= 0 && digits[static_cast<size_t>(pos)] == last) {
            digits[static_cast<size_t>(pos)] = first;
            --pos;
        }
        if (pos < 0) break;
        ++digits[static_cast<size_t>(pos)];
    }
    std::sort(found.begin(), found.end(), lex_less);
    return found;
}

namespace {

// Exact lattice evaluation of sigma_M - sigma_L scaled to integers. The scan
// works on homogeneous integer vectors: midpoint convexity at grid beliefs
// p = a/n, q = b/n is exactly F(a+b) <= F(a) + F(b).
template <class Int>
struct ScaledDifference {
    std::vector<std::vector<Int>> m;
    std::vector<std::vector<Int>> l;

    Int eval(const std::vector<int>& k) const {
        auto side = [&](const std::vector<std::vector<Int>>& gens) {
            Int best{};
            bool start = true;
            for (const auto& g : gens) {
                Int acc{0};
                for (size_t i = 0; i < g.size(); ++i)
                    acc += g[i] * static_cast<Int>(k[i]);
                if (start || acc > best) {
                    best = acc;
                    start = false;
                }
            }
            return best;
        };
        return side(m) - side(l);
    }
};

Rational common_scale(const std::vector<UtilityAct>& a, const std::vector<UtilityAct>& b) {
    using boost::multiprecision::mpz_int;
    mpz_int lcm = 1;
    auto fold = [&](const std::vector<UtilityAct>& acts) {
        for (const auto& act : acts)
            for (const auto& c : act.coords())
                lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
    };
    fold(a);
    fold(b);
    return Rational(lcm);
}

template <class Int>
std::optional<std::pair<int, int>> scan_pairs(const ScaledDifference<Int>& f,
                                              const std::vector<std::vector<int>>& pts) {
    const size_t n = pts.size();
    std::vector<Int> value(n);
    for (size_t i = 0; i < n; ++i) value[i] = f.eval(pts[i]);
    std::vector<int> mid(pts.empty() ? 0 : pts[0].size());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t c = 0; c < mid.size(); ++c) mid[c] = pts[i][c] + pts[j][c];
            if (f.eval(mid) > value[i] + value[j]) return std::make_pair(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return std::nullopt;
}

template <class Int>
std::vector<std::vector<Int>> scaled_gens(const std::vector<UtilityAct>& acts, const Rational& scale,
                                          long long magnitude_cap) {
    std::vector<std::vector<Int>> out;
    for (const auto& a : acts) {
        std::vector<Int> v;
        for (const auto& c : a.coords()) {
            Rational s = c * scale;
            if (boost::multiprecision::denominator(s) != 1) throw detail::ArithmeticOverflow{};
            auto num = boost::multiprecision::numerator(s);
            if constexpr (std::is_same_v<Int, long long>) {
                if (num > magnitude_cap || num < -magnitude_cap) throw detail::ArithmeticOverflow{};
                v.push_back(num.convert_to<long long>());
            } else {
                v.push_back(Int(num));
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::optional<MidpointViolation> find_convexity_violation(const ActSet& m, const ActSet& l,
                                                          const SimplexGrid& grid) {
    require_same_space(m.space(), l.space());
    require_same_space(m.space(), grid.space());
    const int k = m.space().dimension();
    const auto pts = compositions(grid.resolution(), k);
    const Rational scale = common_scale(m.generators(), l.generators());

    std::optional<std::pair<int, int>> hit;
    // int64 path is safe when 4 * n * max|coord| stays far from the limit
    const long long cap = std::numeric_limits<long long>::max() / (8LL * std::max(1, grid.resolution()) * k);
    try {
        ScaledDifference<long long> f{scaled_gens<long long>(m.generators(), scale, cap),
                                      scaled_gens<long long>(l.generators(), scale, cap)};
        hit = scan_pairs(f, pts);
    } catch (const detail::ArithmeticOverflow&) {
        using boost::multiprecision::mpz_int;
        ScaledDifference<mpz_int> f{scaled_gens<mpz_int>(m.generators(), scale, 0),
                                    scaled_gens<mpz_int>(l.generators(), scale, 0)};
        hit = scan_pairs(f, pts);
    }
    if (!hit) return std::nullopt;
    return MidpointViolation{grid.points()[static_cast<size_t>(hit->first)],
                             grid.points()[static_cast<size_t>(hit->second)]};
}

bool brute_convexity_difference(const ActSet& m, const ActSet& l, const SimplexGrid& grid) {
    return !find_convexity_violation(m, l, grid).has_value();
}

bool brute_convexity(const ValueFunction& f, const SimplexGrid& grid) {
    require_same_space(f.space(), grid.space());
    if (f.is_bottom()) return true;
    const int k = f.space().dimension();
    if (f.is_pwl()) {
        ActSet as = ActSet::canonicalize(f.space(), f.pieces());
        return brute_convexity_difference(as, ActSet::lower_orthant(f.space()), grid);
    }
    // numeric: precompute on the doubled grid so midpoints are lookups;
    // the first k-1 coordinates index a composition of 2n uniquely
    const int n = grid.resolution();
    const auto pts = compositions(n, k);
    const long long base = 2LL * n + 1;
    long long span = 1;
    for (int i = 0; i + 1 < k; ++i) {
        span *= base;
        if (span > (1LL << 26))
            throw DegenerateInput("grid too fine for the numeric convexity scan");
    }
    auto index = [&](const std::vector<int>& c) {
        long long idx = 0;
        for (int i = 0; i + 1 < k; ++i) idx = idx * base + c[static_cast<size_t>(i)];
        return idx;
    };
    std::vector<double> f2(static_cast<size_t>(span), 0.0);
    for (const auto& c : compositions(2 * n, k)) {
        std::vector<double> p(c.size());
        for (size_t i = 0; i < c.size(); ++i) p[i] = static_cast<double>(c[i]) / (2.0 * n);
        f2[static_cast<size_t>(index(c))] = f.eval(p);
    }
    std::vector<double> value(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<int> doubled(pts[i]);
        for (auto& d : doubled) d *= 2;
        value[i] = f2[static_cast<size_t>(index(doubled))];
    }
    std::vector<int> mid(static_cast<size_t>(k));
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            for (size_t c = 0; c < mid.size(); ++c) mid[c] = pts[i][c] + pts[j][c];
            if (f2[static_cast<size_t>(index(mid))] > 0.5 * (value[i] + value[j]) + f.tolerance())
                return false;
        }
    }
    return true;
}

namespace {

std::vector<int> random_composition(std::mt19937_64& rng, int total, int parts) {
    // uniform over compositions via sorted cut points
    std::vector<int> cuts;
    std::uniform_int_distribution<int> d(0, total);
    for (int i = 0; i < parts - 1; ++i) cuts.push_back(d(rng));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> out;
    int prev = 0;
    for (int c : cuts) {
        out.push_back(c - prev);
        prev = c;
    }
    out.push_back(total - prev);
    return out;
}

ActSet random_set(std::mt19937_64& rng, const StateSpace& space, const InstanceParams& params) {
    std::uniform_int_distribution<int> count(params.min_generators, params.max_generators);
    std::uniform_int_distribution<int> coord(-params.coordinate_bound, params.coordinate_bound);
    const int n = count(rng);
    std::vector<UtilityAct> acts;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> c;
        for (int j = 0; j < space.dimension(); ++j) c.push_back(Rational(coord(rng)));
        acts.push_back(UtilityAct(space, std::move(c)));
    }
    return ActSet::canonicalize(space, std::move(acts));
}

}  // namespace

InfoStructure random_info_structure(const StateSpace& space, std::uint64_t seed,
                                    const InstanceParams& params) {
    std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ull);
    std::uniform_int_distribution<int> count(params.min_signals, params.max_signals);
    std::uniform_int_distribution<int> w(1, 9);
    const int n = count(rng);
    std::vector<Rational> weights;
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
        weights.push_back(Rational(w(rng)));
        total += weights.back();
    }
    std::vector<Signal> signals;
    for (int i = 0; i < n; ++i) {
        auto comp = random_composition(rng, params.posterior_denominator, space.dimension());
        std::vector<Rational> c;
        for (int v : comp) c.push_back(Rational(v) / params.posterior_denominator);
        signals.push_back(Signal{weights[static_cast<size_t>(i)] / total, Belief(space, std::move(c))});
    }
    return InfoStructure(space, std::move(signals));
}

RandomInstance random_instance(std::uint64_t seed, const InstanceParams& params) {
    StateSpace space = StateSpace::of_dimension(params.dimension);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xbf58476d1ce4e5b9ull);
    ActSet first = random_set(rng, space, params);
    ActSet second = random_set(rng, space, params);
    return RandomInstance{std::move(first), std::move(second),
                          random_info_structure(space, seed, params)};
}

ActSet random_act_set(const StateSpace& space, std::uint64_t seed, const InstanceParams& params) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    return random_set(rng, space, params);
}

std::vector<Belief> random_beliefs(const StateSpace& space, int count, std::uint64_t seed,
                                   int max_denominator) {
    std::mt19937_64 rng(seed ^ 0x94d049bb133111ebull);
    std::uniform_int_distribution<int> denom(1, max_denominator);
    std::vector<Belief> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int d = denom(rng);
        auto comp = random_composition(rng, d, space.dimension());
        std::vector<Rational> c;
        for (int v : comp) c.push_back(Rational(v) / d);
        out.push_back(Belief(space, std::move(c)));
    }
    return out;
}

Partition random_partition(int signal_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xda942042e4dd58b5ull);
    std::vector<int> assign(static_cast<size_t>(signal_count), 0);
    int max_id = 0;
    for (int i = 1; i < signal_count; ++i) {
        std::uniform_int_distribution<int> d(0, max_id + 1);
        assign[static_cast<size_t>(i)] = d(rng);
        max_id = std::max(max_id, assign[static_cast<size_t>(i)]);
    }
    std::vector<std::vector<int>> blocks(static_cast<size_t>(max_id + 1));
    for (int i = 0; i < signal_count; ++i)
        blocks[static_cast<size_t>(assign[static_cast<size_t>(i)])].push_back(i);
    return Partition(signal_count, std::move(blocks));
}

}  // namespace actsets::oracle
