#include "actsets/comparison.hpp"

#include <algorithm>

#include "actsets/oracle.hpp"
#include "detail/geometry_kernel.hpp"

namespace actsets {

ComparisonVerdict values_more(const ActSet& m, const ActSet& l) {
    require_same_space(m.space(), l.space());
    ComparisonVerdict verdict{false, std::nullopt, star_difference(m, l), ""};
    if (verdict.erosion.is_empty()) {
        verdict.evidence = "erosion is empty: no translate of the baseline fits";
        return verdict;
    }
    ActSet rebuilt = otimes(l, verdict.erosion.set());
    const bool forward = m.contains_set(rebuilt);
    const bool backward = rebuilt.contains_set(m);
    if (forward && backward) {
        verdict.holds = true;
        verdict.witness = verdict.erosion.set();
        verdict.evidence = "fusion reconstruction: baseline + erosion equals the candidate";
    } else {
        verdict.evidence = "fusion reconstruction is strict: baseline + erosion is a proper subset";
    }
    return verdict;
}

bool convexity_probe(const ActSet& m, const ActSet& l, int trials, std::uint64_t seed) {
    require_same_space(m.space(), l.space());
    auto beliefs = oracle::random_beliefs(m.space(), 2 * trials, seed);
    for (int t = 0; t < trials; ++t) {
        const Belief& p = beliefs[static_cast<size_t>(2 * t)];
        const Belief& q = beliefs[static_cast<size_t>(2 * t + 1)];
        Belief mid = belief_mix(p, q, Rational(1, 2));
        Rational lhs = (m.support(mid) - l.support(mid)) * 2;
        Rational rhs = m.support(p) - l.support(p) + m.support(q) - l.support(q);
        if (lhs > rhs) return false;
    }
    return true;
}

bool values_more_strong(const ActSet& m, const ActSet& l,
                        const std::vector<std::pair<InfoStructure, Partition>>& suite) {
    for (const auto& [q, partition] : suite) {
        InfoStructure coarse = garble(q, partition);
        if (relative_voi(m, q, coarse) < relative_voi(l, q, coarse)) return false;
    }
    return true;
}

namespace {

using detail::Rat64;
using HalfspaceList = std::vector<std::pair<std::vector<Rational>, Rational>>;

// vertices of {p in simplex : <c,p> >= r for all (c,r)}
std::vector<Belief> polytope_vertices(const StateSpace& space, const HalfspaceList& ineqs) {
    const int k = space.dimension();
    auto run = [&](auto scalar) -> std::optional<std::vector<Belief>> {
        using S = decltype(scalar);
        std::vector<std::pair<detail::Vec<S>, S>> converted;
        try {
            for (const auto& [c, r] : ineqs) {
                detail::Vec<S> row;
                for (const auto& x : c) {
                    if constexpr (std::is_same_v<S, Rat64>)
                        row.push_back(detail::to_rat64(x));
                    else
                        row.push_back(x);
                }
                if constexpr (std::is_same_v<S, Rat64>)
                    converted.emplace_back(std::move(row), detail::to_rat64(r));
                else
                    converted.emplace_back(std::move(row), r);
            }
            auto verts = detail::polytope_in_simplex_vertices(k, converted);
            std::vector<Belief> out;
            for (const auto& v : verts) {
                std::vector<Rational> c;
                for (const auto& x : v) {
                    if constexpr (std::is_same_v<S, Rat64>)
                        c.push_back(detail::to_rational(x));
                    else
                        c.push_back(x);
                }
                out.push_back(Belief(space, std::move(c)));
            }
            return out;
        } catch (const detail::ArithmeticOverflow&) {
            return std::nullopt;
        }
    };
    if (auto fast = run(Rat64{})) return *fast;
    return *run(Rational{});
}

bool satisfies_all(const Belief& p, const HalfspaceList& ineqs) {
    for (const auto& [c, r] : ineqs) {
        Rational acc = 0;
        for (size_t i = 0; i < c.size(); ++i) acc += c[i] * p.coords()[i];
        if (acc < r) return false;
    }
    return true;
}

std::vector<Rational> coord_difference(const UtilityAct& a, const UtilityAct& b) {
    std::vector<Rational> d(a.coords());
    for (size_t i = 0; i < d.size(); ++i) d[i] -= b.coords()[i];
    return d;
}

// halfspaces of the normal cell of `owner` within gens
HalfspaceList cell_halfspaces(const std::vector<UtilityAct>& gens, const UtilityAct& owner) {
    HalfspaceList out;
    for (const auto& g : gens) {
        if (g == owner) continue;
        out.emplace_back(coord_difference(owner, g), Rational(0));
    }
    return out;
}

}  // namespace

std::vector<NormalCell> normal_cells(const ActSet& g) {
    if (g.space().dimension() > dimension_cap())
        throw DimensionCap("normal cell enumeration capped at dimension " +
                           std::to_string(dimension_cap()));
    std::vector<NormalCell> cells;
    cells.reserve(g.generators().size());
    for (const auto& owner : g.generators()) {
        NormalCell cell{owner, cell_halfspaces(g.generators(), owner), {}};
        cell.vertices = polytope_vertices(g.space(), cell.halfspaces);
        cells.push_back(std::move(cell));
    }
    return cells;
}

bool refines(const ActSet& m, const ActSet& l) {
    require_same_space(m.space(), l.space());
    for (const auto& cell : normal_cells(m)) {
        bool covered = false;
        for (const auto& owner : l.generators()) {
            HalfspaceList target = cell_halfspaces(l.generators(), owner);
            bool inside = true;
            for (const auto& v : cell.vertices)
                if (!satisfies_all(v, target)) {
                    inside = false;
                    break;
                }
            if (inside) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

namespace {

// {p : support_l(p) <= <p, act>} as halfspaces
HalfspaceList below_act_halfspaces(const std::vector<UtilityAct>& gens, const UtilityAct& act) {
    HalfspaceList out;
    for (const auto& g : gens) out.emplace_back(coord_difference(act, g), Rational(0));
    return out;
}

}  // namespace

UnionFlexibilityReport union_flexibility_check(const ActSet& l, const ActSet& g,
                                               int probe_trials, std::uint64_t probe_seed) {
    require_same_space(l.space(), g.space());
    UnionFlexibilityReport report;

    report.more_valuable = values_more(oplus(l, g), l).holds;

    // necessary: the region {support_g <= support_l} passes a midpoint probe
    {
        auto beliefs = oracle::random_beliefs(l.space(), 2 * probe_trials, probe_seed ^ 0x5851f42d4c957f2dull);
        std::vector<Belief> inside;
        for (const auto& p : beliefs)
            if (g.support(p) <= l.support(p)) inside.push_back(p);
        for (size_t i = 0; i + 1 < inside.size() && report.region_convex_probe; i += 2) {
            Belief mid = belief_mix(inside[i], inside[i + 1], Rational(1, 2));
            if (g.support(mid) > l.support(mid)) report.region_convex_probe = false;
        }
    }

    // necessary: each generator's attainment region lands inside one cell of l
    for (const auto& gen : g.generators()) {
        HalfspaceList region = cell_halfspaces(g.generators(), gen);  // support_g = <.,gen>
        for (const auto& lg : l.generators())
            region.emplace_back(coord_difference(gen, lg), Rational(0));  // support_l <= <.,gen>
        auto verts = polytope_vertices(l.space(), region);
        bool some_cell = verts.empty();  // empty region is trivially included
        for (const auto& owner : l.generators()) {
            if (some_cell) break;
            HalfspaceList cell = cell_halfspaces(l.generators(), owner);
            bool inside = true;
            for (const auto& v : verts)
                if (!satisfies_all(v, cell)) {
                    inside = false;
                    break;
                }
            some_cell = inside;
        }
        if (!some_cell) {
            report.generator_inclusions = false;
            break;
        }
    }

    // sufficient route one: g is itself a fusion of l with something
    {
        DioidElement h = star_difference(g, l);
        report.fusion_factor_found = !h.is_empty() && otimes(l, h.set()) == g;
    }

    // sufficient route two: a two-sided inclusion certificate at some
    // generator of l, decided piecewise on the common cell refinement where
    // both support functions are linear
    for (size_t li = 0; li < l.generators().size() && !report.sufficient_generator; ++li) {
        const UtilityAct& cand = l.generators()[li];
        bool ok = true;
        for (const auto& lg : l.generators()) {
            if (!ok) break;
            for (const auto& gg : g.generators()) {
                HalfspaceList piece = cell_halfspaces(l.generators(), lg);
                for (auto& hs : cell_halfspaces(g.generators(), gg)) piece.push_back(std::move(hs));

                // first inclusion: {<.,cand> <= support_g} ∩ piece inside {support_l <= support_g}
                HalfspaceList first = piece;
                first.emplace_back(coord_difference(gg, cand), Rational(0));
                for (const auto& v : polytope_vertices(l.space(), first)) {
                    Rational acc = 0;
                    const auto d = coord_difference(gg, lg);
                    for (size_t i = 0; i < d.size(); ++i) acc += d[i] * v.coords()[i];
                    if (acc < 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;

                // second inclusion: {support_l <= support_g} ∩ piece inside the cell of cand
                HalfspaceList second = piece;
                second.emplace_back(coord_difference(gg, lg), Rational(0));
                HalfspaceList cand_cell = cell_halfspaces(l.generators(), cand);
                for (const auto& v : polytope_vertices(l.space(), second))
                    if (!satisfies_all(v, cand_cell)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
        }
        if (ok) report.sufficient_generator = static_cast<int>(li);
    }

    return report;
}

LittleFlexibilityReport little_flexibility_check(const ActSet& l, const UtilityAct& a_hat) {
    require_same_space(l.space(), a_hat.space());
    LittleFlexibilityReport report;
    if (l.contains(a_hat)) {
        report.already_contained = true;
        report.holds = true;
        return report;
    }
    HalfspaceList below = below_act_halfspaces(l.generators(), a_hat);  // {support_l <= <.,a>}
    auto below_verts = polytope_vertices(l.space(), below);
    for (size_t li = 0; li < l.generators().size(); ++li) {
        const UtilityAct& gen = l.generators()[li];

        // {<.,gen> <= <.,a>} inside {support_l <= <.,a>}
        HalfspaceList gen_below{{coord_difference(a_hat, gen), Rational(0)}};
        bool ok = true;
        for (const auto& v : polytope_vertices(l.space(), gen_below))
            if (!satisfies_all(v, below)) {
                ok = false;
                break;
            }
        if (!ok) continue;

        // {support_l <= <.,a>} inside the cell of gen
        HalfspaceList cell = cell_halfspaces(l.generators(), gen);
        for (const auto& v : below_verts)
            if (!satisfies_all(v, cell)) {
                ok = false;
                break;
            }
        if (ok) report.qualifying.push_back(static_cast<int>(li));
    }
    report.holds = !report.qualifying.empty();
    return report;
}

DioidElement little_flexibility_witness(const ActSet& l, const UtilityAct& a_hat,
                                        const UtilityAct& gen) {
    require_same_space(l.space(), a_hat.space());
    if (l.contains(a_hat)) return DioidElement::of(ActSet::lower_orthant(l.space()));

    auto report = little_flexibility_check(l, a_hat);
    bool qualifies = false;
    for (int i : report.qualifying)
        if (l.generators()[static_cast<size_t>(i)] == gen) qualifies = true;
    if (!qualifies)
        throw NoQualifyingGenerator("generator fails the little-flexibility inclusions");

    ActSet witness = ActSet::canonicalize(
        l.space(), {zero_act(l.space()), act_difference(a_hat, gen)});
    ActSet lhs = oplus(l, ActSet::singleton(a_hat));
    ActSet rhs = otimes(l, witness);
    if (!(lhs == rhs))
        throw Error("little-flexibility identity failed; inclusion check is inconsistent");
    return DioidElement::of(std::move(witness));
}

}  // namespace actsets
