#include "actsets/act_set.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>

#include "detail/geometry_kernel.hpp"

namespace actsets {

namespace {

std::atomic<int> g_dimension_cap{6};

using detail::Rat64;
using detail::to_rat64;
using detail::to_rational;

template <class S>
std::vector<detail::Vec<S>> convert_acts(const std::vector<UtilityAct>& acts);

template <>
std::vector<detail::Vec<Rational>> convert_acts(const std::vector<UtilityAct>& acts) {
    std::vector<detail::Vec<Rational>> out;
    out.reserve(acts.size());
    for (const auto& a : acts) out.push_back(a.coords());
    return out;
}

template <>
std::vector<detail::Vec<Rat64>> convert_acts(const std::vector<UtilityAct>& acts) {
    std::vector<detail::Vec<Rat64>> out;
    out.reserve(acts.size());
    for (const auto& a : acts) {
        detail::Vec<Rat64> v;
        v.reserve(a.coords().size());
        for (const auto& c : a.coords()) v.push_back(to_rat64(c));
        out.push_back(std::move(v));
    }
    return out;
}

Rational back_to_rational(const Rational& x) { return x; }
Rational back_to_rational(const Rat64& x) { return to_rational(x); }

}  // namespace

int dimension_cap() { return g_dimension_cap.load(); }

void set_dimension_cap(int cap) {
    if (cap < 1) throw DegenerateInput("dimension cap must be positive");
    g_dimension_cap.store(cap);
}

struct ActSet::FacetCache {
    std::once_flag once;
    std::vector<Facet> facets;
};

ActSet::ActSet(StateSpace space, std::vector<UtilityAct> canonical_sorted)
    : space_(std::move(space)),
      gens_(std::move(canonical_sorted)),
      cache_(std::make_shared<FacetCache>()) {}

ActSet ActSet::canonicalize(const StateSpace& space, std::vector<UtilityAct> acts) {
    if (acts.empty())
        throw DegenerateInput("canonicalize needs at least one act; use the empty sentinel");
    for (const auto& a : acts) require_same_space(space, a.space());

    std::sort(acts.begin(), acts.end(), lex_less);
    acts.erase(std::unique(acts.begin(), acts.end()), acts.end());

    std::vector<int> keep;
    try {
        keep = detail::canonical_vertex_indices(convert_acts<Rat64>(acts));
    } catch (const detail::ArithmeticOverflow&) {
        keep = detail::canonical_vertex_indices(convert_acts<Rational>(acts));
    }
    std::vector<UtilityAct> gens;
    gens.reserve(keep.size());
    for (int i : keep) gens.push_back(std::move(acts[static_cast<size_t>(i)]));
    return ActSet(space, std::move(gens));
}

ActSet ActSet::lower_orthant(const StateSpace& space) {
    return ActSet(space, {zero_act(space)});
}

ActSet ActSet::singleton(UtilityAct a) {
    StateSpace space = a.space();
    return ActSet(std::move(space), {std::move(a)});
}

Rational ActSet::support(const Belief& p) const {
    require_same_space(space_, p.space());
    Rational best = dot(p, gens_.front());
    for (size_t i = 1; i < gens_.size(); ++i) {
        Rational v = dot(p, gens_[i]);
        if (v > best) best = std::move(v);
    }
    return best;
}

namespace {

template <class S>
std::vector<Facet> facets_via(const StateSpace& space, const std::vector<UtilityAct>& gens) {
    auto raw = detail::enumerate_facets(convert_acts<S>(gens), space.dimension());
    std::vector<Facet> out;
    out.reserve(raw.size());
    for (auto& f : raw) {
        std::vector<Rational> n;
        n.reserve(f.normal.size());
        for (const auto& c : f.normal) n.push_back(back_to_rational(c));
        out.push_back(Facet{Belief(space, std::move(n)), back_to_rational(f.offset)});
    }
    return out;
}

}  // namespace

const std::vector<Facet>& ActSet::facets() const {
    if (space_.dimension() > dimension_cap())
        throw DimensionCap("facet enumeration capped at dimension " +
                           std::to_string(dimension_cap()));
    std::call_once(cache_->once, [this] {
        try {
            cache_->facets = facets_via<Rat64>(space_, gens_);
        } catch (const detail::ArithmeticOverflow&) {
            cache_->facets = facets_via<Rational>(space_, gens_);
        }
    });
    return cache_->facets;
}

bool ActSet::contains(const UtilityAct& x) const {
    require_same_space(space_, x.space());
    for (const auto& f : facets())
        if (dot(f.normal, x) > f.offset) return false;
    return true;
}

bool ActSet::contains_set(const ActSet& other) const {
    require_same_space(space_, other.space_);
    for (const auto& f : facets())
        for (const auto& g : other.gens_)
            if (dot(f.normal, g) > f.offset) return false;
    return true;
}

ActSet ActSet::translate(const UtilityAct& shift) const {
    require_same_space(space_, shift.space());
    std::vector<UtilityAct> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(act_sum(g, shift));
    return ActSet(space_, std::move(gens));  // translation preserves canonical form
}

ActSet ActSet::scale(const Rational& factor) const {
    if (factor < 0) throw DegenerateInput("scaling factor must be nonnegative");
    if (factor == 0) return lower_orthant(space_);
    std::vector<UtilityAct> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(act_scale(g, factor));
    return ActSet(space_, std::move(gens));  // positive scaling preserves canonical form
}

namespace {

template <class S>
std::optional<std::vector<UtilityAct>> vertices_via(const StateSpace& space,
                                                    const std::vector<Facet>& facets) {
    std::vector<detail::FacetK<S>> fs;
    fs.reserve(facets.size());
    for (const auto& f : facets) {
        detail::FacetK<S> fk;
        fk.normal.reserve(f.normal.coords().size());
        for (const auto& c : f.normal.coords()) {
            if constexpr (std::is_same_v<S, Rat64>)
                fk.normal.push_back(to_rat64(c));
            else
                fk.normal.push_back(c);
        }
        if constexpr (std::is_same_v<S, Rat64>)
            fk.offset = to_rat64(f.offset);
        else
            fk.offset = f.offset;
        fs.push_back(std::move(fk));
    }
    if (!detail::normals_positively_span(fs, space.dimension()))
        throw UnboundedSupport("facet normals do not positively span; support is +inf on the simplex");
    auto verts = detail::enumerate_vertices(fs, space.dimension());
    if (verts.empty()) return std::nullopt;
    std::vector<UtilityAct> gens;
    gens.reserve(verts.size());
    for (auto& v : verts) {
        std::vector<Rational> c;
        c.reserve(v.size());
        for (const auto& x : v) c.push_back(back_to_rational(x));
        gens.push_back(UtilityAct(space, std::move(c)));
    }
    return gens;
}

}  // namespace

std::optional<ActSet> vertex_enumerate(const StateSpace& space, const std::vector<Facet>& facets) {
    if (space.dimension() > dimension_cap())
        throw DimensionCap("vertex enumeration capped at dimension " +
                           std::to_string(dimension_cap()));
    for (const auto& f : facets) require_same_space(space, f.normal.space());

    std::optional<std::vector<UtilityAct>> gens;
    try {
        gens = vertices_via<Rat64>(space, facets);
    } catch (const detail::ArithmeticOverflow&) {
        gens = vertices_via<Rational>(space, facets);
    }
    if (!gens) return std::nullopt;
    return ActSet(space, std::move(*gens));
}

std::string format_act_set(const ActSet& set) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < set.generators().size(); ++i) {
        if (i) os << ",";
        os << format_act(set.generators()[i]);
    }
    os << "] + R_-";
    return os.str();
}

}  // namespace actsets
