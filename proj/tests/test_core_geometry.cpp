#include <doctest.h>

#include <algorithm>
#include <random>

#include "actsets/act_set.hpp"
#include "actsets/dioid.hpp"
#include "actsets/oracle.hpp"
#include "helpers.hpp"

using namespace actsets;
using namespace actsets::testing;

namespace {

// Independent oracle for the absorbed-point example: is `target` below some
// convex combination of a pair of the others? In two states the feasible
// mixing weights of a pair form an interval per coordinate; the point is
// absorbed iff the intervals intersect for some pair (or a single point
// dominates it).
bool pairwise_absorbed(const StateSpace& s, const std::vector<UtilityAct>& others,
                       const UtilityAct& target) {
    for (const auto& o : others)
        if (componentwise_geq(o, target)) return true;
    for (size_t i = 0; i < others.size(); ++i) {
        for (size_t j = i + 1; j < others.size(); ++j) {
            const UtilityAct& a = others[i];
            const UtilityAct& b = others[j];
            // need t in [0,1] with t*a + (1-t)*b >= target, per coordinate
            Rational lo = 0, hi = 1;
            bool empty = false;
            for (int c = 0; c < s.dimension(); ++c) {
                Rational slope = a[c] - b[c];
                Rational gap = target[c] - b[c];  // need t*slope >= gap
                if (slope == 0) {
                    if (gap > 0) empty = true;
                } else if (slope > 0) {
                    lo = std::max(lo, Rational(gap / slope));
                } else {
                    hi = std::min(hi, Rational(gap / slope));
                }
            }
            if (!empty && lo <= hi) return true;
        }
    }
    return false;
}

}  // namespace

TEST_SUITE("core-geometry") {

TEST_CASE("canonicalize keeps exactly the hull vertices of the worked menu") {
    auto s = space2();
    auto set = menu_set(s);
    REQUIRE(set.generators().size() == 3);
    CHECK(set.generators()[0] == act(s, {0, 0}));
    CHECK(set.generators()[1] == act(s, {4, -1}));
    CHECK(set.generators()[2] == act(s, {7, -5}));
}

TEST_CASE("canonicalize absorbs a dominated act") {
    auto s = space2();
    auto set = ActSet::canonicalize(s, {act(s, {0, 0}), act(s, {-1, -1})});
    REQUIRE(set.generators().size() == 1);
    CHECK(set.generators()[0] == act(s, {0, 0}));
}

TEST_CASE("canonicalize absorbs a point under the hull edge") {
    auto s = space2();
    std::vector<UtilityAct> raw{act(s, {0, 0}), act(s, {4, -1}), act(s, {7, -5}), act(s, {5, -4})};

    // oracle first: (5,-4) is below a combination of the other three
    CHECK(pairwise_absorbed(s, {act(s, {0, 0}), act(s, {4, -1}), act(s, {7, -5})}, act(s, {5, -4})));
    // explicit witness: the midpoint of (4,-1) and (7,-5) dominates it
    CHECK(componentwise_geq(act_q(s, {"11/2", "-3"}), act(s, {5, -4})));

    auto set = ActSet::canonicalize(s, raw);
    CHECK(set == menu_set(s));

    // and the vertices themselves are not absorbed by the rest
    CHECK(!pairwise_absorbed(s, {act(s, {0, 0}), act(s, {7, -5})}, act(s, {4, -1})));
}

TEST_CASE("canonicalize is independent of input order") {
    auto s = space2();
    std::vector<UtilityAct> raw{act(s, {5, -4}), act(s, {7, -5}), act(s, {0, 0}), act(s, {4, -1})};
    std::mt19937 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        std::shuffle(raw.begin(), raw.end(), rng);
        CHECK(ActSet::canonicalize(s, raw) == menu_set(s));
    }
}

TEST_CASE("canonicalize rejects empty input") {
    CHECK_THROWS_AS(ActSet::canonicalize(space2(), {}), DegenerateInput);
}

TEST_CASE("support matches the brute maximum on the worked menu") {
    auto s = space2();
    auto set = menu_set(s);
    auto p = Belief::dirac(s, 0);
    CHECK(oracle::brute_support({act(s, {0, 0}), act(s, {4, -1}), act(s, {7, -5})}, p) == 7);
    CHECK(set.support(p) == 7);
}

TEST_CASE("support of the lower orthant is zero everywhere") {
    auto s = space2();
    auto orthant = ActSet::lower_orthant(s);
    oracle::SimplexGrid grid(s, 8);
    for (const auto& p : grid.points()) CHECK(orthant.support(p) == 0);
}

TEST_CASE("support of a singleton is the pairing with its act") {
    auto s = space2();
    auto a = act(s, {3, -2});
    auto set = ActSet::singleton(a);
    oracle::SimplexGrid grid(s, 7);
    for (const auto& p : grid.points()) CHECK(set.support(p) == dot(p, a));
}

TEST_CASE("facet form of the lower orthant is the coordinate facets") {
    auto s = space2();
    auto facets = ActSet::lower_orthant(s).facets();
    REQUIRE(facets.size() == 2);
    CHECK(facets[0].normal == Belief::dirac(s, 1));
    CHECK(facets[0].offset == 0);
    CHECK(facets[1].normal == Belief::dirac(s, 0));
    CHECK(facets[1].offset == 0);
}

TEST_CASE("facet form of the worked menu") {
    auto s = space2();
    auto set = menu_set(s);
    auto facets = set.facets();
    REQUIRE(facets.size() == 4);
    // brute-force verification: each facet offset is the support at its normal
    for (const auto& f : facets) {
        CHECK(f.offset == oracle::brute_support(set.generators(), f.normal));
        Rational sum = 0;
        for (const auto& c : f.normal.coords()) sum += c;
        CHECK(sum == 1);
    }
    // the four edge/ray normals, sorted lexicographically
    CHECK(facets[0].normal == belief(s, {"0", "1"}));
    CHECK(facets[0].offset == 0);
    CHECK(facets[1].normal == belief(s, {"1/5", "4/5"}));
    CHECK(facets[1].offset == 0);
    CHECK(facets[2].normal == belief(s, {"4/7", "3/7"}));
    CHECK(facets[2].offset == parse_rational("13/7"));
    CHECK(facets[3].normal == belief(s, {"1", "0"}));
    CHECK(facets[3].offset == 7);
}

TEST_CASE("facet form of a singleton is the translated orthant") {
    auto s = space2();
    auto facets = ActSet::singleton(act(s, {3, -2})).facets();
    REQUIRE(facets.size() == 2);
    CHECK(facets[0].normal == Belief::dirac(s, 1));
    CHECK(facets[0].offset == -2);
    CHECK(facets[1].normal == Belief::dirac(s, 0));
    CHECK(facets[1].offset == 3);
}

TEST_CASE("vertex enumeration inverts the facet form") {
    auto s = space2();
    for (const ActSet& set : {ActSet::lower_orthant(s), menu_set(s), segment_set(s)}) {
        auto back = vertex_enumerate(s, set.facets());
        REQUIRE(back.has_value());
        CHECK(*back == set);
    }
}

TEST_CASE("a single halfspace has unbounded support") {
    auto s = space2();
    std::vector<Facet> facets{Facet{belief(s, {"1/2", "1/2"}), Rational(0)}};
    CHECK_THROWS_AS(vertex_enumerate(s, facets), UnboundedSupport);
}

TEST_CASE("membership and set containment") {
    auto s = space2();
    auto set = menu_set(s);
    CHECK(set.contains(act(s, {5, -4})));
    CHECK(!set.contains(act(s, {8, 0})));
    CHECK(set.contains_set(ActSet::lower_orthant(s)));
    CHECK(!ActSet::lower_orthant(s).contains_set(set));
}

TEST_CASE("dimension cap guards facet enumeration") {
    auto s = StateSpace::of_dimension(7);
    auto set = ActSet::singleton(UtilityAct(s, std::vector<Rational>(7, Rational(0))));
    CHECK_THROWS_AS(set.facets(), DimensionCap);
    CHECK(set.support(Belief::uniform(s)) == 0);  // support itself is not capped
}

TEST_CASE("mixed state spaces are rejected") {
    auto s2 = space2();
    auto other = StateSpace({"rain", "sun"});
    CHECK_THROWS_AS(menu_set(s2).support(Belief::uniform(other)), SpaceMismatch);
    CHECK_THROWS_AS(ActSet::canonicalize(s2, {act(other, {0, 0})}), SpaceMismatch);
}

TEST_CASE("property: canonicalization preserves the support function") {
    // fast paths are only trusted against the raw-act oracle; sweep both
    // dimensions with seeded instances
    for (int dim : {2, 3}) {
        oracle::InstanceParams params;
        params.dimension = dim;
        auto beliefs = oracle::random_beliefs(StateSpace::of_dimension(dim), 40, 99);
        for (std::uint64_t seed = 0; seed < 250; ++seed) {
            auto inst = oracle::random_instance(seed, params);
            // pad the raw list with a point strictly inside the set
            auto raw = inst.first.generators();
            std::vector<Rational> inside(raw.front().coords());
            for (auto& c : inside) c -= 1;
            raw.push_back(UtilityAct(inst.first.space(), std::move(inside)));
            auto set = ActSet::canonicalize(inst.first.space(), raw);
            for (const auto& p : beliefs)
                CHECK(set.support(p) == oracle::brute_support(raw, p));
        }
    }
}

TEST_CASE("property: support is convex along belief mixtures") {
    oracle::InstanceParams params;
    params.dimension = 3;
    auto s = StateSpace::of_dimension(3);
    auto beliefs = oracle::random_beliefs(s, 60, 4242);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto set = oracle::random_act_set(s, seed, params);
        for (size_t i = 0; i + 1 < beliefs.size(); i += 2) {
            Rational lambda(1, 3);
            Belief mid = belief_mix(beliefs[i], beliefs[i + 1], lambda);
            CHECK(set.support(mid) <=
                  lambda * set.support(beliefs[i]) + (1 - lambda) * set.support(beliefs[i + 1]));
        }
    }
}

TEST_CASE("property: facet/vertex forms round-trip on seeded instances") {
    for (int dim : {2, 3}) {
        oracle::InstanceParams params;
        params.dimension = dim;
        for (std::uint64_t seed = 0; seed < 250; ++seed) {
            auto set = oracle::random_act_set(StateSpace::of_dimension(dim), seed, params);
            auto back = vertex_enumerate(set.space(), set.facets());
            REQUIRE(back.has_value());
            CHECK(*back == set);
            for (const auto& f : set.facets()) {
                Rational sum = 0;
                for (const auto& c : f.normal.coords()) sum += c;
                CHECK(sum == 1);
                CHECK(f.offset == set.support(f.normal));
            }
        }
    }
}

TEST_CASE("property: mutual containment is canonical equality") {
    oracle::InstanceParams params;
    params.dimension = 2;
    auto s = StateSpace::of_dimension(2);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto a = oracle::random_act_set(s, seed, params);
        auto b = oracle::random_act_set(s, seed + 1, params);
        bool both = a.contains_set(b) && b.contains_set(a);
        CHECK(both == (a == b));
        CHECK(a.contains_set(a));
    }
}

}  // TEST_SUITE

#include <thread>

TEST_SUITE("core-geometry") {

TEST_CASE("facet caching is safe under concurrent readers") {
    auto s = space3();
    oracle::InstanceParams params;
    params.dimension = 3;
    auto set = oracle::random_act_set(s, 404, params);
    std::vector<std::thread> readers;
    std::vector<size_t> counts(8, 0);
    for (int t = 0; t < 8; ++t)
        readers.emplace_back([&, t] { counts[static_cast<size_t>(t)] = set.facets().size(); });
    for (auto& th : readers) th.join();
    for (size_t c : counts) CHECK(c == set.facets().size());
}

TEST_CASE("coordinates beyond the word-size kernels fall back to big rationals") {
    auto s = space2();
    const Rational huge = parse_rational("123456789012345678901234567890");
    std::vector<UtilityAct> acts{
        UtilityAct(s, {huge, Rational(0)}),
        UtilityAct(s, {Rational(0), huge}),
        UtilityAct(s, {huge / 2, huge / 2}),  // on the segment, absorbed
        UtilityAct(s, {-huge, -huge}),
    };
    auto set = ActSet::canonicalize(s, acts);
    REQUIRE(set.generators().size() == 2);
    CHECK(set.support(Belief::uniform(s)) == huge / 2);
    CHECK(set.facets().size() == 3);
    auto back = vertex_enumerate(s, set.facets());
    REQUIRE(back.has_value());
    CHECK(*back == set);
    auto eroded = star_difference(set, set);
    REQUIRE(!eroded.is_empty());
    CHECK(otimes(set, eroded.set()) == set);
}

}  // TEST_SUITE
