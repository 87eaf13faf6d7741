#include <doctest.h>

#include "actsets/information.hpp"
#include "actsets/oracle.hpp"
#include "helpers.hpp"

using namespace actsets;
using namespace actsets::testing;

TEST_SUITE("information") {

TEST_CASE("prior of the two-dirac structure is uniform") {
    auto s = space2();
    CHECK(two_dirac_structure(s).prior() == Belief::uniform(s));
}

TEST_CASE("prior of a constant structure is its single posterior") {
    auto s = space2();
    auto p = belief(s, {"1/3", "2/3"});
    CHECK(InfoStructure::constant(p).prior() == p);
}

TEST_CASE("prior averages exactly") {
    auto s = space2();
    InfoStructure q(s, {Signal{parse_rational("1/4"), Belief::dirac(s, 0)},
                        Signal{parse_rational("3/4"), belief(s, {"1/3", "2/3"})}});
    CHECK(q.prior() == Belief::uniform(s));
}

TEST_CASE("weights must be positive and sum to one") {
    auto s = space2();
    CHECK_THROWS_AS(InfoStructure(s, {Signal{parse_rational("9/10"), Belief::uniform(s)}}),
                    DegenerateInput);
    CHECK_THROWS_AS(InfoStructure(s, {Signal{Rational(0), Belief::uniform(s)},
                                      Signal{Rational(1), Belief::uniform(s)}}),
                    DegenerateInput);
}

TEST_CASE("garbling with the trivial partition collapses to the prior") {
    auto s = space2();
    auto q = two_dirac_structure(s);
    auto collapsed = garble(q, Partition::trivial(2));
    REQUIRE(collapsed.signal_count() == 1);
    CHECK(collapsed.signals()[0].weight == 1);
    CHECK(collapsed.signals()[0].posterior == Belief::uniform(s));
}

TEST_CASE("garbling with the discrete partition changes nothing") {
    auto s = space2();
    auto q = two_dirac_structure(s);
    CHECK(garble(q, Partition::discrete(2)).equivalent_to(q));
}

TEST_CASE("garbling a three-signal structure by a two-block partition") {
    auto s = space2();
    InfoStructure q(s, {Signal{parse_rational("1/2"), Belief::dirac(s, 0)},
                        Signal{parse_rational("1/4"), belief(s, {"1/3", "2/3"})},
                        Signal{parse_rational("1/4"), Belief::dirac(s, 1)}});
    auto g = garble(q, Partition(3, {{0, 1}, {2}}));
    REQUIRE(g.signal_count() == 2);
    // block {0,1}: weight 3/4, posterior (1/2*(1,0) + 1/4*(1/3,2/3)) / (3/4) = (7/9, 2/9)
    CHECK(g.signals()[0].weight == parse_rational("3/4"));
    CHECK(g.signals()[0].posterior == belief(s, {"7/9", "2/9"}));
    CHECK(g.signals()[1].weight == parse_rational("1/4"));
    CHECK(g.signals()[1].posterior == Belief::dirac(s, 1));
    CHECK(g.prior() == q.prior());
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(Partition(3, {{0, 1}}), PartitionError);
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), PartitionError);
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), PartitionError);
    CHECK_THROWS_AS(Partition(2, {{0, 5}}), PartitionError);
}

TEST_CASE("every structure refines its prior and itself") {
    auto s = space2();
    auto q = two_dirac_structure(s);
    CHECK(is_refinement(q, InfoStructure::constant(q.prior())));
    CHECK(is_refinement(q, q));
}

TEST_CASE("two diracs do not refine a strictly interior pair") {
    auto s = space2();
    auto q = two_dirac_structure(s);
    InfoStructure blurred(s, {Signal{parse_rational("1/2"), belief(s, {"3/4", "1/4"})},
                              Signal{parse_rational("1/2"), belief(s, {"1/4", "3/4"})}});
    CHECK(!is_refinement(q, blurred));
    CHECK(!is_refinement(blurred, q));
}

TEST_CASE("the signal cap guards the partition search") {
    auto s = space2();
    std::vector<Signal> many;
    for (int i = 0; i < 9; ++i) many.push_back(Signal{Rational(1, 9), Belief::uniform(s)});
    InfoStructure q(s, many);
    CHECK_THROWS_AS(is_refinement(q, q), SignalCap);
}

TEST_CASE("value of information of the menu under the two diracs") {
    auto s = space2();
    // expected support (7 + 0)/2 minus support 3/2 at the uniform prior
    CHECK(voi(menu_set(s), two_dirac_structure(s)) == 2);
}

TEST_CASE("constant structures and singleton makers have zero value") {
    auto s = space2();
    CHECK(voi(menu_set(s), InfoStructure::constant(belief(s, {"2/5", "3/5"}))) == 0);
    auto single = ActSet::singleton(act(s, {3, -2}));
    CHECK(voi(single, two_dirac_structure(s)) == 0);
}

TEST_CASE("relative value against the prior equals the plain value") {
    auto s = space2();
    auto q = two_dirac_structure(s);
    auto l = menu_set(s);
    CHECK(relative_voi(l, q, InfoStructure::constant(q.prior())) == voi(l, q));
    CHECK(relative_voi(l, q, q) == 0);
}

TEST_CASE("relative value requires a refinement pair") {
    auto s = space2();
    auto q = two_dirac_structure(s);
    InfoStructure blurred(s, {Signal{parse_rational("1/2"), belief(s, {"3/4", "1/4"})},
                              Signal{parse_rational("1/2"), belief(s, {"1/4", "3/4"})}});
    CHECK_THROWS_AS(relative_voi(menu_set(s), q, blurred), NotARefinement);
}

TEST_CASE("property: value of information is nonnegative and decomposes") {
    for (int dim : {2, 3}) {
        oracle::InstanceParams params;
        params.dimension = dim;
        for (std::uint64_t seed = 0; seed < 120; ++seed) {
            auto inst = oracle::random_instance(seed, params);
            CHECK(voi(inst.first, inst.info) >= 0);
            auto partition = oracle::random_partition(inst.info.signal_count(), seed);
            auto coarse = garble(inst.info, partition);
            CHECK(coarse.prior() == inst.info.prior());
            Rational rel = relative_voi(inst.first, inst.info, coarse);
            CHECK(rel >= 0);
            CHECK(rel == voi(inst.first, inst.info) - voi(inst.first, coarse));
        }
    }
}

TEST_CASE("property: value is invariant under permutation and signal splitting") {
    auto s = space2();
    oracle::InstanceParams params;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto inst = oracle::random_instance(seed, params);
        auto q = inst.info;
        // permute
        std::vector<Signal> perm(q.signals().rbegin(), q.signals().rend());
        CHECK(voi(inst.first, InfoStructure(s, perm)) == voi(inst.first, q));
        // split the first signal into two halves
        std::vector<Signal> split;
        split.push_back(Signal{q.signals()[0].weight / 2, q.signals()[0].posterior});
        split.push_back(Signal{q.signals()[0].weight / 2, q.signals()[0].posterior});
        for (size_t i = 1; i < q.signals().size(); ++i) split.push_back(q.signals()[i]);
        CHECK(voi(inst.first, InfoStructure(s, split)) == voi(inst.first, q));
    }
}

TEST_CASE("property: fusion adds values of information exactly") {
    for (int dim : {2, 3}) {
        oracle::InstanceParams params;
        params.dimension = dim;
        for (std::uint64_t seed = 0; seed < 80; ++seed) {
            auto inst = oracle::random_instance(seed, params);
            auto fused = otimes(inst.first, inst.second);
            CHECK(voi(fused, inst.info) == voi(inst.first, inst.info) + voi(inst.second, inst.info));
        }
    }
}

TEST_CASE("numeric-mode value of information approximates the exact one") {
    auto s = space2();
    auto l = menu_set(s);
    auto f = sigma(l);
    double v = voi(f, two_dirac_structure(s));
    CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
    double ne = voi(negentropy(s), two_dirac_structure(s));
    CHECK(ne == doctest::Approx(std::log(2.0)).epsilon(1e-12));  // 0 - (-ln 2)
}

}  // TEST_SUITE
