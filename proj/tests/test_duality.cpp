#include <doctest.h>

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "actsets/oracle.hpp"
#include "actsets/value_function.hpp"
#include "helpers.hpp"

using namespace actsets;
using namespace actsets::testing;

namespace {

// independent high-precision evaluation of sum p*ln(p)
double negentropy_reference(const std::vector<double>& p) {
    using mp50 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;
    mp50 acc = 0;
    for (double x : p)
        if (x > 0) acc += mp50(x) * boost::multiprecision::log(mp50(x));
    return acc.convert_to<double>();
}

}  // namespace

TEST_SUITE("duality") {

TEST_CASE("sigma of the menu is the piecewise-linear support function") {
    auto s = space2();
    auto f = sigma(menu_set(s));
    REQUIRE(f.is_pwl());
    CHECK(f.pieces().size() == 3);
    CHECK(f.eval_exact(Belief::uniform(s)) == parse_rational("3/2"));
}

TEST_CASE("sigma of the lower orthant is the zero function") {
    auto s = space2();
    auto f = sigma(ActSet::lower_orthant(s));
    oracle::SimplexGrid grid(s, 9);
    for (const auto& p : grid.points()) CHECK(f.eval_exact(p) == 0);
}

TEST_CASE("sigma of a singleton is linear") {
    auto s = space2();
    auto a = act(s, {3, -2});
    auto f = sigma(ActSet::singleton(a));
    oracle::SimplexGrid grid(s, 9);
    for (const auto& p : grid.points()) CHECK(f.eval_exact(p) == dot(p, a));
}

TEST_CASE("sigma of the empty element is bottom") {
    auto s = space2();
    auto f = sigma(DioidElement::empty(s));
    CHECK(f.is_bottom());
    CHECK(f.eval({0.5, 0.5}) == -std::numeric_limits<double>::infinity());
    CHECK(theta(f).is_empty());
}

TEST_CASE("theta inverts sigma exactly on canonical sets") {
    auto s = space2();
    for (const ActSet& set : {menu_set(s), segment_set(s), ActSet::lower_orthant(s)}) {
        auto back = theta(sigma(set));
        REQUIRE(!back.is_empty());
        CHECK(back.set() == set);
    }
}

TEST_CASE("property: theta and sigma invert each other on seeded instances") {
    for (int dim : {2, 3}) {
        oracle::InstanceParams params;
        params.dimension = dim;
        for (std::uint64_t seed = 0; seed < 120; ++seed) {
            auto set = oracle::random_act_set(StateSpace::of_dimension(dim), seed, params);
            CHECK(theta(sigma(set)).set() == set);
            // sigma . theta on the function side: identical piece lists
            auto f = sigma(set);
            auto again = sigma(theta(f));
            CHECK(again.pieces() == f.pieces());
        }
    }
}

TEST_CASE("theta of the constant zero function is the lower orthant") {
    auto s = space2();
    auto zero = ValueFunction::pwl(s, {zero_act(s)});
    CHECK(theta(zero).set() == ActSet::lower_orthant(s));
}

TEST_CASE("theta on a numeric oracle is rejected in exact form") {
    CHECK_THROWS_AS(theta(negentropy(space2())), ModeMismatch);
}

TEST_CASE("pointwise max and sum mirror union and fusion") {
    auto s = space2();
    auto a = menu_set(s);
    auto b = segment_set(s);
    auto fmax = pointwise_max(sigma(a), sigma(b));
    auto fsum = pointwise_sum(sigma(a), sigma(b));
    CHECK(fmax.pieces() == oplus(a, b).generators());
    CHECK(fsum.pieces() == otimes(a, b).generators());
    CHECK_THROWS_AS(pointwise_max(sigma(a), negentropy(s)), ModeMismatch);
    CHECK_THROWS_AS(pointwise_sum(sigma(a), negentropy(s)), ModeMismatch);
}

TEST_CASE("negentropy values at the worked beliefs") {
    auto s = space2();
    auto f = negentropy(s);
    CHECK(f.eval({0.5, 0.5}) == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK(f.eval({1.0, 0.0}) == 0.0);  // 0 log 0 = 0 convention
    CHECK(f.eval({0.0, 1.0}) == 0.0);
    const double quarter = f.eval({0.25, 0.75});
    CHECK(quarter == doctest::Approx(-0.562335).epsilon(1e-5));
    CHECK(quarter == doctest::Approx(negentropy_reference({0.25, 0.75})).epsilon(1e-14));
}

TEST_CASE("negentropy is convex on the grid") {
    for (int dim : {2, 3}) {
        auto s = StateSpace::of_dimension(dim);
        oracle::SimplexGrid grid(s, 40);
        CHECK(oracle::brute_convexity(negentropy(s), grid));
    }
}

TEST_CASE("numeric membership for the negentropy set") {
    auto s = space2();
    auto member = theta_membership(negentropy(s), 1);
    const double l2 = std::log(2.0);
    // the equality case: exp(x1) + exp(x2) = 1
    CHECK(member.contains({-l2, -l2}));
    // comfortably inside and comfortably outside
    CHECK(member.contains({-l2 - 0.05, -l2 - 0.05}));
    CHECK(!member.contains({-l2 + 0.05, -l2 + 0.05}));
    // ascent never overestimates the closed-form maximum log(sum exp x)
    const std::vector<double> probe{-0.9, -1.1};
    const double closed_form = std::log(std::exp(probe[0]) + std::exp(probe[1]));
    CHECK(member.excess(probe) <= closed_form + 1e-12);
    CHECK(member.excess(probe) == doctest::Approx(closed_form).epsilon(1e-6));
}

TEST_CASE("membership construction rejects a non-convex oracle") {
    auto s = space2();
    auto bump = ValueFunction::numeric(
        s, [](const std::vector<double>& p) { return -p[0] * p[0]; }, 1e-9);
    CHECK_THROWS_AS(theta_membership(bump, 0), NotConvex);
}

TEST_CASE("negentropy support is reproduced by closed-form members") {
    // sup over members of <p, x> equals the negentropy, approached by the
    // log-coordinates member at each grid belief
    for (int dim : {2, 3}) {
        auto s = StateSpace::of_dimension(dim);
        auto f = negentropy(s);
        oracle::SimplexGrid grid(s, dim == 2 ? 199 : 18);
        for (const auto& pb : grid.points()) {
            auto p = pb.to_doubles();
            std::vector<double> member(p.size());
            double total = 0;
            for (size_t i = 0; i < p.size(); ++i) {
                member[i] = p[i] > 0 ? std::log(p[i] * (1 - 1e-12)) : -50.0;
                total += std::exp(member[i]);
            }
            CHECK(total <= 1.0 + 1e-15);
            double pairing = 0;
            for (size_t i = 0; i < p.size(); ++i) pairing += p[i] * member[i];
            CHECK(std::abs(pairing - f.eval(p)) <= 1e-6);
        }
    }
}

TEST_CASE("homogeneous extension of the menu support function") {
    auto s = space2();
    auto ext = HomogeneousExtension(sigma(menu_set(s)));
    // scaling from the dirac value: twice the support at (1,0)
    auto v = ext.eval_exact({Rational(2), Rational(0)});
    REQUIRE(v.has_value());
    CHECK(*v == 14);
    CHECK(*ext.eval_exact({Rational(0), Rational(0)}) == 0);
    CHECK(!ext.eval_exact({Rational(-1), Rational(1)}).has_value());
    CHECK(ext.eval({-1.0, 1.0}) == std::numeric_limits<double>::infinity());
}

TEST_CASE("property: the extension matches the full support function on the orthant") {
    auto s = space2();
    auto set = menu_set(s);
    auto ext = HomogeneousExtension(sigma(set));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coord(0, 12);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rational> y{Rational(coord(rng)), Rational(coord(rng))};
        // max over generators of <y, g>
        Rational direct = 0;
        bool first = true;
        for (const auto& g : set.generators()) {
            Rational acc = y[0] * g[0] + y[1] * g[1];
            if (first || acc > direct) direct = acc;
            first = false;
        }
        auto v = ext.eval_exact(y);
        REQUIRE(v.has_value());
        CHECK(*v == direct);
    }
}

TEST_CASE("homogeneity along rays") {
    auto s = space2();
    auto ext = HomogeneousExtension(sigma(menu_set(s)));
    for (const char* lambda : {"1/2", "2", "7/3"}) {
        Rational lam = parse_rational(lambda);
        auto base = ext.eval_exact({Rational(1, 3), Rational(2, 3)});
        auto scaled = ext.eval_exact({Rational(lam / 3), Rational(lam * 2 / 3)});
        REQUIRE(base.has_value());
        REQUIRE(scaled.has_value());
        CHECK(*scaled == lam * *base);
    }
}

}  // TEST_SUITE
