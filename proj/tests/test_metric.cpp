#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "posetcode/codes.hpp"
#include "posetcode/ideals.hpp"
#include "posetcode/metric.hpp"
#include "posetcode/poset.hpp"

using namespace posetcode;

TEST_CASE("poset weight is the closure size of the support") {
    Poset k = crown(3);
    CHECK(p_weight(k, 0) == 0);
    CHECK(p_weight(k, from_elements_1based({1}, 6)) == 1);
    CHECK(p_weight(k, from_elements_1based({4}, 6)) == 3); // pulls in 1, 2
    CHECK(p_weight(k, from_elements_1based({4, 5}, 6)) == 5);
    CHECK(p_weight(k, k.ground()) == 6);
    CHECK(p_distance(k, from_elements_1based({4}, 6),
                     from_elements_1based({4}, 6)) == 0);
    CHECK(p_distance(k, 0, from_elements_1based({4}, 6)) == 3);
}

TEST_CASE("metric axioms hold on random instances") {
    std::mt19937 gen(3001);
    for (int trial = 0; trial < 60; ++trial) {
        Poset p = testhelp::random_poset(gen, 1 + trial % 10);
        Subset x = testhelp::random_subset(gen, p.n());
        Subset y = testhelp::random_subset(gen, p.n());
        Subset z = testhelp::random_subset(gen, p.n());
        CHECK(p_weight(p, x) >= popcount(x));
        CHECK(p_distance(p, x, y) == p_distance(p, y, x));
        CHECK((p_distance(p, x, y) == 0) == (x == y));
        CHECK(p_distance(p, x, z) <=
              p_distance(p, x, y) + p_distance(p, y, z));
        // translation invariance
        CHECK(p_distance(p, x ^ z, y ^ z) == p_distance(p, x, y));
    }
}

TEST_CASE("ball equals the weight-filter oracle everywhere") {
    std::mt19937 gen(3002);
    int instances = 0;
    while (instances < 220) {
        Poset p = testhelp::random_poset(gen, 1 + gen() % 12);
        for (int r = 0; r <= p.n(); ++r) {
            BallProfile fast = ball(p, r);
            BallProfile slow = ball_oracle(p, r);
            REQUIRE(fast.size == slow.size);
            REQUIRE(fast.members.has_value());
            REQUIRE(slow.members.has_value());
            CHECK(*fast.members == *slow.members);
        }
        ++instances;
    }
}

TEST_CASE("ball membership is exactly weight <= r") {
    std::mt19937 gen(3003);
    for (int trial = 0; trial < 25; ++trial) {
        Poset p = testhelp::random_poset(gen, 1 + trial % 9);
        int r = static_cast<int>(gen() % (p.n() + 1));
        BallProfile b = ball(p, r);
        REQUIRE(b.members.has_value());
        std::size_t idx = 0;
        for (Subset v = 0; v < (Subset{1} << p.n()); ++v) {
            bool inside = p_weight(p, v) <= r;
            if (inside) {
                REQUIRE(idx < b.members->size());
                CHECK((*b.members)[idx] == v);
                ++idx;
            }
        }
        CHECK(idx == b.members->size());
        CHECK(b.size == b.members->size());
    }
}

TEST_CASE("frozen ball sizes") {
    // 4 disjoint 2-chains (the matching poset)
    Poset matching = disjoint_chains({2, 2, 2, 2});
    CHECK(ball(matching, 2).size == 19);

    // one covered maximal among five: 1 < 2, elements 3..6 isolated
    Poset h = Poset::from_covers(6, {{1, 2}});
    CHECK(ball(h, 2).size == 18);

    // two covered maximals among five: 1 < 3, 2 < 4, elements 5..7 isolated
    Poset m = Poset::from_covers(7, {{1, 3}, {2, 4}});
    CHECK(ball(m, 2).size == 20);

    CHECK(ball(shape_stars_4_2(), 2).size == 16);
    CHECK(ball(shape_net_9(), 3).size == 32);
    CHECK(ball(antichain(5), 2).size == 16);
    CHECK(ball(antichain(7), 1).size == 8);

    CHECK(ball(crown(3), 2).size == 7);
    CHECK(ball(crown(3), 3).size == 20);
    CHECK(ball(crown(3), 4).size == 32);
    CHECK(ball(crown(3), 5).size == 56);

    for (int r = 0; r <= 6; ++r) {
        CHECK(ball(chain(6), r).size == (std::uint64_t{1} << r));
    }
}

TEST_CASE("ball lower bounds") {
    std::mt19937 gen(3004);
    for (int trial = 0; trial < 120; ++trial) {
        Poset p = testhelp::random_poset(gen, 1 + trial % 11);
        for (int r = 0; r <= p.n(); ++r) {
            IdealFamily fam = enumerate_ideals(p, r);
            BallProfile b = ball(p, r);
            // |B_P^r| >= 2^r
            CHECK(b.size >= (std::uint64_t{1} << r));
            // lambda >= 1 forces |B_P^r| >= 2^{r-1} (2 + lambda)
            if (fam.lambda >= 1) {
                CHECK(b.size >= (std::uint64_t{1} << (r - 1)) *
                                    (2 + static_cast<std::uint64_t>(
                                             fam.lambda)));
            }
        }
    }
}
