#include <doctest.h>

#include <vector>

#include "posetcode/codes.hpp"
#include "posetcode/errors.hpp"
#include "posetcode/metric.hpp"
#include "posetcode/poset.hpp"
#include "posetcode/search.hpp"

using namespace posetcode;

namespace {

Poset two_triple_stars() {
    // two minimal elements, each below three private maximal elements
    return Poset::from_covers(8,
                              {{1, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {2, 8}});
}

} // namespace

TEST_CASE("search finds the small classical perfect codes") {
    SearchResult tiny = find_perfect_code(antichain(3), 1);
    REQUIRE(tiny.status == SearchStatus::found);
    CHECK(tiny.ball_size == 4);
    REQUIRE(tiny.code.has_value());
    CHECK(tiny.code->words() == std::vector<Subset>{0, 7});
    CHECK(is_perfect(antichain(3), *tiny.code, 1).perfect);

    SearchResult rep = find_perfect_code(antichain(5), 2);
    REQUIRE(rep.status == SearchStatus::found);
    CHECK(rep.ball_size == 16);
    CHECK(rep.code->words() == std::vector<Subset>{0, 31});

    SearchResult ch = find_perfect_code(chain(6), 2);
    REQUIRE(ch.status == SearchStatus::found);
    CHECK(ch.ball_size == 4);
    CHECK(ch.code->cardinality() == 16);
    CHECK(is_perfect(chain(6), *ch.code, 2).perfect);
}

TEST_CASE("crown(3) sweep: three impossible radii and one code") {
    CHECK(find_perfect_code(crown(3), 2).status == SearchStatus::none);
    CHECK(find_perfect_code(crown(3), 3).status == SearchStatus::none);
    CHECK(find_perfect_code(crown(3), 5).status == SearchStatus::none);

    SearchResult open_case = find_perfect_code(crown(3), 4);
    REQUIRE(open_case.status == SearchStatus::found);
    CHECK(open_case.ball_size == 32);
    CHECK(open_case.code->cardinality() == 2);
    CHECK(is_perfect(crown(3), *open_case.code, 4).perfect);
}

TEST_CASE("divisibility shortcut answers without exploring nodes") {
    SearchResult res = find_perfect_code(crown(3), 2);
    CHECK(res.status == SearchStatus::none);
    CHECK(res.ball_size == 7);
    CHECK(res.nodes == 0);
}

TEST_CASE("two triple stars admit no 2-perfect code") {
    // ball size 16 divides 2^8, so the search must genuinely exhaust
    SearchResult res = find_perfect_code(two_triple_stars(), 2);
    CHECK(res.status == SearchStatus::none);
    CHECK(res.ball_size == 16);
    CHECK(res.nodes > 0);
}

TEST_CASE("node budget interrupts the search") {
    SearchConfig tight;
    tight.node_limit = 1;
    CHECK(find_perfect_code(antichain(5), 2, tight).status ==
          SearchStatus::budget_exceeded);

    SearchConfig roomy;
    roomy.node_limit = 1u << 20;
    CHECK(find_perfect_code(antichain(5), 2, roomy).status ==
          SearchStatus::found);
}

TEST_CASE("parallel search returns the sequential answer") {
    std::vector<std::pair<Poset, int>> instances;
    instances.emplace_back(antichain(5), 2);
    instances.emplace_back(crown(3), 4);
    instances.emplace_back(chain(5), 1);
    instances.emplace_back(two_triple_stars(), 2);
    instances.emplace_back(disjoint_chains({2, 2}), 2);
    for (const auto& [p, r] : instances) {
        SearchResult seq = find_perfect_code(p, r);
        SearchConfig cfg;
        cfg.parallel_width = 4;
        SearchResult par = find_perfect_code(p, r, cfg);
        CHECK(par.status == seq.status);
        CHECK(par.ball_size == seq.ball_size);
        REQUIRE(par.code.has_value() == seq.code.has_value());
        if (seq.code) {
            CHECK(par.code->words() == seq.code->words());
        }
    }
}

TEST_CASE("search refuses oversized ground sets") {
    CHECK_THROWS_AS(find_perfect_code(antichain(15), 2), CapExceeded);
    SearchConfig wide;
    wide.max_n = 15;
    // raising the cap makes the same call legal (and instant: 6 does not
    // divide 2^15... ball of antichain(15) at r=2 is 1+15+105=121)
    CHECK(find_perfect_code(antichain(15), 2, wide).status ==
          SearchStatus::none);
}

TEST_CASE("labeling search recovers posets from codes") {
    SUBCASE("the 16-word length-8 code at r=2") {
        LabelingShape shape{8, 6, {4, 2}};
        auto p = find_poset_labeling(code_stars_4_2(), 2, shape);
        REQUIRE(p.has_value());
        CHECK(is_perfect(*p, code_stars_4_2(), 2).perfect);
    }
    SUBCASE("the 16-word length-9 code at r=3") {
        LabelingShape shape{9, 6, {4, 4, 4}};
        auto p = find_poset_labeling(code_net_9(), 3, shape);
        REQUIRE(p.has_value());
        CHECK(is_perfect(*p, code_net_9(), 3).perfect);
    }
    SUBCASE("no 3+3 labeling works for the length-8 code") {
        LabelingShape shape{8, 6, {3, 3}};
        CHECK_FALSE(find_poset_labeling(code_stars_4_2(), 2, shape));
    }
    SUBCASE("codes without a codimension have no perfect labeling") {
        Code three = Code::explicit_code(8, {0, 1, 2});
        LabelingShape shape{8, 6, {4, 2}};
        CHECK_FALSE(find_poset_labeling(three, 2, shape));
    }
    SUBCASE("shape validation") {
        CHECK_THROWS_AS(
            find_poset_labeling(code_stars_4_2(), 2, LabelingShape{7, 6, {1}}),
            SizeMismatch);
        CHECK_THROWS_AS(find_poset_labeling(code_stars_4_2(), 2,
                                            LabelingShape{8, 5, {4, 2}}),
                        SizeMismatch);
        CHECK_THROWS_AS(find_poset_labeling(code_stars_4_2(), 2,
                                            LabelingShape{8, 6, {7, 2}}),
                        RangeError);
        CHECK_THROWS_AS(find_poset_labeling(code_stars_4_2(), 2,
                                            LabelingShape{8, 6, {0, 4}}),
                        RangeError);
        Code big = Code::explicit_code(11, {0});
        CHECK_THROWS_AS(
            find_poset_labeling(big, 2, LabelingShape{11, 9, {1, 1}}),
            RangeError);
    }
}

TEST_CASE("catalog sweep: battery never contradicts brute force") {
    for (int offset = 0; offset <= 2; ++offset) {
        std::vector<CatalogRecord> rows = exhaust_small_posets(4, offset);
        CHECK(!rows.empty());
        for (const CatalogRecord& row : rows) {
            CHECK(row.agreement);
            CHECK(row.m - row.r == offset);
        }
    }
    CHECK_THROWS_AS(exhaust_small_posets(9, 0), CapExceeded);
}
