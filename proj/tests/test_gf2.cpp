#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "posetcode/errors.hpp"
#include "posetcode/gf2.hpp"
#include "posetcode/subset.hpp"

using namespace posetcode;

namespace {

// Independent syndrome: XOR of the columns selected by x.
Subset syndrome(const std::vector<Subset>& columns, Subset x) {
    Subset s = 0;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (contains(x, static_cast<int>(i))) {
            s ^= columns[i];
        }
    }
    return s;
}

} // namespace

TEST_CASE("rank of standard and dependent columns") {
    CHECK(gf2::column_rank({0b001, 0b010, 0b100}) == 3);
    CHECK(gf2::column_rank({0b001, 0b010, 0b011}) == 2);
    CHECK(gf2::column_rank({0, 0}) == 0);
    CHECK(gf2::column_rank({}) == 0);
}

TEST_CASE("kernel basis spans exactly the syndrome-zero vectors") {
    std::mt19937 gen(4001);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(gen() % 10);
        int m = 1 + static_cast<int>(gen() % 6);
        std::vector<Subset> columns;
        for (int i = 0; i < n; ++i) {
            columns.push_back(testhelp::random_subset(gen, m));
        }
        int rank = gf2::column_rank(columns);
        std::vector<Subset> kernel = gf2::kernel_basis(columns);
        CHECK(static_cast<int>(kernel.size()) == n - rank);
        for (Subset v : kernel) {
            CHECK(syndrome(columns, v) == 0);
        }
        // the basis is independent: spanning gives 2^(n-rank) vectors
        std::vector<Subset> all = gf2::span(kernel);
        CHECK(all.size() == (std::size_t{1} << (n - rank)));
        // and they are exactly the syndrome-zero vectors
        std::size_t zero_count = 0;
        std::size_t idx = 0;
        for (Subset x = 0; x < (Subset{1} << n); ++x) {
            if (syndrome(columns, x) == 0) {
                ++zero_count;
                REQUIRE(idx < all.size());
                CHECK(all[idx] == x);
                ++idx;
            }
        }
        CHECK(zero_count == all.size());
    }
}

TEST_CASE("span is sorted, unique, contains zero") {
    std::vector<Subset> s = gf2::span({0b011, 0b101});
    CHECK(s == std::vector<Subset>{0b000, 0b011, 0b101, 0b110});
    CHECK(gf2::span({}) == std::vector<Subset>{0});
    // duplicate generators collapse
    CHECK(gf2::span({0b1, 0b1}).size() == 2);
    CHECK_THROWS_AS(gf2::span({1, 2, 4, 8, 16}, 16), CapExceeded);
}
