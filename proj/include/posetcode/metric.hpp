#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetcode/poset.hpp"

namespace posetcode {

struct BallProfile {
    int r = 0;
    std::uint64_t size = 0;
    // Materialized (sorted ascending) only when n is small enough to list.
    std::optional<std::vector<Subset>> members;
};

// |<supp x>|: size of the smallest ideal containing the support of x.
int p_weight(const Poset& p, Subset x);

// p_weight of the symmetric difference.
int p_distance(const Poset& p, Subset x, Subset y);

// B_P^r as the union of the powersets of all r-ideals. RangeError unless
// 0 <= r <= n.
BallProfile ball(const Poset& p, int r);

// Definition-level brute force: all 2^n vectors filtered by weight <= r.
// CapExceeded when n is past the oracle cap (20).
BallProfile ball_oracle(const Poset& p, int r);

} // namespace posetcode
