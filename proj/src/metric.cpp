#include "posetcode/metric.hpp"

#include <algorithm>
#include <unordered_set>

#include "posetcode/errors.hpp"
#include "posetcode/ideals.hpp"

namespace posetcode {

namespace {

constexpr int kMaterializeCap = 24; // bitset over 2^n entries up to here
constexpr int kOracleCap = 20;

} // namespace

int p_weight(const Poset& p, Subset x) {
    return popcount(p.closure(x));
}

int p_distance(const Poset& p, Subset x, Subset y) {
    return p_weight(p, x ^ y);
}

BallProfile ball(const Poset& p, int r) {
    IdealFamily fam = enumerate_ideals(p, r); // RangeError on bad r
    BallProfile profile;
    profile.r = r;
    if (p.n() <= kMaterializeCap) {
        std::vector<std::uint64_t> seen((std::size_t{1} << p.n()) / 64 + 1, 0);
        for (Subset ideal : fam.ideals) {
            for_each_subset(ideal, [&](Subset s) {
                seen[s >> 6] |= std::uint64_t{1} << (s & 63);
            });
        }
        std::vector<Subset> members;
        for (std::size_t w = 0; w < seen.size(); ++w) {
            std::uint64_t word = seen[w];
            while (word != 0) {
                int b = lowest_bit(word);
                members.push_back(static_cast<Subset>(w * 64 + b));
                word &= word - 1;
            }
        }
        profile.size = members.size();
        profile.members = std::move(members);
    } else {
        std::unordered_set<Subset> seen;
        for (Subset ideal : fam.ideals) {
            for_each_subset(ideal, [&](Subset s) { seen.insert(s); });
        }
        profile.size = seen.size();
    }
    return profile;
}

BallProfile ball_oracle(const Poset& p, int r) {
    if (p.n() > kOracleCap) {
        throw CapExceeded("ball oracle supports n <= 20");
    }
    if (r < 0 || r > p.n()) {
        throw RangeError("ball radius out of range");
    }
    BallProfile profile;
    profile.r = r;
    std::vector<Subset> members;
    for (Subset x = 0; x < (Subset{1} << p.n()); ++x) {
        if (p_weight(p, x) <= r) {
            members.push_back(x);
        }
    }
    profile.size = members.size();
    profile.members = std::move(members);
    return profile;
}

} // namespace posetcode
