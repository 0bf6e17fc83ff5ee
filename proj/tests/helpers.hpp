#pragma once

#include <random>
#include <utility>
#include <vector>

#include "posetcode/poset.hpp"
#include "posetcode/subset.hpp"

namespace testhelp {

using posetcode::Poset;
using posetcode::Subset;

// Random poset from independent random cover pairs on a fixed labeling.
inline Poset random_poset(std::mt19937& gen, int n, double edge_prob = 0.3) {
    std::bernoulli_distribution edge(edge_prob);
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (edge(gen)) {
                covers.emplace_back(i, j);
            }
        }
    }
    return Poset::from_covers(n, covers);
}

// Independent enumeration oracle: filter every subset of the ground set.
inline std::vector<Subset> brute_ideals(const Poset& p, int r) {
    std::vector<Subset> out;
    for (Subset s = 0; s < (Subset{1} << p.n()); ++s) {
        if (posetcode::popcount(s) == r && p.is_ideal(s)) {
            out.push_back(s);
        }
    }
    return out;
}

inline Subset random_subset(std::mt19937& gen, int n) {
    std::uniform_int_distribution<Subset> dist(0, (Subset{1} << n) - 1);
    return dist(gen);
}

} // namespace testhelp
