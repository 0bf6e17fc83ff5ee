#pragma once

#include <optional>
#include <vector>

#include "posetcode/poset.hpp"

namespace posetcode {

// Canonical labeling: the lexicographically smallest down-mask sequence over
// all labelings that follow a linear extension (so each mask only references
// earlier positions). Constant exactly on isomorphism classes.
struct CanonicalForm {
    std::vector<Subset> masks; // masks[t] = down-set of position t, bit t set
    std::vector<int> order;    // order[t] = original vertex placed at t
};
CanonicalForm canonical_form(const Poset& p);

bool is_isomorphic(const Poset& a, const Poset& b);

// perm[va] = vb with va in a, vb in b, preserving the order relation both
// ways; nullopt when not isomorphic.
std::optional<std::vector<int>> find_isomorphism(const Poset& a,
                                                 const Poset& b);

// All posets on n elements up to isomorphism, built by extending smaller
// posets with a new top-indexed vertex over every ideal as its down-set,
// then deduplicated by canonical form.
std::vector<Poset> all_posets_up_to_iso(int n);

} // namespace posetcode
