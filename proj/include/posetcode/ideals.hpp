#pragma once

#include <vector>

#include "posetcode/poset.hpp"

namespace posetcode {

// The family of all ideals of cardinality r, with the derived statistics
// used throughout the existence criteria.
struct IdealFamily {
    int r = 0;
    std::vector<Subset> ideals; // ascending by bitmask value, duplicate-free
    Subset union_mask = 0;      // union of all r-ideals
    Subset core_mask = 0;       // intersection of all r-ideals
    Subset essential_mask = 0;  // union_mask \ core_mask
    int u = 0;                  // |core_mask|
    int lambda = 0;             // |union_mask| - r
    int k = 0;                  // maximal elements of the essential subposet
};

// All r-ideals plus statistics. RangeError unless 0 <= r <= n.
IdealFamily enumerate_ideals(const Poset& p, int r);

// Grow or shrink an ideal to the target cardinality, one element at a time:
// growing adds the lowest-index minimal element of the complement, shrinking
// removes the highest-index maximal element of the ideal. InvalidIdeal if I
// is not an ideal, RangeError unless 0 <= r_target <= n.
Subset adjust_ideal(const Poset& p, Subset ideal, int r_target);

// Half the symmetric difference; SizeMismatch unless |I| = |J|.
int johnson_distance(Subset i, Subset j);

// Path I = K_0, ..., K_d = J of r-ideals with consecutive Johnson distance 1
// and d = johnson_distance(I, J). Each step removes the lowest-index maximal
// element of K\J and adds the lowest-index minimal element of J\K.
// InvalidIdeal unless both endpoints are r-ideals.
std::vector<Subset> ideal_path(const Poset& p, Subset from, Subset to, int r);

// Ideal sequence I_0..I_lambda and elements a_1..a_lambda such that every
// prefix union I_0 u ... u I_i equals I_0 u {a_1..a_i}; the final union is
// the whole of P^r.
struct AbcSequence {
    std::vector<Subset> ideals;   // lambda + 1 entries
    std::vector<int> added0;      // lambda entries, 0-based elements
};
AbcSequence abc_sequence(const Poset& p, int r);

// W(V) = [n] \ up(max(V)), the largest ideal avoiding max(V).
// InvalidIdeal unless V is an ideal.
Subset shadow_w(const Poset& p, Subset v);

} // namespace posetcode
