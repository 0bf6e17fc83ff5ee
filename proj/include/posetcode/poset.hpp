#pragma once

#include <utility>
#include <vector>

#include "posetcode/subset.hpp"

namespace posetcode {

// Finite poset on ground set {1,..,n} (internally 0-based), n <= 64.
// Stored as the full order relation: down[i] = {j : j <= i}, up[i] = {j : j >= i},
// both including i itself. Invariants: reflexive, antisymmetric, transitive;
// up is the transpose of down.
class Poset {
  public:
    // Build from cover pairs (a, b) meaning a < b, 1-based. The pairs need
    // not be an actual transitive reduction; any acyclic relation works and
    // is closed transitively. Throws RangeError on bad indices, CycleError
    // if the relation has a directed cycle. n == 0 gives the empty poset.
    static Poset from_covers(int n,
                             const std::vector<std::pair<int, int>>& covers);

    // Build directly from transitively closed reflexive down-masks where
    // down[i] may only reference indices <= i (a naturally labeled poset).
    // Validation is limited to those structural requirements.
    static Poset from_down_masks(const std::vector<Subset>& down);

    int n() const { return n_; }
    Subset ground() const { return full_mask(n_); }

    // Principal ideal / filter of a single element, 0-based.
    Subset down(int i0) const { return down_[static_cast<std::size_t>(i0)]; }
    Subset up(int i0) const { return up_[static_cast<std::size_t>(i0)]; }

    bool leq(int a0, int b0) const { return contains(down(b0), a0); }
    bool less(int a0, int b0) const { return a0 != b0 && leq(a0, b0); }
    bool comparable(int a0, int b0) const { return leq(a0, b0) || leq(b0, a0); }

    // Downward closure <S> = union of principal ideals of members of S.
    Subset closure(Subset s) const;
    // Upward closure of S.
    Subset upset_closure(Subset s) const;

    bool is_ideal(Subset s) const { return closure(s) == s; }
    bool is_upset(Subset s) const { return upset_closure(s) == s; }

    // Elements of S with no strictly larger / smaller element inside S.
    Subset maximal_in(Subset s) const;
    Subset minimal_in(Subset s) const;

    Subset maximal() const { return maximal_in(ground()); }
    Subset minimal() const { return minimal_in(ground()); }

    // Cardinality of a longest chain contained in S (counting elements,
    // so an antichain has height 1 and the empty set height 0).
    int height_of(Subset s) const;
    int height() const { return height_of(ground()); }

    // Subposet induced on S. index_map[k] = 0-based index in this poset of
    // the k-th (ascending) element of S.
    Poset induced(Subset s, std::vector<int>* index_map = nullptr) const;

    // Transitive reduction as 1-based pairs (a, b) with a covered by b,
    // ordered lexicographically.
    std::vector<std::pair<int, int>> cover_pairs_1based() const;

    bool operator==(const Poset& other) const {
        return n_ == other.n_ && down_ == other.down_;
    }

  private:
    int n_ = 0;
    std::vector<Subset> down_;
    std::vector<Subset> up_;

    void rebuild_up();
};

// Standard families. All throw RangeError on out-of-range sizes.
Poset chain(int n);                                 // 1 < 2 < ... < n
Poset antichain(int n);                             // no relations
Poset disjoint_chains(const std::vector<int>& lengths); // consecutive labels
// Crown on 2t elements, t >= 2: minimals 1..t, maximals t+1..2t, and
// t+i covers i and (i mod t)+1.
Poset crown(int t);

} // namespace posetcode
