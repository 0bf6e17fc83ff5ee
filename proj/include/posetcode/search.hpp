#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetcode/codes.hpp"
#include "posetcode/criteria.hpp"
#include "posetcode/poset.hpp"

namespace posetcode {

struct SearchConfig {
    int max_n = 14;
    std::uint64_t node_limit = 0; // number of center placements; 0 = no cap
    bool fix_zero = true;         // force the all-zero word as first center
    int parallel_width = 1;
};

enum class SearchStatus { found, none, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Code> code;
    std::uint64_t nodes = 0;
    std::uint64_t ball_size = 0;
};

// Exhaustive r-perfect code search: exact cover of F^n by ball translates,
// branching on the lowest uncovered vector, centers tried in ascending
// order. Complete: "none" means the whole tree was exhausted (after the
// divisibility shortcut |B| | 2^n). CapExceeded when n > cfg.max_n.
SearchResult find_perfect_code(const Poset& p, int r,
                               const SearchConfig& cfg = {});

// Structural constraints for reconstructing a two-level poset from a code:
// a height-<=2 poset on [n] with the given number of maximal elements and
// the given multiset of nonmaximal valencies (edges to maximal elements).
struct LabelingShape {
    int n = 0;
    int max_count = 0;
    std::vector<int> nonmax_valencies;
};

// First (in lexicographic enumeration order) labeled poset matching the
// shape under which the code is r-perfect. RangeError when n > 10.
std::optional<Poset> find_poset_labeling(const Code& code, int r,
                                         const LabelingShape& shape);

// One catalog row: a poset tested at codimension m = r + offset.
struct CatalogRecord {
    Poset poset;
    int m = 0;
    int r = 0;
    Verdict battery = Verdict::inconclusive;
    SearchStatus oracle = SearchStatus::none;
    std::uint64_t ball_size = 0;
    bool perfect_exists = false; // oracle truth for codimension m
    bool agreement = true;
};

// Battery-versus-brute-force sweep over every poset with 1 <= n <= n_max up
// to isomorphism and every feasible m with r = m - m_offset.
// CapExceeded when n_max > 8.
std::vector<CatalogRecord> exhaust_small_posets(int n_max, int m_offset,
                                                const SearchConfig& cfg = {});

} // namespace posetcode
