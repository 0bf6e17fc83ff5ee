#include "posetcode/ideals.hpp"

#include <algorithm>

#include "posetcode/errors.hpp"

namespace posetcode {

namespace {

// Derived statistics for a sorted, duplicate-free family of r-ideals.
IdealFamily make_family(const Poset& p, int r, std::vector<Subset> ideals) {
    IdealFamily fam;
    fam.r = r;
    fam.ideals = std::move(ideals);
    if (fam.ideals.empty()) {
        return fam; // cannot happen for 0 <= r <= n, kept for safety
    }
    fam.union_mask = 0;
    fam.core_mask = full_mask(p.n());
    for (Subset i : fam.ideals) {
        fam.union_mask |= i;
        fam.core_mask &= i;
    }
    fam.essential_mask = fam.union_mask & ~fam.core_mask;
    fam.u = popcount(fam.core_mask);
    fam.lambda = popcount(fam.union_mask) - r;
    fam.k = popcount(p.maximal_in(fam.essential_mask));
    return fam;
}

} // namespace

IdealFamily enumerate_ideals(const Poset& p, int r) {
    if (r < 0 || r > p.n()) {
        throw RangeError("ideal cardinality out of range");
    }
    // Level BFS: the (s+1)-ideals are exactly the s-ideals extended by one
    // minimal element of the complement.
    std::vector<Subset> level{0};
    for (int s = 0; s < r; ++s) {
        std::vector<Subset> next;
        for (Subset i : level) {
            Subset candidates = p.minimal_in(p.ground() & ~i);
            for (int e : elements(candidates)) {
                next.push_back(i | bit(e));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
    return make_family(p, r, std::move(level));
}

Subset adjust_ideal(const Poset& p, Subset ideal, int r_target) {
    if (!p.is_ideal(ideal)) {
        throw InvalidIdeal("adjust_ideal requires an ideal");
    }
    if (r_target < 0 || r_target > p.n()) {
        throw RangeError("target cardinality out of range");
    }
    while (popcount(ideal) < r_target) {
        Subset grow = p.minimal_in(p.ground() & ~ideal);
        ideal |= bit(lowest_bit(grow));
    }
    while (popcount(ideal) > r_target) {
        Subset shrink = p.maximal_in(ideal);
        ideal &= ~bit(highest_bit(shrink));
    }
    return ideal;
}

int johnson_distance(Subset i, Subset j) {
    if (popcount(i) != popcount(j)) {
        throw SizeMismatch("johnson_distance requires equal cardinalities");
    }
    return popcount(i ^ j) / 2;
}

std::vector<Subset> ideal_path(const Poset& p, Subset from, Subset to, int r) {
    if (!p.is_ideal(from) || popcount(from) != r ||
        !p.is_ideal(to) || popcount(to) != r) {
        throw InvalidIdeal("ideal_path endpoints must be r-ideals");
    }
    std::vector<Subset> path{from};
    Subset k = from;
    while (k != to) {
        // Swapping out a maximal element of K\J keeps K an ideal; swapping in
        // a minimal element of J\K keeps the result inside an ideal shape.
        Subset out = p.maximal_in(k & ~to);
        Subset in = p.minimal_in(to & ~k);
        k = (k & ~bit(lowest_bit(out))) | bit(lowest_bit(in));
        path.push_back(k);
    }
    return path;
}

AbcSequence abc_sequence(const Poset& p, int r) {
    IdealFamily fam = enumerate_ideals(p, r);
    AbcSequence seq;
    seq.ideals.push_back(fam.ideals.front());
    Subset covered = fam.ideals.front();
    while (covered != fam.union_mask) {
        bool advanced = false;
        for (Subset i : fam.ideals) {
            Subset fresh = i & ~covered;
            if (popcount(fresh) == 1) {
                seq.ideals.push_back(i);
                seq.added0.push_back(lowest_bit(fresh));
                covered |= fresh;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            throw Error("ideal family admits no one-element extension step");
        }
    }
    return seq;
}

Subset shadow_w(const Poset& p, Subset v) {
    if (!p.is_ideal(v)) {
        throw InvalidIdeal("shadow_w requires an ideal");
    }
    return p.ground() & ~p.upset_closure(p.maximal_in(v));
}

} // namespace posetcode
