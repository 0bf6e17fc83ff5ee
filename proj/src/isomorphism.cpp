#include "posetcode/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "posetcode/errors.hpp"

namespace posetcode {

namespace {

struct CanonState {
    const Poset* p;
    std::vector<int> canon_pos;   // original vertex -> position, -1 unplaced
    std::vector<int> order;       // positions filled so far
    std::vector<Subset> masks;
    CanonicalForm best;
    bool have_best = false;
};

// At each position the lex-min sequence must take a minimal achievable mask,
// so branch only over candidates attaining it; twins (identical down- and
// up-sets) generate automorphic subtrees and are explored once.
void canon_recurse(CanonState& st) {
    const Poset& p = *st.p;
    int t = static_cast<int>(st.order.size());
    if (t == p.n()) {
        if (!st.have_best || st.masks < st.best.masks) {
            st.best.masks = st.masks;
            st.best.order = st.order;
            st.have_best = true;
        }
        return;
    }
    Subset min_mask = ~Subset{0};
    std::vector<std::pair<int, Subset>> ties; // (vertex, mask)
    for (int v = 0; v < p.n(); ++v) {
        if (st.canon_pos[v] >= 0) {
            continue;
        }
        Subset below = p.down(v) & ~bit(v);
        bool placeable = true;
        Subset mask = bit(t);
        for (int u : elements(below)) {
            if (st.canon_pos[u] < 0) {
                placeable = false;
                break;
            }
            mask |= bit(st.canon_pos[u]);
        }
        if (!placeable) {
            continue;
        }
        if (mask < min_mask) {
            min_mask = mask;
            ties.clear();
        }
        if (mask == min_mask) {
            ties.emplace_back(v, mask);
        }
    }
    // prune automorphic twins among the tied candidates
    std::vector<std::pair<Subset, Subset>> seen_signatures;
    for (auto [v, mask] : ties) {
        std::pair<Subset, Subset> sig{p.down(v), p.up(v)};
        if (std::find(seen_signatures.begin(), seen_signatures.end(), sig) !=
            seen_signatures.end()) {
            continue;
        }
        seen_signatures.push_back(sig);
        st.canon_pos[v] = t;
        st.order.push_back(v);
        st.masks.push_back(mask);
        canon_recurse(st);
        st.masks.pop_back();
        st.order.pop_back();
        st.canon_pos[v] = -1;
    }
}

} // namespace

CanonicalForm canonical_form(const Poset& p) {
    CanonState st;
    st.p = &p;
    st.canon_pos.assign(p.n(), -1);
    canon_recurse(st);
    return st.best;
}

bool is_isomorphic(const Poset& a, const Poset& b) {
    if (a.n() != b.n()) {
        return false;
    }
    return canonical_form(a).masks == canonical_form(b).masks;
}

std::optional<std::vector<int>> find_isomorphism(const Poset& a,
                                                 const Poset& b) {
    if (a.n() != b.n()) {
        return std::nullopt;
    }
    CanonicalForm ca = canonical_form(a);
    CanonicalForm cb = canonical_form(b);
    if (ca.masks != cb.masks) {
        return std::nullopt;
    }
    // Both placements realize the same down-mask sequence, so position t of a
    // maps to position t of b.
    std::vector<int> perm(a.n());
    for (int t = 0; t < a.n(); ++t) {
        perm[ca.order[t]] = cb.order[t];
    }
    return perm;
}

std::vector<Poset> all_posets_up_to_iso(int n) {
    if (n < 1 || n > 10) {
        throw RangeError("poset enumeration supports 1 <= n <= 10");
    }
    // Naturally labeled posets: grow one vertex at a time, the new vertex's
    // strict down-set ranging over all down-closed sets of the current poset.
    struct Raw {
        std::vector<Subset> down; // down[i] with bit(i) set
    };
    std::vector<Raw> level{Raw{{}}};
    for (int t = 0; t < n; ++t) {
        std::vector<Raw> next;
        for (const Raw& raw : level) {
            // all down-closed subsets of the t-vertex poset
            std::vector<Subset> closed{0};
            for (int v = 0; v < t; ++v) {
                std::size_t sz = closed.size();
                for (std::size_t idx = 0; idx < sz; ++idx) {
                    Subset s = closed[idx];
                    if (!contains(s, v) && is_subset(raw.down[v] & ~bit(v), s)) {
                        closed.push_back(s | bit(v));
                    }
                }
                std::sort(closed.begin(), closed.end());
                closed.erase(std::unique(closed.begin(), closed.end()),
                             closed.end());
            }
            for (Subset d : closed) {
                Raw ext = raw;
                Subset mask = bit(t);
                for (int v : elements(d)) {
                    mask |= ext.down[v];
                }
                ext.down.push_back(mask);
                next.push_back(std::move(ext));
            }
        }
        level = std::move(next);
    }
    // rebuild as Poset objects and dedup canonically
    std::map<std::vector<Subset>, Poset> reps;
    for (const Raw& raw : level) {
        Poset p = Poset::from_down_masks(raw.down);
        reps.emplace(canonical_form(p).masks, std::move(p));
    }
    std::vector<Poset> out;
    out.reserve(reps.size());
    for (auto& [masks, p] : reps) {
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace posetcode
