#include "posetcode/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace posetcode {

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0 || n > kMaxGround)
        throw RangeError("poset size must be in 0..64, got " + std::to_string(n));

    std::vector<Subset> pred(static_cast<std::size_t>(n), 0); // direct a < b edges
    for (auto [a, b] : covers) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw RangeError("cover pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ") outside 1.." + std::to_string(n));
        if (a == b)
            throw CycleError("cover pair relates " + std::to_string(a) +
                             " to itself");
        pred[static_cast<std::size_t>(b - 1)] |= bit(a - 1);
    }

    // Kahn topological sort over the cover digraph; detects cycles.
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int b0 = 0; b0 < n; ++b0)
        indeg[static_cast<std::size_t>(b0)] = popcount(pred[static_cast<std::size_t>(b0)]);

    std::vector<Subset> succ(static_cast<std::size_t>(n), 0);
    for (int b0 = 0; b0 < n; ++b0)
        for (int a0 : elements(pred[static_cast<std::size_t>(b0)]))
            succ[static_cast<std::size_t>(a0)] |= bit(b0);

    std::queue<int> ready;
    for (int i0 = 0; i0 < n; ++i0)
        if (indeg[static_cast<std::size_t>(i0)] == 0) ready.push(i0);

    std::vector<int> topo;
    topo.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        int a0 = ready.front();
        ready.pop();
        topo.push_back(a0);
        for (int b0 : elements(succ[static_cast<std::size_t>(a0)]))
            if (--indeg[static_cast<std::size_t>(b0)] == 0) ready.push(b0);
    }
    if (static_cast<int>(topo.size()) != n)
        throw CycleError("cover relation contains a directed cycle");

    Poset p;
    p.n_ = n;
    p.down_.assign(static_cast<std::size_t>(n), 0);
    for (int i0 : topo) {
        Subset d = bit(i0);
        for (int a0 : elements(pred[static_cast<std::size_t>(i0)]))
            d |= p.down_[static_cast<std::size_t>(a0)];
        p.down_[static_cast<std::size_t>(i0)] = d;
    }
    p.rebuild_up();
    return p;
}

Poset Poset::from_down_masks(const std::vector<Subset>& down) {
    int n = static_cast<int>(down.size());
    if (n > kMaxGround) throw RangeError("poset too large");
    Poset p;
    p.n_ = n;
    p.down_ = down;
    for (int i0 = 0; i0 < n; ++i0) {
        Subset d = down[static_cast<std::size_t>(i0)];
        if (!contains(d, i0) || (d & ~full_mask(i0 + 1)) != 0)
            throw RangeError("down-mask not naturally labeled");
    }
    p.rebuild_up();
    return p;
}

void Poset::rebuild_up() {
    up_.assign(static_cast<std::size_t>(n_), 0);
    for (int j0 = 0; j0 < n_; ++j0)
        for (int i0 : elements(down_[static_cast<std::size_t>(j0)]))
            up_[static_cast<std::size_t>(i0)] |= bit(j0);
}

Subset Poset::closure(Subset s) const {
    Subset out = 0;
    for (int i0 : elements(s & ground())) out |= down(i0);
    return out;
}

Subset Poset::upset_closure(Subset s) const {
    Subset out = 0;
    for (int i0 : elements(s & ground())) out |= up(i0);
    return out;
}

Subset Poset::maximal_in(Subset s) const {
    Subset out = 0;
    for (int i0 : elements(s))
        if ((up(i0) & s) == bit(i0)) out |= bit(i0);
    return out;
}

Subset Poset::minimal_in(Subset s) const {
    Subset out = 0;
    for (int i0 : elements(s))
        if ((down(i0) & s) == bit(i0)) out |= bit(i0);
    return out;
}

int Poset::height_of(Subset s) const {
    s &= ground();
    // h[i] = longest chain inside S ending at i; process by increasing
    // |down(i) & S| so predecessors are done first.
    std::vector<int> order = elements(s);
    std::sort(order.begin(), order.end(), [&](int a0, int b0) {
        return popcount(down(a0) & s) < popcount(down(b0) & s);
    });
    std::vector<int> h(static_cast<std::size_t>(n_), 0);
    int best = 0;
    for (int i0 : order) {
        int below = 0;
        for (int j0 : elements((down(i0) & s) & ~bit(i0)))
            below = std::max(below, h[static_cast<std::size_t>(j0)]);
        h[static_cast<std::size_t>(i0)] = below + 1;
        best = std::max(best, below + 1);
    }
    return best;
}

Poset Poset::induced(Subset s, std::vector<int>* index_map) const {
    s &= ground();
    std::vector<int> old_ids = elements(s);
    int m = static_cast<int>(old_ids.size());
    std::vector<int> new_of(static_cast<std::size_t>(n_), -1);
    for (int k = 0; k < m; ++k)
        new_of[static_cast<std::size_t>(old_ids[static_cast<std::size_t>(k)])] = k;

    Poset q;
    q.n_ = m;
    q.down_.assign(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
        Subset d = 0;
        for (int j0 : elements(down(old_ids[static_cast<std::size_t>(k)]) & s))
            d |= bit(new_of[static_cast<std::size_t>(j0)]);
        q.down_[static_cast<std::size_t>(k)] = d;
    }
    q.rebuild_up();
    if (index_map) *index_map = std::move(old_ids);
    return q;
}

std::vector<std::pair<int, int>> Poset::cover_pairs_1based() const {
    std::vector<std::pair<int, int>> out;
    for (int b0 = 0; b0 < n_; ++b0) {
        Subset strictly_below = down(b0) & ~bit(b0);
        for (int a0 : elements(strictly_below)) {
            // a covered by b iff nothing sits strictly between them.
            bool covered = (up(a0) & strictly_below) == bit(a0);
            if (covered) out.emplace_back(a0 + 1, b0 + 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Poset chain(int n) {
    if (n < 1 || n > kMaxGround)
        throw RangeError("chain size must be in 1..64, got " + std::to_string(n));
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    return Poset::from_covers(n, covers);
}

Poset antichain(int n) {
    if (n < 1 || n > kMaxGround)
        throw RangeError("antichain size must be in 1..64, got " +
                         std::to_string(n));
    return Poset::from_covers(n, {});
}

Poset disjoint_chains(const std::vector<int>& lengths) {
    if (lengths.empty())
        throw RangeError("disjoint chains need at least one chain");
    long long total = 0;
    for (int len : lengths) {
        if (len < 1)
            throw RangeError("chain length must be positive, got " +
                             std::to_string(len));
        total += len;
    }
    if (total > kMaxGround)
        throw RangeError("disjoint chains need " + std::to_string(total) +
                         " elements, limit is 64");
    std::vector<std::pair<int, int>> covers;
    int base = 0;
    for (int len : lengths) {
        for (int i = 1; i < len; ++i)
            covers.emplace_back(base + i, base + i + 1);
        base += len;
    }
    return Poset::from_covers(static_cast<int>(total), covers);
}

Poset crown(int t) {
    if (t < 2 || 2 * t > kMaxGround)
        throw RangeError("crown parameter must be in 2..32, got " +
                         std::to_string(t));
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= t; ++i) {
        covers.emplace_back(i, t + i);
        covers.emplace_back(i % t + 1, t + i);
    }
    return Poset::from_covers(2 * t, covers);
}

} // namespace posetcode
