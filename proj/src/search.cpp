#include "posetcode/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "posetcode/errors.hpp"
#include "posetcode/ideals.hpp"
#include "posetcode/isomorphism.hpp"
#include "posetcode/metric.hpp"

namespace posetcode {

namespace {

struct CoverState {
    const std::vector<Subset>* members = nullptr; // ball, ascending
    int n = 0;
    std::uint64_t node_limit = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::vector<std::uint64_t> covered;
    std::vector<Subset> centers;
    std::optional<std::vector<Subset>> solution;

    void init(const std::vector<Subset>& ball_members, int n_,
              std::uint64_t limit) {
        members = &ball_members;
        n = n_;
        node_limit = limit;
        covered.assign((std::size_t{1} << n) / 64 + 1, 0);
    }

    bool is_covered(Subset v) const {
        return (covered[v >> 6] >> (v & 63)) & 1;
    }

    bool ball_free(Subset c) const {
        for (Subset b : *members) {
            if (is_covered(c ^ b)) {
                return false;
            }
        }
        return true;
    }

    void mark(Subset c) {
        for (Subset b : *members) {
            Subset v = c ^ b;
            covered[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
    }

    void unmark(Subset c) {
        for (Subset b : *members) {
            Subset v = c ^ b;
            covered[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }

    Subset lowest_uncovered(Subset from) const {
        Subset total = Subset{1} << n;
        for (Subset w = from >> 6; w < covered.size(); ++w) {
            std::uint64_t free_bits = ~covered[w];
            if (w == from >> 6) {
                free_bits &= ~std::uint64_t{0} << (from & 63);
            }
            if (free_bits != 0) {
                Subset v = (w << 6) + static_cast<Subset>(lowest_bit(free_bits));
                return v < total ? v : total;
            }
        }
        return total;
    }

    // Places centers until F^n is covered; true stops the whole search
    // (solution recorded or budget exhausted).
    bool dfs(Subset from) {
        Subset v = lowest_uncovered(from);
        if (v == (Subset{1} << n)) {
            solution = centers;
            return true;
        }
        // every center covering v has the form v ^ b; try them ascending
        std::vector<Subset> cands;
        cands.reserve(members->size());
        for (Subset b : *members) {
            cands.push_back(v ^ b);
        }
        std::sort(cands.begin(), cands.end());
        for (Subset c : cands) {
            ++nodes;
            if (node_limit != 0 && nodes > node_limit) {
                budget_hit = true;
                return true;
            }
            if (!ball_free(c)) {
                continue;
            }
            mark(c);
            centers.push_back(c);
            if (dfs(v + 1)) {
                return true;
            }
            centers.pop_back();
            unmark(c);
        }
        return false;
    }
};

} // namespace

SearchResult find_perfect_code(const Poset& p, int r,
                               const SearchConfig& cfg) {
    if (p.n() > cfg.max_n) {
        throw CapExceeded("search supports n <= max_n");
    }
    BallProfile b = ball(p, r);
    if (!b.members) {
        throw CapExceeded("ball too large to materialize for search");
    }
    SearchResult out;
    out.ball_size = b.size;
    if ((std::uint64_t{1} << p.n()) % b.size != 0) {
        out.status = SearchStatus::none;
        return out;
    }
    const std::vector<Subset>& members = *b.members;

    CoverState root;
    root.init(members, p.n(), cfg.node_limit);
    Subset resume_from = 0;
    if (cfg.fix_zero) {
        root.mark(0);
        root.centers.push_back(0);
        resume_from = 1;
    }

    if (cfg.parallel_width <= 1) {
        root.dfs(resume_from);
        out.nodes = root.nodes;
        if (root.solution) {
            out.status = SearchStatus::found;
            out.code = Code::explicit_code(p.n(), *root.solution);
        } else {
            out.status = root.budget_hit ? SearchStatus::budget_exceeded
                                         : SearchStatus::none;
        }
        return out;
    }

    // Deterministic split: branch once at the first uncovered vector, hand
    // each first-level candidate subtree to the worker pool, and keep the
    // solution from the earliest candidate.
    Subset v = root.lowest_uncovered(resume_from);
    if (v == (Subset{1} << p.n())) {
        out.status = SearchStatus::found;
        out.code = Code::explicit_code(p.n(), root.centers);
        out.nodes = root.nodes;
        return out;
    }
    std::vector<Subset> cands;
    for (Subset member : members) {
        cands.push_back(v ^ member);
    }
    std::sort(cands.begin(), cands.end());

    struct TaskOutcome {
        std::optional<std::vector<Subset>> solution;
        std::uint64_t nodes = 0;
        bool budget_hit = false;
    };
    std::vector<TaskOutcome> outcomes(cands.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= cands.size()) {
                return;
            }
            Subset c = cands[idx];
            CoverState st;
            st.init(members, p.n(), cfg.node_limit);
            st.covered = root.covered;
            st.centers = root.centers;
            ++st.nodes;
            if (st.ball_free(c)) {
                st.mark(c);
                st.centers.push_back(c);
                st.dfs(v + 1);
            }
            outcomes[idx].solution = std::move(st.solution);
            outcomes[idx].nodes = st.nodes;
            outcomes[idx].budget_hit = st.budget_hit;
        }
    };
    std::vector<std::thread> threads;
    int width = std::min<int>(cfg.parallel_width,
                              static_cast<int>(cands.size()));
    threads.reserve(static_cast<std::size_t>(width));
    for (int t = 0; t < width; ++t) {
        threads.emplace_back(worker);
    }
    for (std::thread& t : threads) {
        t.join();
    }
    for (const TaskOutcome& o : outcomes) {
        out.nodes += o.nodes;
    }
    for (const TaskOutcome& o : outcomes) {
        if (o.solution) {
            out.status = SearchStatus::found;
            out.code = Code::explicit_code(p.n(), *o.solution);
            return out;
        }
        if (o.budget_hit) {
            out.status = SearchStatus::budget_exceeded;
            return out;
        }
    }
    out.status = SearchStatus::none;
    return out;
}

namespace {

// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - k + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                idx[static_cast<std::size_t>(j)] =
                    idx[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        idx[static_cast<std::size_t>(i)] = i;
    }
    return idx;
}

} // namespace

std::optional<Poset> find_poset_labeling(const Code& code, int r,
                                         const LabelingShape& shape) {
    if (shape.n > 10) {
        throw RangeError("labeling search supports n <= 10");
    }
    if (shape.n != code.n()) {
        throw SizeMismatch("shape size differs from code length");
    }
    int q = static_cast<int>(shape.nonmax_valencies.size());
    if (q + shape.max_count != shape.n) {
        throw SizeMismatch("element counts do not add up to n");
    }
    for (int v : shape.nonmax_valencies) {
        if (v < 1 || v > shape.max_count) {
            throw RangeError("valency out of range");
        }
    }
    auto m = code.codimension();
    if (!m) {
        return std::nullopt; // perfect codes have power-of-two cardinality
    }
    std::vector<Subset> words = code.words();

    std::vector<int> valencies = shape.nonmax_valencies;
    std::sort(valencies.begin(), valencies.end());

    std::vector<int> nonmax_pos = first_combination(q);
    do {
        std::vector<int> perm = valencies;
        do {
            // per-nonmaximal choices of covered maximal elements
            std::vector<int> max_pos;
            for (int i = 0; i < shape.n; ++i) {
                if (std::find(nonmax_pos.begin(), nonmax_pos.end(), i) ==
                    nonmax_pos.end()) {
                    max_pos.push_back(i);
                }
            }
            std::vector<std::vector<int>> choice(
                static_cast<std::size_t>(q));
            for (int i = 0; i < q; ++i) {
                choice[static_cast<std::size_t>(i)] = first_combination(
                    perm[static_cast<std::size_t>(i)]);
            }
            for (;;) {
                std::vector<std::pair<int, int>> covers;
                for (int i = 0; i < q; ++i) {
                    for (int sel : choice[static_cast<std::size_t>(i)]) {
                        covers.emplace_back(
                            nonmax_pos[static_cast<std::size_t>(i)] + 1,
                            max_pos[static_cast<std::size_t>(sel)] + 1);
                    }
                }
                Poset p = Poset::from_covers(shape.n, covers);
                // cheap cardinality screen before the pairwise packing scan
                if (ball(p, r).size == (std::uint64_t{1} << *m) &&
                    is_perfect(p, Code::explicit_code(shape.n, words), r)
                        .perfect) {
                    return p;
                }
                int bump = q - 1;
                while (bump >= 0 &&
                       !next_combination(choice[static_cast<std::size_t>(bump)],
                                         shape.max_count)) {
                    choice[static_cast<std::size_t>(bump)] =
                        first_combination(perm[static_cast<std::size_t>(bump)]);
                    --bump;
                }
                if (bump < 0) {
                    break;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (next_combination(nonmax_pos, shape.n));
    return std::nullopt;
}

std::vector<CatalogRecord> exhaust_small_posets(int n_max, int m_offset,
                                                const SearchConfig& cfg) {
    if (n_max < 1 || n_max > 8) {
        throw CapExceeded("catalog sweep supports n_max <= 8");
    }
    if (m_offset < 0) {
        throw RangeError("offset must be nonnegative");
    }
    std::vector<CatalogRecord> records;
    for (int n = 1; n <= n_max; ++n) {
        for (const Poset& p : all_posets_up_to_iso(n)) {
            for (int m = m_offset; m <= n; ++m) {
                int r = m - m_offset;
                CatalogRecord rec;
                rec.poset = p;
                rec.m = m;
                rec.r = r;
                rec.battery = run_battery(p, m, r).overall;
                SearchResult sr = find_perfect_code(p, r, cfg);
                rec.oracle = sr.status;
                rec.ball_size = sr.ball_size;
                rec.perfect_exists =
                    sr.status == SearchStatus::found &&
                    sr.ball_size == (std::uint64_t{1} << m);
                if (sr.status == SearchStatus::budget_exceeded) {
                    rec.agreement = true; // cannot judge
                } else {
                    bool battery_no =
                        rec.battery == Verdict::nonexistence_proven;
                    bool battery_yes =
                        rec.battery == Verdict::existence_constructed;
                    rec.agreement = !(battery_no && rec.perfect_exists) &&
                                    !(battery_yes && !rec.perfect_exists);
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

} // namespace posetcode
