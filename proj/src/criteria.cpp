#include "posetcode/criteria.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetcode/errors.hpp"
#include "posetcode/ideals.hpp"
#include "posetcode/metric.hpp"

namespace posetcode {

namespace {

using json = nlohmann::json;
using boost::multiprecision::cpp_int;

json mask_json(Subset s) { return to_elements_1based(s); }

cpp_int binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    cpp_int value = 1;
    for (int i = 0; i < k; ++i) {
        value *= n - i;
        value /= i + 1;
    }
    return value;
}

// Recognizes crown posets in linear time: two levels of t elements each
// whose cover graph is a single 2t-cycle.  On success out[i] is the vertex
// of p playing crown role i (minimal roles 0..t-1, maximal role t+i
// covering the minimals i and (i+1) mod t).  Generic canonical labeling is
// avoided here on purpose: a crown's rotational symmetry makes its tie
// branching factorial in t.
std::optional<std::vector<int>> crown_labeling(const Poset& p) {
    int n = p.n();
    if (n % 2 != 0 || n < 4) {
        return std::nullopt;
    }
    int t = n / 2;
    std::vector<int> mins;
    int max_count = 0;
    for (int v = 0; v < n; ++v) {
        Subset below = p.down(v) & ~bit(v);
        Subset above = p.up(v) & ~bit(v);
        if (below == 0 && popcount(above) == 2) {
            mins.push_back(v);
        } else if (above == 0 && popcount(below) == 2) {
            ++max_count;
        } else {
            return std::nullopt;
        }
    }
    if (static_cast<int>(mins.size()) != t || max_count != t) {
        return std::nullopt;
    }
    std::vector<int> role(2 * t);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    int cur_min = mins[0];
    role[0] = cur_min;
    used[static_cast<std::size_t>(cur_min)] = true;
    int prev_max = -1;
    for (int i = 0; i < t; ++i) {
        Subset above = p.up(cur_min) & ~bit(cur_min);
        int next_max = -1;
        for (int x : elements(above)) {
            if (x != prev_max) {
                next_max = x;
                break;
            }
        }
        if (next_max < 0 || used[static_cast<std::size_t>(next_max)]) {
            return std::nullopt;
        }
        role[static_cast<std::size_t>(t + i)] = next_max;
        used[static_cast<std::size_t>(next_max)] = true;
        Subset below = p.down(next_max) & ~bit(next_max);
        int next_min = -1;
        for (int w : elements(below)) {
            if (w != cur_min) {
                next_min = w;
            }
        }
        if (i + 1 == t) {
            // the last maximal must close the cycle back to the start
            if (next_min != role[0]) {
                return std::nullopt;
            }
        } else {
            if (next_min < 0 || used[static_cast<std::size_t>(next_min)]) {
                return std::nullopt;
            }
            role[static_cast<std::size_t>(i + 1)] = next_min;
            used[static_cast<std::size_t>(next_min)] = true;
        }
        prev_max = next_max;
        cur_min = next_min;
    }
    return role;
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::nonexistence_proven: return "nonexistence_proven";
        case Verdict::existence_constructed: return "existence_constructed";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Reduction reduce(const Poset& p, int r) {
    IdealFamily fam = enumerate_ideals(p, r);
    Reduction red;
    red.u = fam.u;
    red.r_prime = r - fam.u;
    red.core_mask = fam.core_mask;
    red.essential_mask = fam.essential_mask;
    red.free_mask = p.ground() & ~fam.union_mask;
    red.q = p.induced(fam.essential_mask, &red.index_map);
    return red;
}

Code lift_code(const Reduction& red, int n_full, const Code& q_code) {
    int free_bits = popcount(red.free_mask);
    std::uint64_t q_count = q_code.cardinality();
    if (free_bits >= 32 || (q_count << free_bits) > (std::uint64_t{1} << 24)) {
        throw CapExceeded("lifted code too large to list");
    }
    std::vector<Subset> words;
    words.reserve(q_count << free_bits);
    for (Subset qw : q_code.words()) {
        Subset base = 0;
        for (int v : elements(qw)) {
            base |= bit(red.index_map[static_cast<std::size_t>(v)]);
        }
        for_each_subset(red.free_mask,
                        [&](Subset y) { words.push_back(base | y); });
    }
    return Code::explicit_code(n_full, std::move(words));
}

CheckResult check_rm(int n, int m, int r) {
    if (r < 0 || m < 0 || m > n) {
        throw RangeError("invalid (n, m, r)");
    }
    CheckResult out;
    out.witness = {{"n", n}, {"m", m}, {"r", r}};
    out.verdict =
        r > m ? Verdict::nonexistence_proven : Verdict::inconclusive;
    return out;
}

CheckResult check_union_bound(const Poset& p, int m, int r) {
    IdealFamily fam = enumerate_ideals(p, r);
    CheckResult out;
    for (std::size_t i = 0; i < fam.ideals.size(); ++i) {
        for (std::size_t j = i; j < fam.ideals.size(); ++j) {
            Subset u = fam.ideals[i] | fam.ideals[j];
            if (popcount(u) > m) {
                out.verdict = Verdict::nonexistence_proven;
                out.witness = {{"ideal1", mask_json(fam.ideals[i])},
                               {"ideal2", mask_json(fam.ideals[j])},
                               {"union_size", popcount(u)},
                               {"m", m}};
                return out;
            }
        }
    }
    out.verdict = Verdict::inconclusive;
    out.witness = {{"max_union_within", m}};
    return out;
}

CheckResult check_v_cover(const Poset& p, int r, Subset v) {
    if (p_weight(p, v) <= r) {
        throw RangeError("vector weight must exceed the radius");
    }
    IdealFamily fam = enumerate_ideals(p, r);
    CheckResult out;
    json pairs = json::array();
    for (Subset ideal : fam.ideals) {
        Subset target = p.closure(v) | ideal;
        bool found = false;
        for (std::size_t i = 0; i < fam.ideals.size() && !found; ++i) {
            for (std::size_t j = i; j < fam.ideals.size(); ++j) {
                if (is_subset(target, fam.ideals[i] | fam.ideals[j])) {
                    pairs.push_back({{"ideal", mask_json(ideal)},
                                     {"cover1", mask_json(fam.ideals[i])},
                                     {"cover2", mask_json(fam.ideals[j])}});
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            out.verdict = Verdict::inconclusive;
            out.witness = {{"v", mask_json(v)},
                           {"uncoverable_ideal", mask_json(ideal)}};
            return out;
        }
    }
    out.verdict = Verdict::nonexistence_proven;
    out.witness = {{"v", mask_json(v)}, {"covering_pairs", pairs}};
    return out;
}

CheckResult check_cor_II(const Poset& p, int r, Subset big_v) {
    if (!p.is_ideal(big_v) || popcount(big_v) != r + 1) {
        throw InvalidIdeal("V must be an ideal of cardinality r+1");
    }
    Subset max_v = p.maximal_in(big_v);
    Subset w = shadow_w(p, big_v);
    IdealFamily fam = enumerate_ideals(p, r);
    bool cond_a = true;
    Subset avoider = 0;
    for (Subset ideal : fam.ideals) {
        if ((ideal & max_v) == 0) {
            cond_a = false;
            avoider = ideal;
            break;
        }
    }
    bool cond_b = popcount(w) < r;
    if (cond_a != cond_b) {
        throw Error("internal: the two nonexistence conditions disagree");
    }
    CheckResult out;
    out.verdict =
        cond_a ? Verdict::nonexistence_proven : Verdict::inconclusive;
    out.witness = {{"V", mask_json(big_v)},
                   {"max_V", mask_json(max_v)},
                   {"W", mask_json(w)},
                   {"W_size", popcount(w)},
                   {"every_ideal_meets_max", cond_a},
                   {"W_below_r", cond_b}};
    if (!cond_a) {
        out.witness["avoiding_ideal"] = mask_json(avoider);
    }
    return out;
}

CheckResult auto_v_search(const Poset& p, int r) {
    CheckResult out;
    if (r + 1 > p.n()) {
        out.verdict = Verdict::inconclusive;
        out.witness = {{"note", "no ideals of cardinality r+1"}};
        return out;
    }
    std::vector<std::pair<std::string, Subset>> candidates;
    auto add = [&](const std::string& label, Subset v) {
        if (!p.is_ideal(v) || popcount(v) != r + 1) {
            return;
        }
        bool dup = std::any_of(candidates.begin(), candidates.end(),
                               [&](const auto& c) { return c.second == v; });
        if (!dup) {
            candidates.emplace_back(label, v);
        }
    };
    Subset mins = p.minimal();
    if (popcount(mins) == r + 1) {
        add("minimal-elements", mins);
    }
    for (int a : elements(mins)) {
        Subset p_a = p.ground() & ~p.up(a);
        if (popcount(p_a) == r) {
            add("filter-complement", p_a | bit(a));
        }
    }
    if (p.n() % 2 == 0 && p.n() >= 4) {
        int t = p.n() / 2;
        if (auto iso = crown_labeling(p)) {
            Subset v_crown = 0;
            if (t <= r && r < p.n()) {
                v_crown = full_mask(r + 1);
            } else if (2 * r >= t && r < t) {
                v_crown = full_mask(t);
                for (int even = 2; even <= 2 * (t - r - 1); even += 2) {
                    v_crown &= ~bit(even - 1);
                }
            }
            if (v_crown != 0) {
                Subset mapped = 0;
                for (int v : elements(v_crown)) {
                    mapped |= bit((*iso)[static_cast<std::size_t>(v)]);
                }
                add("crown-prefix", mapped);
            }
        }
    }
    if (popcount(mins) <= r + 1) {
        add("adjusted-minimal", adjust_ideal(p, mins, r + 1));
    }
    if (p.n() <= 16) {
        for (Subset v : enumerate_ideals(p, r + 1).ideals) {
            add("exhaustive", v);
        }
    }
    json tried = json::array();
    for (const auto& [label, v] : candidates) {
        CheckResult inner = check_cor_II(p, r, v);
        if (inner.verdict == Verdict::nonexistence_proven) {
            out.verdict = Verdict::nonexistence_proven;
            out.witness = {{"strategy", label}, {"cor_II", inner.witness}};
            return out;
        }
        tried.push_back({{"strategy", label}, {"V", mask_json(v)}});
    }
    out.verdict = Verdict::inconclusive;
    out.witness = {{"tried", tried}};
    return out;
}

CheckResult check_two_cover(const Poset& p, int r) {
    IdealFamily fam = enumerate_ideals(p, r);
    CheckResult out;
    for (std::size_t i = 0; i < fam.ideals.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.ideals.size(); ++j) {
            if ((fam.ideals[i] | fam.ideals[j]) == fam.union_mask) {
                out.verdict = Verdict::nonexistence_proven;
                out.witness = {{"ideal1", mask_json(fam.ideals[i])},
                               {"ideal2", mask_json(fam.ideals[j])},
                               {"P_r", mask_json(fam.union_mask)}};
                return out;
            }
        }
    }
    out.verdict = Verdict::inconclusive;
    out.witness = {{"ideal_count", fam.ideals.size()}};
    return out;
}

CheckResult check_lambda_range(int m, int r, int lambda) {
    if (r >= m) {
        throw RangeError("bound applies only to r < m");
    }
    CheckResult out;
    int gap = m - r;
    bool low = lambda <= gap;
    bool high = gap + 1 < 63 &&
                static_cast<std::uint64_t>(lambda) >
                    (std::uint64_t{1} << (gap + 1)) - 2;
    out.verdict = (low || high) ? Verdict::nonexistence_proven
                                : Verdict::inconclusive;
    out.witness = {{"lambda", lambda},
                   {"low_bound_exclusive", gap},
                   {"violates_low", low},
                   {"violates_high", high}};
    return out;
}

CheckResult check_height(const Poset& p, int m, int r) {
    IdealFamily fam = enumerate_ideals(p, r);
    int h = p.height_of(fam.essential_mask);
    CheckResult out;
    out.verdict = h > m - r ? Verdict::nonexistence_proven
                            : Verdict::inconclusive;
    out.witness = {{"essential", mask_json(fam.essential_mask)},
                   {"height", h},
                   {"bound", m - r}};
    return out;
}

CheckResult check_upset_ball(const Poset& p, Subset upset, int m, int r) {
    if (!p.is_upset(upset)) {
        throw InvalidUpset("U must be an upset");
    }
    int l = p.n() - popcount(upset);
    if (l > r) {
        throw RangeError("complement of U must have at most r elements");
    }
    BallProfile b = ball(p.induced(upset), r - l);
    CheckResult out;
    bool fires;
    bool equality = false;
    if (m - l < 0) {
        fires = true;
    } else {
        unsigned __int128 threshold = static_cast<unsigned __int128>(1)
                                      << (m - l);
        fires = b.size > threshold;
        equality = b.size == threshold;
    }
    out.verdict =
        fires ? Verdict::nonexistence_proven : Verdict::inconclusive;
    out.witness = {{"U", mask_json(upset)},
                   {"l", l},
                   {"ball_size", b.size},
                   {"threshold_log2", m - l},
                   {"equality", equality}};
    if (equality) {
        out.witness["equality_forces"] =
            "any r-error-correcting code of codimension m is perfect and "
            "the essential part lies inside U";
    }
    return out;
}

CheckResult check_k_inequality(int m, int r, int lambda, int k) {
    if (m < 0 || r < 0 || lambda < 0) {
        throw RangeError("invalid (m, r, lambda)");
    }
    CheckResult out;
    if (k < lambda) {
        out.verdict = Verdict::inconclusive;
        out.witness = {{"note", "k < lambda, bound not applicable"},
                       {"k", k},
                       {"lambda", lambda}};
        return out;
    }
    // Scaled by 2^k to stay in integers:
    //   2^{r+lambda+k} - 2^{r+lambda} * sum <= 2^{m+k}.
    cpp_int sum = 0;
    for (int s = 0; s < lambda; ++s) {
        sum += binomial(k, s);
    }
    cpp_int lhs = (cpp_int{1} << (r + lambda + k)) -
                  (cpp_int{1} << (r + lambda)) * sum;
    cpp_int rhs = cpp_int{1} << (m + k);
    out.verdict = lhs > rhs ? Verdict::nonexistence_proven
                            : Verdict::inconclusive;
    out.witness = {{"m", m},
                   {"r", r},
                   {"lambda", lambda},
                   {"k", k},
                   {"lhs_times_2k", lhs.str()},
                   {"rhs_times_2k", rhs.str()},
                   {"holds", lhs <= rhs}};
    return out;
}

CheckResult check_abcc(const Poset& p, int m, int r) {
    IdealFamily fam = enumerate_ideals(p, r);
    if (fam.core_mask != 0 || fam.union_mask != p.ground()) {
        throw ShapeMismatch("poset must equal its own essential part");
    }
    int lambda = p.n() - r;
    CheckResult out;
    for (int a = 0; a < p.n(); ++a) {
        int outside = p.n() - popcount(p.down(a));
        if (outside < lambda) {
            out.verdict = Verdict::nonexistence_proven;
            out.witness = {{"sub_check", "a"},
                           {"element", a + 1},
                           {"outside_closure", outside},
                           {"lambda", lambda}};
            return out;
        }
    }
    int pair_bound = r + lambda - m;
    for (int a = 0; a < p.n(); ++a) {
        for (int a2 = a; a2 < p.n(); ++a2) {
            int outside =
                p.n() - popcount(p.closure(bit(a) | bit(a2)));
            if (outside < pair_bound) {
                out.verdict = Verdict::nonexistence_proven;
                out.witness = {{"sub_check", "b"},
                               {"element1", a + 1},
                               {"element2", a2 + 1},
                               {"outside_closure", outside},
                               {"bound", pair_bound}};
                return out;
            }
        }
    }
    for (int b = 0; b < p.n(); ++b) {
        int upset_size = popcount(p.up(b));
        if (upset_size > lambda) {
            out.verdict = Verdict::nonexistence_proven;
            out.witness = {{"sub_check", "c"},
                           {"element", b + 1},
                           {"upset_size", upset_size},
                           {"lambda", lambda}};
            return out;
        }
    }
    out.verdict = Verdict::inconclusive;
    out.witness = {{"lambda", lambda}, {"pair_bound", pair_bound}};
    return out;
}

namespace {

json code_summary(const Code& c) {
    json j = {{"n", c.n()},
              {"cardinality", c.cardinality()},
              {"linear", c.is_linear()}};
    if (auto m = c.codimension()) {
        j["codimension"] = *m;
    }
    return j;
}

} // namespace

CriterionReport run_battery(const Poset& p, int m, int r) {
    if (r < 0 || r > p.n() || m < 0 || m > p.n()) {
        throw RangeError("invalid (m, r) for this poset");
    }
    IdealFamily fam = enumerate_ideals(p, r);
    Reduction red = reduce(p, r);

    CriterionReport report;
    report.context = {p.n(), m, r, fam.lambda, fam.u, fam.k};

    auto push = [&](const std::string& id, CheckResult result) {
        report.entries.push_back({id, std::move(result)});
    };

    push("rm", check_rm(p.n(), m, r));
    if (r < m) {
        push("lambda-range", check_lambda_range(m, r, fam.lambda));
    }
    push("k-inequality", check_k_inequality(m, r, fam.lambda, fam.k));
    push("height", check_height(p, m, r));
    push("ball-bound", check_upset_ball(p, p.ground(), m, r));
    push("union-bound", check_union_bound(p, m, r));
    push("two-cover", check_two_cover(p, r));
    push("ideal-shadow", auto_v_search(p, r));
    {
        CheckResult abcc = check_abcc(red.q, m - red.u, r - red.u);
        // translate element witnesses back to the original labels
        if (abcc.witness.contains("element")) {
            int q0 = abcc.witness["element"].get<int>() - 1;
            abcc.witness["element"] =
                red.index_map[static_cast<std::size_t>(q0)] + 1;
        }
        for (const char* key : {"element1", "element2"}) {
            if (abcc.witness.contains(key)) {
                int q0 = abcc.witness[key].get<int>() - 1;
                abcc.witness[key] =
                    red.index_map[static_cast<std::size_t>(q0)] + 1;
            }
        }
        push("element-bounds", std::move(abcc));
    }

    bool nonexistence = false;
    for (const CriterionEntry& e : report.entries) {
        nonexistence |= e.result.verdict == Verdict::nonexistence_proven;
    }

    if (!nonexistence && m - r == 0) {
        CheckResult cons;
        try {
            Code code = construct_m_perfect(p, m);
            cons.verdict = Verdict::existence_constructed;
            cons.witness = code_summary(code);
            report.constructed = std::move(code);
        } catch (const NotUnique&) {
            IdealFamily mfam = enumerate_ideals(p, m);
            cons.verdict = Verdict::nonexistence_proven;
            cons.witness = {{"reason", "no unique ideal of cardinality m"},
                            {"ideal_count", mfam.ideals.size()}};
            if (mfam.ideals.size() >= 2) {
                cons.witness["ideal1"] = mask_json(mfam.ideals[0]);
                cons.witness["ideal2"] = mask_json(mfam.ideals[1]);
            }
        } catch (const CapExceeded& e) {
            cons.verdict = Verdict::inconclusive;
            cons.witness = {{"note", e.what()}};
        }
        push("unique-ideal-construction", std::move(cons));
    } else if (!nonexistence && m - r == 1 && m >= 2) {
        ThreeIdealShape shape = theorem_th1_check(p, m);
        CheckResult cons;
        if (shape.holds) {
            Code code = construct_m1_perfect(p, m);
            cons.verdict = Verdict::existence_constructed;
            cons.witness = code_summary(code);
            cons.witness["core"] = mask_json(shape.core);
            cons.witness["triple"] = {shape.a0[0] + 1, shape.a0[1] + 1,
                                      shape.a0[2] + 1};
            report.constructed = std::move(code);
        } else {
            cons.verdict = Verdict::nonexistence_proven;
            cons.witness = {{"refutation", shape.refutation}};
        }
        push("three-ideal-construction", std::move(cons));
    } else if (!nonexistence && m - r == 2) {
        CheckResult cons;
        try {
            ShapeClass cls = classify_m2(p, m);
            if (cls.admissible) {
                cons.verdict = Verdict::existence_constructed;
                cons.witness = {{"shape", cls.shape_name}};
                if (cls.example) {
                    cons.witness["code"] = code_summary(*cls.example);
                    report.constructed = cls.example;
                }
            } else {
                cons.verdict = Verdict::nonexistence_proven;
                cons.witness = {
                    {"reason",
                     "essential part matches no admissible shape"},
                    {"essential_size", red.q.n()},
                    {"reduced_radius", red.r_prime}};
            }
        } catch (const CapExceeded& e) {
            cons.verdict = Verdict::inconclusive;
            cons.witness = {{"note", e.what()}};
        }
        push("essential-shape", std::move(cons));
    }

    report.overall = Verdict::inconclusive;
    for (const CriterionEntry& e : report.entries) {
        if (e.result.verdict == Verdict::nonexistence_proven) {
            report.overall = Verdict::nonexistence_proven;
            break;
        }
        if (e.result.verdict == Verdict::existence_constructed) {
            report.overall = Verdict::existence_constructed;
        }
    }
    return report;
}

} // namespace posetcode
