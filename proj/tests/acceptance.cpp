// Acceptance suite: twelve end-to-end criteria exercised against the
// library, each reported as a single PASS/FAIL line (plus indented notes
// where an outcome needs explanation).  Criterion 9 is expected to fail:
// the computed table of admissible (lambda, k) pairs provably contains one
// pair more than the quoted reference list, and faking agreement would hide
// that.  The process exits with the number of criteria whose outcome
// differs from this documented expectation, so the suite as a whole guards
// both the eleven green criteria and the exact shape of the red one.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/codes.hpp"
#include "posetcode/commands.hpp"
#include "posetcode/criteria.hpp"
#include "posetcode/ideals.hpp"
#include "posetcode/io.hpp"
#include "posetcode/isomorphism.hpp"
#include "posetcode/metric.hpp"
#include "posetcode/poset.hpp"
#include "posetcode/search.hpp"

using namespace posetcode;

namespace {

struct Outcome {
    bool pass = false;
    std::string headline;            // one-line result description
    std::vector<std::string> notes;  // indented context lines
};

struct RandomPosets {
    // Same corpus family as the library's property tests: uniformly random
    // cover candidates, transitively closed.
    static Poset make(std::mt19937& gen, int n, double edge_prob = 0.3) {
        std::vector<std::pair<int, int>> covers;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                if (coin(gen) < edge_prob) {
                    covers.emplace_back(a, b);
                }
            }
        }
        return Poset::from_covers(n, covers);
    }
};

bool fired(const CriterionReport& rep, const std::string& id) {
    for (const CriterionEntry& e : rep.entries) {
        if (e.id == id) {
            return e.result.verdict == Verdict::nonexistence_proven;
        }
    }
    return false;
}

std::string pair_set_string(const std::set<std::pair<int, int>>& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (auto [l, k] : s) {
        if (!first) {
            out << ", ";
        }
        first = false;
        out << "(" << l << "," << k << ")";
    }
    out << "}";
    return out.str();
}

// ---------------------------------------------------------------- 1 -----

Outcome criterion_repetition() {
    Outcome out;
    Poset p = antichain(5);
    Code rep = Code::explicit_code(5, {0, 31});
    VerificationResult v = is_perfect(p, rep, 2);
    BallProfile b = ball(p, 2);
    out.pass = v.packing_ok && v.perfect && b.size == 16;
    std::ostringstream h;
    h << "repetition code {00000,11111} on the 5-antichain is 2-perfect, "
      << "ball size " << b.size;
    out.headline = h.str();
    return out;
}

// ---------------------------------------------------------------- 2 -----

Outcome criterion_length8_code() {
    Outcome out;
    Code z = code_stars_4_2();
    if (z.cardinality() != 16) {
        out.headline = "length-8 code does not have 16 words";
        return out;
    }
    // Candidate shape reconstruction: 6 maximal elements, each above exactly
    // one of 2 nonmaximal elements.  The even valency split {3,3} admits no
    // labeling, which rules that candidate out; the {4,2} split validates.
    LabelingShape even_split{8, 6, {3, 3}};
    bool even_impossible = !find_poset_labeling(z, 2, even_split).has_value();
    LabelingShape split{8, 6, {4, 2}};
    auto labeled = find_poset_labeling(z, 2, split);
    if (!labeled) {
        out.headline = "no {4,2}-split labeling makes the length-8 code "
                       "2-perfect";
        return out;
    }
    // round-trip through the CLI layer: files out, verification back
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    std::string pfile = (dir / "acceptance_s2.poset").string();
    std::string cfile = (dir / "acceptance_s2.code").string();
    write_file(pfile, poset_to_text(*labeled));
    write_file(cfile, code_to_text(z));
    CommandResult verify = cmd_verify(pfile, cfile, 2, false);
    std::remove(pfile.c_str());
    std::remove(cfile.c_str());
    out.pass = even_impossible && verify.exit_code == 0;
    out.headline =
        "16-word length-8 code: {4,2}-split labeling found, verify exit 0";
    if (even_impossible) {
        out.notes.push_back(
            "the {3,3} valency split admits no labeling (candidate shape "
            "ruled out by search), so the admissible two-nonmaximal shape "
            "is the {4,2} split");
    }
    return out;
}

// ---------------------------------------------------------------- 3 -----

Outcome criterion_length9_code() {
    Outcome out;
    Code y = code_net_9();
    LabelingShape shape{9, 6, {4, 4, 4}};
    auto labeled = find_poset_labeling(y, 3, shape);
    if (!labeled) {
        out.headline = "no {4,4,4} labeling found for the length-9 code";
        return out;
    }
    VerificationResult v = is_perfect(*labeled, y, 3);
    out.pass = y.cardinality() == 16 && v.perfect;
    out.headline =
        "16-word length-9 code: {4,4,4} labeling found, code is 3-perfect";
    out.notes.push_back(
        "the code has 16 words, not 32: codimension 5 forces ball size 32, "
        "reached at radius 3, so the correct statement is 3-perfect rather "
        "than 2-perfect");
    return out;
}

// ---------------------------------------------------------------- 4 -----

Outcome criterion_triple_stars_impossible() {
    Outcome out;
    // each of 6 maximal elements above exactly one of 2 nonmaximal elements,
    // with the even valency split {3,3}
    Poset aa = Poset::from_covers(
        8, {{1, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {2, 8}});
    SearchResult res = find_perfect_code(aa, 2);
    out.pass = res.status == SearchStatus::none && res.ball_size == 16;
    std::ostringstream h;
    h << "two-triple-stars poset: exhaustive r=2 search returns none ("
      << res.nodes << " nodes, ball 16 divides 256)";
    out.headline = h.str();
    out.notes.push_back(
        "the impossible split is {3,3}; the {4,2} split admits the 16-word "
        "length-8 code of criterion 2, so the two splits are not "
        "interchangeable");
    return out;
}

// ---------------------------------------------------------------- 5 -----

Outcome criterion_crown3_sweep() {
    Outcome out;
    Poset c3 = crown(3);
    bool ok = true;
    // nonexistence radii: the battery must fire the ideal-shadow criterion
    const std::pair<int, int> battery_mr[] = {{4, 2}, {5, 3}, {6, 5}};
    for (auto [m, r] : battery_mr) {
        CriterionReport rep = run_battery(c3, m, r);
        ok = ok && rep.overall == Verdict::nonexistence_proven &&
             fired(rep, "ideal-shadow");
        ok = ok && find_perfect_code(c3, r).status == SearchStatus::none;
    }
    // the open radius: brute force settles it constructively
    SearchResult open_case = find_perfect_code(c3, 4);
    ok = ok && open_case.status == SearchStatus::found &&
         open_case.ball_size == 32 &&
         is_perfect(c3, *open_case.code, 4).perfect;
    // and the catalog records the same outcome
    bool recorded = false;
    for (const CatalogRecord& row : exhaust_small_posets(6, 1)) {
        if (row.r == 4 && is_isomorphic(row.poset, c3)) {
            recorded = row.perfect_exists && row.agreement &&
                       row.battery == Verdict::existence_constructed;
        }
    }
    ok = ok && recorded;
    out.pass = ok;
    out.headline =
        "crown(3): ideal-shadow proves r in {2,3,5} impossible, brute force "
        "agrees and resolves r=4 (code found), catalog row records it";
    return out;
}

// ---------------------------------------------------------------- 6 -----

Outcome criterion_disjoint_chains() {
    Outcome out;
    Poset d = disjoint_chains({2, 2});
    bool ok = true;
    for (int r = 1; r <= 3; ++r) {
        ok = ok &&
             auto_v_search(d, r).verdict == Verdict::nonexistence_proven;
        ok = ok && find_perfect_code(d, r).status == SearchStatus::none;
    }
    out.pass = ok;
    out.headline = "two disjoint 2-chains: ideal-shadow fires and search "
                   "exhausts for every r in {1,2,3}";
    return out;
}

// ---------------------------------------------------------------- 7 -----

Outcome criterion_ball_oracle() {
    Outcome out;
    std::mt19937 gen(90701);
    int instances = 0;
    bool ok = true;
    for (int trial = 0; trial < 220 && ok; ++trial) {
        int n = 1 + static_cast<int>(gen() % 12);
        Poset p = RandomPosets::make(gen, n);
        for (int r = 0; r <= n && ok; ++r) {
            BallProfile fast = ball(p, r);
            BallProfile slow = ball_oracle(p, r);
            ok = fast.size == slow.size && fast.members && slow.members &&
                 *fast.members == *slow.members;
            ok = ok && fast.size >= (std::uint64_t{1} << r);
            if (r >= 1) {
                std::uint64_t lambda = static_cast<std::uint64_t>(
                    enumerate_ideals(p, r).lambda);
                ok = ok && fast.size >=
                               (std::uint64_t{1} << (r - 1)) * (2 + lambda);
            }
        }
        ++instances;
    }
    out.pass = ok && instances >= 200;
    std::ostringstream h;
    h << "ball == ball_oracle with both lower bounds on " << instances
      << " random posets (n <= 12, every radius)";
    out.headline = h.str();
    return out;
}

// ---------------------------------------------------------------- 8 -----

Outcome criterion_ball_spot_values() {
    Outcome out;
    std::uint64_t matching = ball(disjoint_chains({2, 2, 2, 2}), 2).size;
    std::uint64_t near_antichain =
        ball(Poset::from_covers(6, {{1, 2}}), 2).size;
    std::uint64_t two_edges =
        ball(Poset::from_covers(7, {{1, 3}, {2, 4}}), 2).size;
    out.pass = matching == 19 && near_antichain == 18 && two_edges == 20;
    std::ostringstream h;
    h << "spot values: matching poset " << matching << ", 1+5 upset "
      << near_antichain << ", 2+5 upset " << two_edges
      << " (expected 19, 18, 20)";
    out.headline = h.str();
    return out;
}

// ---------------------------------------------------------------- 9 -----

Outcome criterion_lambda_k_table() {
    Outcome out;
    // reference list quoted for the admissible pairs with 3 <= lambda <= 6
    const std::set<std::pair<int, int>> quoted = {
        {3, 3}, {3, 4}, {3, 5}, {4, 3}, {4, 4}, {4, 5}, {5, 3},
        {5, 4}, {5, 5}, {5, 6}, {6, 3}, {6, 4}, {6, 5}, {6, 6}};
    std::set<std::pair<int, int>> computed;
    for (int lambda = 3; lambda <= 6; ++lambda) {
        for (int k = 3; k <= 12; ++k) {
            CheckResult res = check_k_inequality(4, 2, lambda, k);
            if (k < lambda ||
                res.verdict != Verdict::nonexistence_proven) {
                computed.insert({lambda, k});
            }
        }
    }
    out.pass = computed == quoted;
    out.headline = "admissible (lambda,k) pairs match the quoted 14-pair "
                   "reference list";
    if (!out.pass) {
        std::set<std::pair<int, int>> extra, missing;
        std::set_difference(computed.begin(), computed.end(), quoted.begin(),
                            quoted.end(),
                            std::inserter(extra, extra.begin()));
        std::set_difference(quoted.begin(), quoted.end(), computed.begin(),
                            computed.end(),
                            std::inserter(missing, missing.begin()));
        out.notes.push_back("computed but not quoted: " +
                            pair_set_string(extra));
        out.notes.push_back("quoted but not computed: " +
                            pair_set_string(missing));
        out.notes.push_back(
            "at (lambda,k)=(6,7) the packing inequality holds with exact "
            "equality: 2^(r+13) - 2^(r+6)*(1+7+21+35+35+21) = 2^(r+9) = "
            "2^(m+7) for m=r+2, so (6,7) is admissible and the 14-pair "
            "reference list omits it; the other 14 pairs agree exactly");
        // (6,7) is not just arithmetically admissible but realized: the
        // 7-antichain at r=1 has lambda=6, k=7, and carries a perfect code
        SearchResult witness = find_perfect_code(antichain(7), 1);
        if (witness.status == SearchStatus::found &&
            witness.ball_size == 8 &&
            witness.code->cardinality() == 16) {
            out.notes.push_back(
                "realizability evidence: exhaustive search finds a 16-word "
                "1-perfect code on the 7-antichain (ball 8 = 2^3, "
                "lambda=6, k=7), so omitting (6,7) would wrongly exclude "
                "an existing perfect code");
        }
    }
    return out;
}

// --------------------------------------------------------------- 10 -----

Outcome criterion_constructive_theorems() {
    Outcome out;
    long long checked = 0;
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
        for (const Poset& p : all_posets_up_to_iso(n)) {
            for (int m = 0; m <= n && ok; ++m) {
                // unique m-ideal <=> m-perfect code of codimension m
                bool unique = enumerate_ideals(p, m).ideals.size() == 1;
                SearchResult sr = find_perfect_code(p, m);
                bool exists = sr.status == SearchStatus::found &&
                              sr.ball_size == (std::uint64_t{1} << m);
                ok = unique == exists;
                ++checked;
            }
            for (int m = 2; m <= n && ok; ++m) {
                // three-ideal shape <=> (m-1)-perfect of codimension m
                bool holds = theorem_th1_check(p, m).holds;
                SearchResult sr = find_perfect_code(p, m - 1);
                bool exists = sr.status == SearchStatus::found &&
                              sr.ball_size == (std::uint64_t{1} << m);
                ok = holds == exists;
                ++checked;
            }
            for (int m = 2; m <= n && ok; ++m) {
                // admissible essential shape <=> (m-2)-perfect of codim m
                bool adm = classify_m2(p, m).admissible;
                SearchResult sr = find_perfect_code(p, m - 2);
                bool exists = sr.status == SearchStatus::found &&
                              sr.ball_size == (std::uint64_t{1} << m);
                ok = adm == exists;
                ++checked;
            }
        }
    }
    out.pass = ok;
    std::ostringstream h;
    h << "constructive characterizations match brute force on all "
      << checked << " (poset, m) cases over the n <= 6 catalog";
    out.headline = h.str();
    return out;
}

// --------------------------------------------------------------- 11 -----

Outcome criterion_ideal_graph() {
    Outcome out;
    std::mt19937 gen(90711);
    bool connected_ok = true;
    int path_checks = 0;
    bool path_ok = true;
    for (int trial = 0; trial < 220 && connected_ok && path_ok; ++trial) {
        int n = 1 + static_cast<int>(gen() % 12);
        Poset p = RandomPosets::make(gen, n);
        int r = static_cast<int>(gen() % (n + 1));
        std::vector<Subset> ideals = enumerate_ideals(p, r).ideals;
        // connectivity: breadth-first search over single-swap neighbors
        std::set<Subset> seen{ideals[0]};
        std::vector<Subset> queue{ideals[0]};
        while (!queue.empty()) {
            Subset i = queue.back();
            queue.pop_back();
            for (int a : elements(p.maximal_in(i))) {
                Subset j = i & ~bit(a);
                for (int b : elements(p.minimal_in(p.ground() & ~j))) {
                    if (b == a) {
                        continue;
                    }
                    Subset k = j | bit(b);
                    if (seen.insert(k).second) {
                        queue.push_back(k);
                    }
                }
            }
        }
        connected_ok = seen.size() == ideals.size();
        // geodesic length: path steps == Johnson distance
        std::uniform_int_distribution<std::size_t> pick(0,
                                                        ideals.size() - 1);
        for (int s = 0; s < 5 && path_ok; ++s) {
            Subset from = ideals[pick(gen)];
            Subset to = ideals[pick(gen)];
            std::vector<Subset> path = ideal_path(p, from, to, r);
            path_ok = static_cast<int>(path.size()) - 1 ==
                      johnson_distance(from, to);
            ++path_checks;
        }
    }
    out.pass = connected_ok && path_ok && path_checks >= 1000;
    std::ostringstream h;
    h << "every ideal graph connected; path length == Johnson distance on "
      << path_checks << " random ideal pairs";
    out.headline = h.str();
    return out;
}

// --------------------------------------------------------------- 12 -----

Outcome criterion_reduction_soundness() {
    Outcome out;
    std::mt19937 gen(90712);
    int posets = 0;
    bool ok = true;
    while (posets < 50 && ok) {
        int n = 2 + static_cast<int>(gen() % 9); // 2..10
        Poset p = RandomPosets::make(gen, n);
        int r = static_cast<int>(gen() % (n + 1));
        Reduction red = reduce(p, r);
        SearchResult whole = find_perfect_code(p, r);
        SearchResult part = find_perfect_code(red.q, red.r_prime);
        ok = whole.status == part.status;
        if (ok && part.status == SearchStatus::found) {
            Code lifted = lift_code(red, p.n(), *part.code);
            int free_bits = popcount(red.free_mask);
            ok = lifted.cardinality() ==
                     part.code->cardinality() << free_bits &&
                 is_perfect(p, lifted, r).perfect;
        }
        ++posets;
    }
    out.pass = ok && posets == 50;
    std::ostringstream h;
    h << "existence verdicts agree before/after reduction on " << posets
      << " posets; lifted codes are perfect with cardinality factor "
      << "2^(free elements)";
    out.headline = h.str();
    return out;
}

} // namespace

int main() {
    struct Entry {
        int id;
        Outcome (*run)();
        double limit_s;     // 0 = no stated limit
        bool expect_pass;
    };
    const Entry entries[] = {
        {1, criterion_repetition, 1.0, true},
        {2, criterion_length8_code, 10.0, true},
        {3, criterion_length9_code, 60.0, true},
        {4, criterion_triple_stars_impossible, 60.0, true},
        {5, criterion_crown3_sweep, 0.0, true},
        {6, criterion_disjoint_chains, 0.0, true},
        {7, criterion_ball_oracle, 0.0, true},
        {8, criterion_ball_spot_values, 0.0, true},
        {9, criterion_lambda_k_table, 0.0, false},
        {10, criterion_constructive_theorems, 600.0, true},
        {11, criterion_ideal_graph, 0.0, true},
        {12, criterion_reduction_soundness, 0.0, true},
    };

    int unexpected = 0;
    int passed = 0;
    for (const Entry& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = e.run();
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        bool in_time = e.limit_s == 0.0 || secs < e.limit_s;
        bool pass = o.pass && in_time;
        std::printf("%s criterion %2d (%7.3f s): %s\n",
                    pass ? "PASS" : "FAIL", e.id, secs, o.headline.c_str());
        if (!in_time) {
            std::printf("      exceeded the %.0f s budget\n", e.limit_s);
        }
        for (const std::string& note : o.notes) {
            std::printf("      %s\n", note.c_str());
        }
        passed += pass;
        if (pass != e.expect_pass) {
            ++unexpected;
            std::printf("      UNEXPECTED: this criterion was expected to "
                        "%s\n",
                        e.expect_pass ? "pass" : "fail (see notes)");
        }
    }
    std::printf("acceptance: %d/12 criteria passed; criterion 9 is a "
                "documented failure (the computed table is a strict "
                "superset of the quoted list)\n",
                passed);
    return unexpected;
}
