#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetcode/codes.hpp"
#include "posetcode/poset.hpp"

namespace posetcode {

enum class Verdict {
    nonexistence_proven,
    existence_constructed,
    inconclusive,
};

std::string to_string(Verdict v);

// One criterion outcome; the witness payload is machine-checkable JSON whose
// shape is fixed per criterion id.
struct CheckResult {
    Verdict verdict = Verdict::inconclusive;
    nlohmann::json witness;
};

struct CriterionEntry {
    std::string id;
    CheckResult result;
};

struct CriterionContext {
    int n = 0;
    int m = 0;
    int r = 0;
    int lambda = 0;
    int u = 0;
    int k = 0;
};

struct CriterionReport {
    CriterionContext context;
    std::vector<CriterionEntry> entries;
    Verdict overall = Verdict::inconclusive;
    std::optional<Code> constructed;
};

// Essential-part reduction: Q is the subposet induced on the union of all
// r-ideals minus their intersection; r-perfect codes on P correspond to
// (r-u)-perfect codes on Q, gaining a factor 2^|free| in cardinality from
// the positions outside every r-ideal.
struct Reduction {
    Poset q;
    int r_prime = 0;
    int u = 0;
    Subset core_mask = 0;
    Subset essential_mask = 0;
    Subset free_mask = 0;           // ground \ union of r-ideals
    std::vector<int> index_map;     // q index -> p index
};
Reduction reduce(const Poset& p, int r);

// Words of an (r-u)-perfect code on red.q, mapped back into P's labels and
// extended by every subset of the free positions.
Code lift_code(const Reduction& red, int n_full, const Code& q_code);

// No r-error-correcting code of codimension m when r > m.
CheckResult check_rm(int n, int m, int r);

// No r-error-correcting code of codimension m when two r-ideals have a
// union larger than m.
CheckResult check_union_bound(const Poset& p, int m, int r);

// No r-perfect code when some vector v of weight > r satisfies: for every
// r-ideal I there are r-ideals I', I'' with v u I inside I' u I''.
// RangeError unless w_P(v) > r.
CheckResult check_v_cover(const Poset& p, int r, Subset v);

// No r-perfect code when the (r+1)-ideal V satisfies the equivalent pair:
// a) every r-ideal meets max(V); b) |W(V)| < r where W(V) is the complement
// of the up-closure of max(V). Both are evaluated and their agreement
// asserted. InvalidIdeal unless V is an (r+1)-ideal.
CheckResult check_cor_II(const Poset& p, int r, Subset big_v);

// Canonical V choices fed through check_cor_II: the minimal elements when
// |min(P)| = r+1; {a} u P_a for a minimal with |P_a| = r (P_a = elements not
// above a); the crown-specific prefixes; an adjusted minimal ideal; and for
// small n every (r+1)-ideal.
CheckResult auto_v_search(const Poset& p, int r);

// No r-perfect code when two distinct r-ideals union to all of P^r.
CheckResult check_two_cover(const Poset& p, int r);

// Perfect codes with r < m force m-r < lambda <= 2^{m-r+1} - 2.
CheckResult check_lambda_range(int m, int r, int lambda);

// No r-perfect code when the essential part contains a chain of more than
// m-r elements.
CheckResult check_height(const Poset& p, int m, int r);

// For an upset U with l = n - |U| <= r: a perfect code forces the induced
// ball |B_U^{r-l}| <= 2^{m-l}; equality (recorded in the witness) forces
// every r-error-correcting code of codimension m to be perfect with the
// essential part inside U. InvalidUpset / RangeError on bad input.
CheckResult check_upset_ball(const Poset& p, Subset upset, int m, int r);

// Exact big-integer form of the counting bound
//   2^{r+lambda} - 2^{r+lambda-k} * sum_{s<lambda} C(k,s) <= 2^m,
// evaluated scaled by 2^k; inconclusive when k < lambda.
CheckResult check_k_inequality(int m, int r, int lambda, int k);

// Element bounds on an essential part (P must equal its own essential part
// at r; enforced, ShapeMismatch otherwise): (a) |P \ <a>| >= lambda for
// every a; (b) |P \ <a,a'>| >= r + lambda - m for all a, a'; (c) the upset
// of any element (itself included) has at most lambda elements.
CheckResult check_abcc(const Poset& p, int m, int r);

// Reduce, then run every applicable criterion in a fixed order on the
// reduced instance; when m - r is 0, 1 or 2 finish with the matching
// construction/classification, which is decisive at those offsets. Cheap
// criteria are all evaluated (several may fire); only the constructive stage
// is skipped once nonexistence is proven.
CriterionReport run_battery(const Poset& p, int m, int r);

} // namespace posetcode
