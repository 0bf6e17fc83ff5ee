#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetcode/poset.hpp"

namespace posetcode {

// Binary code of length n, either an explicit word list or the kernel of a
// parity-check matrix given by its columns.
class Code {
  public:
    static Code explicit_code(int n, std::vector<Subset> words);
    // columns[i] is the m_rows-bit check column of position i+1.
    static Code linear(int n, int m_rows, std::vector<Subset> columns);

    int n() const { return n_; }
    bool is_linear() const { return linear_; }
    int check_rows() const { return m_rows_; }
    const std::vector<Subset>& columns() const { return columns_; }

    std::uint64_t cardinality() const;
    // n - log2(cardinality) when that is an integer, else nullopt.
    std::optional<int> codimension() const;

    // Explicit word list (sorted ascending, duplicate-free). For linear codes
    // expands the kernel; CapExceeded if the expansion would exceed cap.
    std::vector<Subset> words(std::uint64_t cap = std::uint64_t{1} << 24) const;

  private:
    int n_ = 0;
    bool linear_ = false;
    int m_rows_ = 0;
    std::vector<Subset> columns_; // linear only
    std::vector<Subset> words_;   // explicit only
};

struct PackingViolation {
    Subset word1 = 0;
    Subset word2 = 0;
    Subset ideal1 = 0; // word1 ^ word2 lies inside ideal1 | ideal2
    Subset ideal2 = 0;
};

struct VerificationResult {
    bool packing_ok = false;
    // nullopt when the covering side was not evaluated (packing-only check).
    std::optional<bool> covering_ok;
    bool perfect = false;
    std::optional<PackingViolation> packing_witness;
    std::optional<Subset> uncovered; // only from the sweep (oracle) mode
};

// Packing-only check: no two distinct codewords' difference fits inside a
// union of two r-ideals. Witness is the first violating pair in ascending
// word order together with the covering ideal pair.
VerificationResult is_error_correcting(const Poset& p, const Code& c, int r);

// Packing plus covering. Covering is decided through the cardinality
// identity |C| * |B_P^r| = 2^n (exact, any n); with oracle=true a direct
// coverage sweep over F^n runs instead (n <= 24, CapExceeded beyond) and can
// produce an explicit uncovered vector.
VerificationResult is_perfect(const Poset& p, const Code& c, int r,
                              bool oracle = false);

// The m-perfect construction when I_P^m = {I}: words Y u f(Y) over all
// Y in 2^(ground \ I), with f mapping into I (default constantly empty).
// NotUnique when the m-ideal is not unique; RangeError on bad m or an f
// value outside I; CapExceeded when 2^(n-m) words are too many to list.
Code construct_m_perfect(const Poset& p, int m,
                         const std::function<Subset(Subset)>& f = nullptr);

// The (m-1)-perfect linear construction when I_P^{m-1} consists of three
// ideals I u {a1}, I u {a2}, I u {a3}: standard-basis columns on I u {a1,a2}
// (ascending index), h_{a3} = h_{a1} + h_{a2}, successive nonzero values
// elsewhere. ShapeMismatch when the ideal family has a different shape.
Code construct_m1_perfect(const Poset& p, int m);

// Existence test for the three-ideal shape above, with the two textual
// conditions (pairwise closures <ai,aj> = {ai,aj} u I; every outside element
// dominates some I u {ai}) asserted on success.
struct ThreeIdealShape {
    bool holds = false;
    Subset core = 0;             // the (m-2)-ideal I
    std::array<int, 3> a0{};     // ascending, 0-based
    std::string refutation;      // set when !holds
};
ThreeIdealShape theorem_th1_check(const Poset& p, int m);

// Classification of (m-2)-perfect codes of codimension m by the essential
// part at radius r = m-2. Admissible essential shapes (with the reduced
// radius matching): the 5-antichain (repetition code), the 7-antichain
// (Hamming code), and two 8/9-element two-level posets with frozen canonical
// codes; the witness code is transported along an isomorphism and lifted to
// the full poset.
struct ShapeClass {
    bool admissible = false;
    int shape_id = 0;         // 1..4, 0 when inadmissible
    std::string shape_name;   // "antichain-5", "antichain-7", "stars-4-2", "net-9"
    std::optional<Code> example; // (m-2)-perfect on the full poset
};
ShapeClass classify_m2(const Poset& p, int m);

// Frozen canonical shapes and their perfect codes (radius r = m-2 on the
// shape itself): used by classify_m2 and the labeling-search tests.
const Poset& shape_stars_4_2(); // 8 elements, stars with 4 and 2 leaves
const Poset& shape_net_9();     // 9 elements, 3 nonmaximal each under 4 of 6
Code code_stars_4_2();          // 2-perfect on shape_stars_4_2
Code code_net_9();              // 3-perfect on shape_net_9
Code hamming_7();               // 1-perfect on antichain(7)

} // namespace posetcode
