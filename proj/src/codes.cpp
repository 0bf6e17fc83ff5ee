#include "posetcode/codes.hpp"

#include <algorithm>

#include "posetcode/criteria.hpp"
#include "posetcode/errors.hpp"
#include "posetcode/gf2.hpp"
#include "posetcode/ideals.hpp"
#include "posetcode/isomorphism.hpp"
#include "posetcode/metric.hpp"

namespace posetcode {

Code Code::explicit_code(int n, std::vector<Subset> words) {
    if (n < 0 || n > kMaxGround) {
        throw RangeError("code length out of range");
    }
    for (Subset w : words) {
        if ((w & ~full_mask(n)) != 0) {
            throw RangeError("codeword exceeds code length");
        }
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    Code c;
    c.n_ = n;
    c.words_ = std::move(words);
    return c;
}

Code Code::linear(int n, int m_rows, std::vector<Subset> columns) {
    if (n < 0 || n > kMaxGround || m_rows < 0 || m_rows > kMaxGround) {
        throw RangeError("code dimensions out of range");
    }
    if (static_cast<int>(columns.size()) != n) {
        throw SizeMismatch("expected one check column per position");
    }
    for (Subset h : columns) {
        if ((h & ~full_mask(m_rows)) != 0) {
            throw RangeError("check column exceeds row count");
        }
    }
    Code c;
    c.n_ = n;
    c.linear_ = true;
    c.m_rows_ = m_rows;
    c.columns_ = std::move(columns);
    return c;
}

std::uint64_t Code::cardinality() const {
    if (!linear_) {
        return words_.size();
    }
    int dim = n_ - gf2::column_rank(columns_);
    if (dim >= 64) {
        throw CapExceeded("linear code too large to count");
    }
    return std::uint64_t{1} << dim;
}

std::optional<int> Code::codimension() const {
    std::uint64_t card = cardinality();
    if (card == 0 || popcount(card) != 1) {
        return std::nullopt;
    }
    return n_ - lowest_bit(card);
}

std::vector<Subset> Code::words(std::uint64_t cap) const {
    if (!linear_) {
        return words_;
    }
    return gf2::span(gf2::kernel_basis(columns_), cap);
}

namespace {

// First ideal pair covering d, in family order; requires that one exists.
std::pair<Subset, Subset> covering_pair(const Poset& p,
                                        const IdealFamily& fam, Subset d) {
    for (Subset first : fam.ideals) {
        Subset rest = p.closure(d & ~first);
        if (popcount(rest) <= fam.r) {
            return {first, adjust_ideal(p, rest, fam.r)};
        }
    }
    throw Error("internal: no covering ideal pair for a reported violation");
}

} // namespace

VerificationResult is_error_correcting(const Poset& p, const Code& c, int r) {
    if (c.n() != p.n()) {
        throw SizeMismatch("code length differs from poset size");
    }
    IdealFamily fam = enumerate_ideals(p, r);
    std::vector<Subset> words = c.words();
    if (words.empty()) {
        throw RangeError("code must contain at least one word");
    }
    VerificationResult out;
    out.packing_ok = true;
    for (std::size_t i = 0; i < words.size() && out.packing_ok; ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            Subset d = words[i] ^ words[j];
            bool covered = false;
            for (Subset first : fam.ideals) {
                if (p_weight(p, d & ~first) <= r) {
                    covered = true;
                    break;
                }
            }
            if (covered) {
                auto [i1, i2] = covering_pair(p, fam, d);
                out.packing_ok = false;
                out.packing_witness =
                    PackingViolation{words[i], words[j], i1, i2};
                break;
            }
        }
    }
    return out;
}

VerificationResult is_perfect(const Poset& p, const Code& c, int r,
                              bool oracle) {
    VerificationResult out = is_error_correcting(p, c, r);
    if (!oracle) {
        BallProfile b = ball(p, r);
        bool identity =
            static_cast<unsigned __int128>(c.cardinality()) * b.size ==
            static_cast<unsigned __int128>(1) << p.n();
        out.covering_ok = out.packing_ok && identity;
        out.perfect = out.packing_ok && *out.covering_ok;
        return out;
    }
    if (p.n() > 24) {
        throw CapExceeded("coverage sweep supports n <= 24");
    }
    BallProfile b = ball(p, r);
    std::vector<std::uint64_t> covered((std::size_t{1} << p.n()) / 64 + 1, 0);
    for (Subset w : c.words()) {
        for (Subset member : *b.members) {
            Subset v = w ^ member;
            covered[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
    }
    out.covering_ok = true;
    for (Subset v = 0; v < (Subset{1} << p.n()); ++v) {
        if (((covered[v >> 6] >> (v & 63)) & 1) == 0) {
            out.covering_ok = false;
            out.uncovered = v;
            break;
        }
    }
    out.perfect = out.packing_ok && *out.covering_ok;
    return out;
}

Code construct_m_perfect(const Poset& p, int m,
                         const std::function<Subset(Subset)>& f) {
    IdealFamily fam = enumerate_ideals(p, m);
    if (fam.ideals.size() != 1) {
        throw NotUnique("poset has more than one ideal of the target size");
    }
    Subset ideal = fam.ideals.front();
    Subset info = p.ground() & ~ideal;
    if (popcount(info) > 24) {
        throw CapExceeded("too many information positions to list");
    }
    std::vector<Subset> words;
    words.reserve(std::size_t{1} << popcount(info));
    for_each_subset(info, [&](Subset y) {
        Subset check = 0;
        if (f) {
            check = f(y);
            if (!is_subset(check, ideal)) {
                throw RangeError("check function must map into the ideal");
            }
        }
        words.push_back(y | check);
    });
    return Code::explicit_code(p.n(), std::move(words));
}

namespace {

// The I u {a1}, I u {a2}, I u {a3} shape of the (m-1)-ideal family, if it
// has it.
struct ShapeProbe {
    bool ok = false;
    Subset core = 0;
    std::array<int, 3> a0{};
    std::string reason;
};

ShapeProbe probe_three_ideals(const Poset& p, int m) {
    ShapeProbe probe;
    IdealFamily fam = enumerate_ideals(p, m - 1);
    if (fam.ideals.size() != 3) {
        probe.reason = "ideal count is " + std::to_string(fam.ideals.size()) +
                       ", need exactly 3";
        return probe;
    }
    if (fam.u != m - 2) {
        probe.reason = "the three ideals do not share a common core of all "
                       "but one element";
        return probe;
    }
    probe.ok = true;
    probe.core = fam.core_mask;
    for (int i = 0; i < 3; ++i) {
        probe.a0[static_cast<std::size_t>(i)] =
            lowest_bit(fam.ideals[static_cast<std::size_t>(i)] &
                       ~fam.core_mask);
    }
    std::sort(probe.a0.begin(), probe.a0.end());
    return probe;
}

} // namespace

Code construct_m1_perfect(const Poset& p, int m) {
    if (m < 2) {
        throw RangeError("construction needs m >= 2");
    }
    ShapeProbe probe = probe_three_ideals(p, m);
    if (!probe.ok) {
        throw ShapeMismatch(probe.reason);
    }
    std::vector<Subset> columns(static_cast<std::size_t>(p.n()), 0);
    Subset basis_positions =
        probe.core | bit(probe.a0[0]) | bit(probe.a0[1]);
    int next_bit = 0;
    for (int pos : elements(basis_positions)) {
        columns[static_cast<std::size_t>(pos)] = bit(next_bit++);
    }
    columns[static_cast<std::size_t>(probe.a0[2])] =
        columns[static_cast<std::size_t>(probe.a0[0])] ^
        columns[static_cast<std::size_t>(probe.a0[1])];
    Subset rest =
        p.ground() & ~(basis_positions | bit(probe.a0[2]));
    std::uint64_t counter = 0;
    std::uint64_t nonzero = (std::uint64_t{1} << m) - 1;
    for (int pos : elements(rest)) {
        columns[static_cast<std::size_t>(pos)] = (counter % nonzero) + 1;
        ++counter;
    }
    return Code::linear(p.n(), m, std::move(columns));
}

ThreeIdealShape theorem_th1_check(const Poset& p, int m) {
    if (m < 2) {
        throw RangeError("shape test needs m >= 2");
    }
    ThreeIdealShape result;
    ShapeProbe probe = probe_three_ideals(p, m);
    if (!probe.ok) {
        result.refutation = probe.reason;
        return result;
    }
    result.holds = true;
    result.core = probe.core;
    result.a0 = probe.a0;
    // The textual conditions follow from the ideal-family shape; re-derive
    // them as a consistency check.
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Subset pair = bit(probe.a0[static_cast<std::size_t>(i)]) |
                          bit(probe.a0[static_cast<std::size_t>(j)]);
            if (p.closure(pair) != (probe.core | pair)) {
                throw Error("internal: pair closure disagrees with the "
                            "three-ideal shape");
            }
        }
    }
    Subset named = probe.core | bit(probe.a0[0]) | bit(probe.a0[1]) |
                   bit(probe.a0[2]);
    for (int x : elements(p.ground() & ~named)) {
        bool dominates = false;
        for (int i = 0; i < 3; ++i) {
            if (is_subset(probe.core | bit(probe.a0[static_cast<std::size_t>(i)]),
                          p.down(x))) {
                dominates = true;
                break;
            }
        }
        if (!dominates) {
            throw Error("internal: outside element dominates no small ideal");
        }
    }
    return result;
}

const Poset& shape_stars_4_2() {
    static const Poset p = Poset::from_covers(
        8, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}});
    return p;
}

const Poset& shape_net_9() {
    static const Poset p = Poset::from_covers(
        9, {{2, 4}, {3, 4}, {2, 5}, {3, 5}, {1, 6}, {3, 6}, {1, 7}, {3, 7},
            {1, 8}, {2, 8}, {1, 9}, {2, 9}});
    return p;
}

Code code_stars_4_2() {
    std::vector<Subset> basis{
        from_elements_1based({1, 2, 3, 4}, 8),
        from_elements_1based({1, 2, 5, 6}, 8),
        from_elements_1based({1, 2, 7, 8}, 8),
        from_elements_1based({1, 3, 5, 7}, 8),
    };
    return Code::explicit_code(8, gf2::span(basis));
}

Code code_net_9() {
    std::vector<Subset> basis{
        from_elements_1based({1, 2, 6, 7}, 9),
        from_elements_1based({1, 3, 4, 5}, 9),
        from_elements_1based({2, 3, 8, 9}, 9),
        from_elements_1based({1, 4, 6, 9}, 9),
    };
    return Code::explicit_code(9, gf2::span(basis));
}

Code hamming_7() {
    std::vector<Subset> columns;
    for (Subset h = 1; h <= 7; ++h) {
        columns.push_back(h);
    }
    return Code::linear(7, 3, std::move(columns));
}

ShapeClass classify_m2(const Poset& p, int m) {
    if (m < 2) {
        throw RangeError("classification needs m >= 2");
    }
    Reduction red = reduce(p, m - 2);
    struct Entry {
        const Poset& shape;
        Code code;
        int r_shape;
        int id;
        const char* name;
    };
    static const Poset a5 = antichain(5);
    static const Poset a7 = antichain(7);
    const Entry table[] = {
        {a5, Code::explicit_code(5, {0, full_mask(5)}), 2, 1, "antichain-5"},
        {a7, hamming_7(), 1, 2, "antichain-7"},
        {shape_stars_4_2(), code_stars_4_2(), 2, 3, "stars-4-2"},
        {shape_net_9(), code_net_9(), 3, 4, "net-9"},
    };
    ShapeClass out;
    for (const Entry& entry : table) {
        if (red.r_prime != entry.r_shape || red.q.n() != entry.shape.n()) {
            continue;
        }
        auto perm = find_isomorphism(entry.shape, red.q);
        if (!perm) {
            continue;
        }
        std::vector<Subset> q_words;
        for (Subset w : entry.code.words()) {
            Subset mapped = 0;
            for (int v : elements(w)) {
                mapped |= bit((*perm)[static_cast<std::size_t>(v)]);
            }
            q_words.push_back(mapped);
        }
        out.admissible = true;
        out.shape_id = entry.id;
        out.shape_name = entry.name;
        out.example = lift_code(red, p.n(),
                                Code::explicit_code(red.q.n(),
                                                    std::move(q_words)));
        return out;
    }
    return out;
}

} // namespace posetcode
