#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "posetcode/errors.hpp"

namespace posetcode {

// Subsets of a ground set [n] = {1,..,n}, n <= 64, as bitmasks.
// Element i (1-based in all I/O) lives at bit i-1. In binary-string form
// position 1 is the leftmost character, i.e. the string reads x_1 x_2 ... x_n.
using Subset = std::uint64_t;

inline constexpr int kMaxGround = 64;

constexpr Subset bit(int i0) { return Subset{1} << i0; }

constexpr Subset full_mask(int n) {
    return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline int popcount(Subset s) { return std::popcount(s); }

// Index of the lowest set bit; undefined for s == 0.
inline int lowest_bit(Subset s) { return std::countr_zero(s); }

// Index of the highest set bit; undefined for s == 0.
inline int highest_bit(Subset s) { return 63 - std::countl_zero(s); }

inline bool contains(Subset s, int i0) { return (s >> i0) & 1; }

inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

// 0-based indices of the elements of s, ascending.
inline std::vector<int> elements(Subset s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    while (s) {
        out.push_back(lowest_bit(s));
        s &= s - 1;
    }
    return out;
}

inline Subset from_elements_1based(const std::vector<int>& elems, int n) {
    Subset s = 0;
    for (int e : elems) {
        if (e < 1 || e > n)
            throw RangeError("element " + std::to_string(e) + " outside 1.." +
                             std::to_string(n));
        s |= bit(e - 1);
    }
    return s;
}

inline std::vector<int> to_elements_1based(Subset s) {
    std::vector<int> out;
    for (int i0 : elements(s)) out.push_back(i0 + 1);
    return out;
}

// "x_1 x_2 ... x_n" with position 1 leftmost.
inline std::string to_binary_string(Subset s, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i0 = 0; i0 < n; ++i0)
        if (contains(s, i0)) out[static_cast<std::size_t>(i0)] = '1';
    return out;
}

inline Subset from_binary_string(const std::string& text) {
    if (text.empty() || text.size() > kMaxGround)
        throw ParseError("binary word must have between 1 and 64 positions");
    Subset s = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            s |= bit(static_cast<int>(i));
        else if (text[i] != '0')
            throw ParseError("binary word may contain only 0 and 1: got '" +
                             text + "'");
    }
    return s;
}

// "{1,4,5}" for display; "{}" when empty.
inline std::string to_set_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : to_elements_1based(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    out += "}";
    return out;
}

// Iterate all subsets of mask in increasing numeric order, f(Subset) -> void.
// Visits the empty set first and mask last.
template <class F>
void for_each_subset(Subset mask, F&& f) {
    Subset s = 0;
    while (true) {
        f(s);
        if (s == mask) break;
        s = (s - mask) & mask; // next subset of mask after s
    }
}

} // namespace posetcode
