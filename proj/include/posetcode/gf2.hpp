#pragma once

#include <cstdint>
#include <vector>

#include "posetcode/subset.hpp"

namespace posetcode {
namespace gf2 {

// Rank of the m-bit columns h_1..h_n over GF(2).
int column_rank(const std::vector<Subset>& columns);

// Basis of {x in F_2^n : xor of columns[i] over i in x is 0}, as n-bit masks.
std::vector<Subset> kernel_basis(const std::vector<Subset>& columns);

// All 2^dim combinations of the basis, sorted ascending. CapExceeded when
// the span would exceed cap elements.
std::vector<Subset> span(const std::vector<Subset>& basis,
                         std::uint64_t cap = std::uint64_t{1} << 24);

} // namespace gf2
} // namespace posetcode
