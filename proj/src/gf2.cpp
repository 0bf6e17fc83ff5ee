#include "posetcode/gf2.hpp"

#include <algorithm>

#include "posetcode/errors.hpp"

namespace posetcode {
namespace gf2 {

namespace {

struct Pivot {
    Subset value = 0;       // reduced column, nonzero
    Subset combination = 0; // original columns XORed to produce it
};

// Reduce each column against earlier pivots, tracking which original columns
// went into the reduction; a column that cancels to zero yields a kernel
// basis vector.
void eliminate(const std::vector<Subset>& columns,
               std::vector<Pivot>& pivots, std::vector<Subset>& kernel) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        Subset value = columns[i];
        Subset combination = bit(static_cast<int>(i));
        for (const Pivot& p : pivots) {
            // pivots are sorted by decreasing leading bit, so one pass reduces
            if (value != 0 && highest_bit(value) == highest_bit(p.value)) {
                value ^= p.value;
                combination ^= p.combination;
            }
        }
        if (value == 0) {
            kernel.push_back(combination);
        } else {
            pivots.push_back({value, combination});
            std::sort(pivots.begin(), pivots.end(),
                      [](const Pivot& a, const Pivot& b) {
                          return highest_bit(a.value) > highest_bit(b.value);
                      });
        }
    }
}

} // namespace

int column_rank(const std::vector<Subset>& columns) {
    std::vector<Pivot> pivots;
    std::vector<Subset> kernel;
    eliminate(columns, pivots, kernel);
    return static_cast<int>(pivots.size());
}

std::vector<Subset> kernel_basis(const std::vector<Subset>& columns) {
    std::vector<Pivot> pivots;
    std::vector<Subset> kernel;
    eliminate(columns, pivots, kernel);
    return kernel;
}

std::vector<Subset> span(const std::vector<Subset>& basis, std::uint64_t cap) {
    if (basis.size() >= 64 || (std::uint64_t{1} << basis.size()) > cap) {
        throw CapExceeded("span too large to enumerate");
    }
    std::vector<Subset> words;
    words.reserve(std::size_t{1} << basis.size());
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << basis.size());
         ++combo) {
        Subset w = 0;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if ((combo >> b) & 1) {
                w ^= basis[b];
            }
        }
        words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

} // namespace gf2
} // namespace posetcode
