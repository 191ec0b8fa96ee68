#include "smp/latin.hpp"

#include <bit>
#include <cstdint>

#include "smp/error.hpp"

namespace smp {

namespace {

// Fills cells in row-major order; used[n + c] tracks column c, used[r] row r,
// one bit per symbol. Trying symbols in increasing order yields lexicographic
// output.
struct LatinSearch {
    int n;
    std::vector<std::uint32_t> row_used, col_used;
    std::vector<int> square;
    const std::function<void(const std::vector<int>&)>& emit;

    LatinSearch(int n_, const std::function<void(const std::vector<int>&)>& fn)
        : n(n_), row_used(n_, 0), col_used(n_, 0), square(size_t(n_) * n_, 0), emit(fn) {}

    void fill(int cell) {
        if (cell == n * n) {
            emit(square);
            return;
        }
        const int r = cell / n;
        const int c = cell % n;
        std::uint32_t free_bits = ~(row_used[r] | col_used[c]) & ((1u << n) - 1);
        while (free_bits) {
            const std::uint32_t bit = free_bits & -free_bits;
            free_bits ^= bit;
            const int symbol = std::countr_zero(bit) + 1;
            square[cell] = symbol;
            row_used[r] |= bit;
            col_used[c] |= bit;
            fill(cell + 1);
            row_used[r] ^= bit;
            col_used[c] ^= bit;
        }
    }
};

}  // namespace

void for_each_latin_square(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 1 || n > 31) throw ValidationError("for_each_latin_square: n out of range");
    LatinSearch search(n, fn);
    search.fill(0);
}

std::uint64_t count_latin_squares(int n) {
    std::uint64_t count = 0;
    for_each_latin_square(n, [&](const std::vector<int>&) { ++count; });
    return count;
}

}  // namespace smp
