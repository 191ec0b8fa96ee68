#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace smp {

// Enumerates all n x n Latin squares over symbols 1..n by backtracking, in
// lexicographic row-major order. The callback receives the square as a
// row-major flat vector valid only during the call.
void for_each_latin_square(int n, const std::function<void(const std::vector<int>&)>& fn);

// Independent counter used to validate the stored L_n table.
std::uint64_t count_latin_squares(int n);

}  // namespace smp
