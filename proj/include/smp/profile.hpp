#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smp {

enum class Side { Men, Women };

// A preference profile for n men and n women, stored as two row-major n x n
// rating matrices: men[m*n + w] is the rank (1 = favorite, n = least
// favorite) man m assigns to woman w, and women[w*n + m] is the rank woman w
// assigns to man m. Every row is a permutation of 1..n. People are indexed
// 0-based in code; all text I/O uses 1-based labels.
struct PreferenceProfile {
    int n = 0;
    std::vector<int> men;
    std::vector<int> women;

    int man_rank(int m, int w) const { return men[m * n + w]; }
    int woman_rank(int w, int m) const { return women[w * n + m]; }

    std::span<const int> man_row(int m) const { return {men.data() + m * n, size_t(n)}; }
    std::span<const int> woman_row(int w) const { return {women.data() + w * n, size_t(n)}; }

    bool operator==(const PreferenceProfile&) const = default;
};

// Builds a validated profile; throws ValidationError naming the bad row.
PreferenceProfile make_profile(int n, std::vector<int> men, std::vector<int> women);
void validate_profile(const PreferenceProfile& p);

// Text format: 2n data lines (men's rating rows, then women's), each holding
// n space-separated integers in [1, n]; blank lines and lines starting with
// '#' are ignored; n is inferred from the first data line.
PreferenceProfile parse_profile(std::string_view text);
std::string format_profile(const PreferenceProfile& p);

// Replaces every rating r by n+1-r in both matrices. An involution that
// exchanges soulmate pairs with hell-pairs.
PreferenceProfile complement(const PreferenceProfile& p);

// choice[k] = the 0-based person that `ratings` ranks k+1.
std::vector<int> choice_order(std::span<const int> ratings);

}  // namespace smp
