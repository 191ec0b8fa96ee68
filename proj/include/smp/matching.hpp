#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "smp/profile.hpp"

namespace smp {

// A perfect matching, man-indexed: m[i] is the 0-based woman married to man i.
// Woman-indexed views are computed on demand.
using Matching = std::vector<int>;

struct GsTrace {
    Matching matching;
    int rounds = 0;
    Side side = Side::Men;
};

// Deferred acceptance with synchronous rounds: in each round every unengaged
// proposer proposes to their best not-yet-tried partner, then each receiver
// keeps the best suitor seen so far. `rounds` counts these rounds.
GsTrace gale_shapley(const PreferenceProfile& p, Side side);

// The lexicographically smallest blocking (man, woman) pair, if any.
std::optional<std::pair<int, int>> find_blocking_pair(const PreferenceProfile& p,
                                                      const Matching& m);

bool is_stable(const PreferenceProfile& p, const Matching& m);

// Stability check given both directions of the matching; the hot path for
// exhaustive enumeration. woman_of and man_of must be inverse permutations.
inline bool is_stable_matched(const PreferenceProfile& p, std::span<const int> woman_of,
                              std::span<const int> man_of) {
    const int n = p.n;
    for (int m = 0; m < n; ++m) {
        const int wife_rank = p.men[m * n + woman_of[m]];
        for (int w = 0; w < n; ++w) {
            if (p.men[m * n + w] < wife_rank &&
                p.women[w * n + m] < p.women[w * n + man_of[w]]) {
                return false;
            }
        }
    }
    return true;
}

// All stable matchings in lexicographic order of the man-indexed sequence,
// by testing all n! candidates. Refuses n > 6.
std::vector<Matching> enumerate_stable(const PreferenceProfile& p);

// Sum of the ranks the pair assigns each other; in [2, 2n].
int pair_cost(const PreferenceProfile& p, int man, int woman);

// Sum of pair costs over all couples; in [2n, 2n^2].
int egalitarian_cost(const PreferenceProfile& p, const Matching& m);

// Married couples whose mutual ranks are both n. A stable matching contains
// at most one.
std::vector<std::pair<int, int>> hell_couples_in(const PreferenceProfile& p,
                                                 const Matching& m);

void validate_matching(const PreferenceProfile& p, const Matching& m);

}  // namespace smp
