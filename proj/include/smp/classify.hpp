#pragma once

#include <utility>
#include <vector>

#include "smp/profile.hpp"

namespace smp {

// Per-profile predicates, one for each profile family. For n = 1 every
// degenerate predicate follows from literal application of its definition,
// so the unique profile is simultaneously a soulmate pair, a hell-pair,
// a pair of outcasts and a Latin profile.
struct ProfileStats {
    int soulmate_pairs = 0;
    int hell_pairs = 0;
    bool has_homecoming_queen = false;
    bool has_homecoming_king = false;
    bool men_first_choices_distinct = false;
    bool men_same_taste = false;
    bool men_latin = false;
    bool women_latin = false;
    bool is_latin_profile = false;
    bool is_disjoint = false;
    bool is_joint = false;
    std::vector<std::pair<int, int>> outcast_pairs;  // 0-based (man, woman)
};

ProfileStats classify(const PreferenceProfile& p);

// Pairs with mutual ranks (1, 1).
int count_soulmates(const PreferenceProfile& p);
// Pairs with mutual ranks (n, n).
int count_hell_pairs(const PreferenceProfile& p);

// Pairs (m, w) ranked last by every woman other than w and every man other
// than m. At most one pair unless n = 2.
std::vector<std::pair<int, int>> find_outcasts(const PreferenceProfile& p);
int count_outcast_pairs(const PreferenceProfile& p);

// True iff some pair is ranked last by everyone, themselves included.
bool has_outcast_hell_pair(const PreferenceProfile& p);

// A woman every man ranks first / a man every woman ranks first.
bool has_homecoming_queen(const PreferenceProfile& p);
bool has_homecoming_king(const PreferenceProfile& p);

bool men_same_taste(const PreferenceProfile& p);
bool women_same_taste(const PreferenceProfile& p);

bool men_first_choices_distinct(const PreferenceProfile& p);
bool women_first_choices_distinct(const PreferenceProfile& p);

// The side's rating matrix is a Latin square: for each rank k, the people
// ranked k are all distinct.
bool men_latin(const PreferenceProfile& p);
bool women_latin(const PreferenceProfile& p);

// Every pair's egalitarian cost is exactly n+1.
bool is_latin_profile(const PreferenceProfile& p);

// Every mutual-ranking cell (i, j) in {1..n}^2 occurs exactly once.
bool is_disjoint(const PreferenceProfile& p);

// Every mutual ranking is (i, f(i)) for a permutation f (the key function),
// each occurring exactly n times.
bool is_joint(const PreferenceProfile& p);

// True iff every person on `side` ranks a strictly above b (0-based labels).
bool dominance(const PreferenceProfile& p, int a, int b, Side side);

}  // namespace smp
