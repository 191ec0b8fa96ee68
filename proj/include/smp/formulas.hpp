#pragma once

#include <utility>

#include "smp/bigint.hpp"

// Exact closed-form counts of preference-profile families. Arguments are
// checked: n outside [1, kMaxN] (or [2, ..] where a formula needs n > 1)
// raises std::domain_error, as do the Latin-square-backed formulas beyond
// the stored table.
namespace smp::formulas {

inline constexpr int kMaxN = 20;
inline constexpr int kMaxLatinN = 7;

BigCount factorial(int n);
BigCount binomial(const BigCount& n, int k);
// Permutations of n elements without fixed points.
BigCount derangements(int n);
// Stored Latin-square counts L_n for n <= 7.
BigCount latin_squares(int n);

// (n!)^(2n)
BigCount total_profiles(int n);

// n ((n-1)!)^n (n!)^n profiles with a woman every man ranks first.
BigCount homecoming_queen_profiles(int n);
// n ((n-1)!)^n men's preference sets alone.
BigCount homecoming_queen_men_only(int n);

// (n!)^(2n) / 2^n profiles where every man prefers woman 1 over woman 2 (n >= 2).
BigCount dominance_profiles(int n);
// (n!)^n / 2^n preference sets for one side alone (n >= 2).
BigCount dominance_men_only(int n);
// (n!)^(2n) / 4^n profiles with the condition on both sides (n >= 2).
BigCount dominance_both_sides(int n);

// (n!)^(n+1) profiles where all men rank the women identically.
BigCount same_taste_profiles(int n);
// (n!)^2 profiles where both sides do.
BigCount same_taste_both(int n);

// n!^(n+1) ((n-1)!)^n profiles where the men's first choices are distinct.
BigCount tastes_differ_profiles(int n);
// n! ((n-1)!)^n men's preference sets alone.
BigCount tastes_differ_men_only(int n);
// (n!)^2 ((n-1)!)^(2n) profiles with distinct first choices on both sides.
BigCount tastes_differ_both(int n);

// (n!)^n L_n profiles whose men's matrix is a Latin square.
BigCount latin_men_profiles(int n);
// L_n^2 profiles where both matrices are Latin squares.
BigCount mutually_latin_profiles(int n);
// L_n profiles where every pair costs exactly n+1.
BigCount latin_profiles(int n);
// L_n n! joint profiles.
BigCount joint_profiles(int n);

// S(k, n): completions of the 2(n-k) people outside k fixed pairs such that
// they contain no soulmates, by inclusion-exclusion.
BigCount soulmate_free_completions(int k, int n);
// F(k, n) = C(n,k)^2 k! ((n-1)!)^(2k) S(k, n): profiles with exactly k
// soulmate pairs.
BigCount soulmate_profiles(int k, int n);

// Latin-men profiles with exactly k soulmate pairs:
// L_n C(n,k) (n-1)^(n-k) ((n-1)!)^n.
BigCount latin_men_soulmates(int n, int k);
// Mutually-Latin profiles with exactly k soulmate pairs:
// L_n^2/n! C(n,k) D_{n-k}. Zero at k = n-1.
BigCount mutually_latin_soulmates(int n, int k);

// n^4 ((n-1)!)^(2n) profiles with an outcast pair, except 14 at n = 2.
BigCount outcast_profiles(int n);
// n^2 ((n-1)!)^(2n) profiles where some pair is ranked last by everyone.
BigCount outcast_hell_profiles(int n);

// C(n!+n-1, n) men's preference sets up to relabeling the men.
BigCount men_profiles_up_to_relabeling(int n);

// (n^2!, (n!)^2): the disjoint-profile count never exceeds the first value
// and is divisible by the second.
std::pair<BigCount, BigCount> disjoint_profile_bounds(int n);

}  // namespace smp::formulas
