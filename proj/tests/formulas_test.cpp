#include <doctest.h>

#include <stdexcept>

#include "smp/formulas.hpp"
#include "smp/latin.hpp"

using namespace smp;
namespace f = smp::formulas;

TEST_CASE("total_profiles") {
    CHECK(f::total_profiles(1) == 1);
    CHECK(f::total_profiles(3) == 46656);
    CHECK(f::total_profiles(4) == BigCount("110075314176"));
    CHECK(f::total_profiles(5) == BigCount("619173642240000000000"));
}

TEST_CASE("homecoming queen counts") {
    CHECK(f::homecoming_queen_profiles(1) == 1);
    CHECK(f::homecoming_queen_profiles(3) == 5184);
    CHECK(f::homecoming_queen_men_only(3) == 24);
}

TEST_CASE("dominance counts need n > 1") {
    CHECK(f::dominance_profiles(3) == 5832);
    CHECK(f::dominance_both_sides(3) == 729);
    CHECK(f::dominance_men_only(3) == 27);
    for (int n = 2; n <= 8; ++n) {
        CHECK(f::dominance_both_sides(n) * boost::multiprecision::pow(BigCount(2), unsigned(n)) ==
              f::dominance_profiles(n));
    }
    CHECK_THROWS_AS(f::dominance_profiles(1), std::domain_error);
    CHECK_THROWS_AS(f::dominance_both_sides(1), std::domain_error);
}

TEST_CASE("same taste counts") {
    CHECK(f::same_taste_profiles(3) == 1296);
    CHECK(f::same_taste_both(3) == 36);
    CHECK(f::same_taste_both(1) == 1);
}

TEST_CASE("tastes differ counts") {
    CHECK(f::tastes_differ_profiles(3) == 10368);
    CHECK(f::tastes_differ_men_only(3) == 48);
    CHECK(f::tastes_differ_both(3) == 2304);
}

TEST_CASE("latin family counts") {
    CHECK(f::latin_men_profiles(3) == 2592);
    CHECK(f::mutually_latin_profiles(4) == 331776);
    CHECK(f::latin_profiles(3) == 12);
    CHECK(f::latin_profiles(2) == 2);
    CHECK(f::joint_profiles(4) == 13824);
    CHECK(f::joint_profiles(3) == 72);
    CHECK_THROWS_AS(f::latin_squares(8), std::domain_error);
}

TEST_CASE("soulmate-free completions S(k,n)") {
    for (int n = 1; n <= 6; ++n) CHECK(f::soulmate_free_completions(n, n) == 1);
    // S(n-1,n) = n!^2 - (n-1)!^2
    CHECK(f::soulmate_free_completions(2, 3) == 36 - 4);
    CHECK(f::soulmate_free_completions(0, 2) == 2);
    CHECK_THROWS_AS(f::soulmate_free_completions(4, 3), std::domain_error);
    CHECK_THROWS_AS(f::soulmate_free_completions(-1, 3), std::domain_error);
}

TEST_CASE("soulmate profiles F(k,n)") {
    CHECK(f::soulmate_profiles(1, 2) == 12);
    CHECK(f::soulmate_profiles(0, 3) == 9984);
    CHECK(f::soulmate_profiles(4, 4) == 40310784);
    CHECK(f::soulmate_profiles(2, 4) == BigCount("23460876288"));
    CHECK_THROWS_AS(f::soulmate_profiles(5, 4), std::domain_error);
}

TEST_CASE("F special cases match their closed forms") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(f::soulmate_profiles(n, n) ==
              boost::multiprecision::pow(f::factorial(n - 1), unsigned(2 * n)) * f::factorial(n));
        if (n >= 2) {
            CHECK(f::soulmate_profiles(n - 1, n) ==
                  boost::multiprecision::pow(f::factorial(n - 1), unsigned(2 * n + 1)) * n * n *
                      (n * n - 1));
        }
    }
}

TEST_CASE("soulmate distribution sums to the whole space for n<=8") {
    for (int n = 1; n <= 8; ++n) {
        BigCount sum = 0;
        for (int k = 0; k <= n; ++k) sum += f::soulmate_profiles(k, n);
        CHECK(sum == f::total_profiles(n));
    }
}

TEST_CASE("latin-men soulmate counts") {
    CHECK(f::latin_men_soulmates(3, 0) == 768);
    CHECK(f::latin_men_soulmates(4, 4) == 746496);
    CHECK(f::latin_men_soulmates(5, 0) == BigCount("1315033086689280"));
    CHECK(f::latin_men_soulmates(1, 0) == 0);
    CHECK(f::latin_men_soulmates(1, 1) == 1);
    for (int n = 1; n <= 5; ++n) {
        BigCount sum = 0;
        for (int k = 0; k <= n; ++k) sum += f::latin_men_soulmates(n, k);
        CHECK(sum == f::latin_men_profiles(n));
    }
}

TEST_CASE("mutually-latin soulmate counts vanish at k = n-1") {
    CHECK(f::mutually_latin_soulmates(3, 3) == 24);
    CHECK(f::mutually_latin_soulmates(4, 3) == 0);
    CHECK(f::mutually_latin_soulmates(5, 0) == BigCount("9537454080"));
    for (int n = 2; n <= 7; ++n) CHECK(f::mutually_latin_soulmates(n, n - 1) == 0);
    for (int n = 1; n <= 5; ++n) {
        BigCount sum = 0;
        for (int k = 0; k <= n; ++k) sum += f::mutually_latin_soulmates(n, k);
        CHECK(sum == f::mutually_latin_profiles(n));
    }
}

TEST_CASE("outcast counts, with the n=2 exception") {
    CHECK(f::outcast_profiles(1) == 1);
    CHECK(f::outcast_profiles(2) == 14);
    CHECK(f::outcast_profiles(3) == 5184);
    CHECK(f::outcast_hell_profiles(3) == 576);
    CHECK(f::outcast_hell_profiles(2) == 4);
    for (int n : {1, 3, 4, 5, 6}) {
        CHECK(f::outcast_profiles(n) == BigCount(n) * n * f::outcast_hell_profiles(n));
    }
}

TEST_CASE("profiles up to relabeling the men") {
    CHECK(f::men_profiles_up_to_relabeling(1) == 1);
    CHECK(f::men_profiles_up_to_relabeling(2) == 3);
    CHECK(f::men_profiles_up_to_relabeling(3) == 56);
    CHECK(f::men_profiles_up_to_relabeling(4) == 17550);
}

TEST_CASE("disjoint bounds") {
    CHECK(f::disjoint_profile_bounds(1) == std::pair<BigCount, BigCount>{1, 1});
    CHECK(f::disjoint_profile_bounds(2) == std::pair<BigCount, BigCount>{24, 4});
    CHECK(f::disjoint_profile_bounds(3) == std::pair<BigCount, BigCount>{362880, 36});
}

TEST_CASE("derangements match the alternating-series definition") {
    CHECK(f::derangements(0) == 1);
    CHECK(f::derangements(1) == 0);
    for (int i = 0; i <= 12; ++i) {
        // Independent route: D_i = sum_j (-1)^j i!/j!
        BigCount series = 0;
        for (int j = 0; j <= i; ++j) {
            const BigCount term = exact_div(f::factorial(i), f::factorial(j));
            series += (j % 2 == 0) ? term : -term;
        }
        CHECK(f::derangements(i) == series);
    }
}

TEST_CASE("binomial agrees with the Pascal recurrence") {
    for (int n = 0; n <= 25; ++n) {
        for (int k = 0; k <= n; ++k) {
            BigCount expected = 1;  // Pascal via repeated addition
            if (k > 0 && k < n) {
                expected = f::binomial(BigCount(n - 1), k - 1) + f::binomial(BigCount(n - 1), k);
            }
            CHECK(f::binomial(BigCount(n), k) == expected);
        }
    }
    CHECK(f::binomial(BigCount(3), 5) == 0);
}

TEST_CASE("stored latin-square counts match the backtracking counter, n<=5") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(BigCount(count_latin_squares(n)) == f::latin_squares(n));
    }
}

TEST_CASE("formula arguments are capped") {
    CHECK_THROWS_AS(f::total_profiles(0), std::domain_error);
    CHECK_THROWS_AS(f::total_profiles(f::kMaxN + 1), std::domain_error);
    CHECK(f::total_profiles(f::kMaxN) > 0);
}
