#include "smp/formulas.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace smp::formulas {

namespace {

using boost::multiprecision::pow;

void check_n(int n, const char* name, int min_n = 1) {
    if (n < min_n || n > kMaxN) {
        throw std::domain_error(std::string(name) + ": n must be in [" + std::to_string(min_n) +
                                ", " + std::to_string(kMaxN) + "], got " + std::to_string(n));
    }
}

// Memoized factorial/derangement tables; built once, read concurrently.
const std::vector<BigCount>& factorial_table() {
    static const std::vector<BigCount> table = [] {
        std::vector<BigCount> t(kMaxN + 1);
        t[0] = 1;
        for (int i = 1; i <= kMaxN; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}

const std::vector<BigCount>& derangement_table() {
    static const std::vector<BigCount> table = [] {
        std::vector<BigCount> t(kMaxN + 1);
        t[0] = 1;
        if (kMaxN >= 1) t[1] = 0;
        for (int i = 2; i <= kMaxN; ++i) t[i] = (i - 1) * (t[i - 1] + t[i - 2]);
        return t;
    }();
    return table;
}

BigCount fact_pow(int n, int exponent) { return pow(factorial_table()[n], unsigned(exponent)); }

}  // namespace

BigCount factorial(int n) {
    check_n(n, "factorial", 0);
    return factorial_table()[n];
}

BigCount binomial(const BigCount& n, int k) {
    if (k < 0) throw std::domain_error("binomial: k must be nonnegative");
    if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
    if (n < k) return 0;
    BigCount result = 1;
    for (int i = 1; i <= k; ++i) {
        result = exact_div(result * (n - k + i), BigCount(i));
    }
    return result;
}

BigCount derangements(int n) {
    check_n(n, "derangements", 0);
    return derangement_table()[n];
}

BigCount latin_squares(int n) {
    static const BigCount table[kMaxLatinN + 1] = {
        0, 1, 2, 12, 576, 161280, 812851200, BigCount("61479419904000")};
    if (n < 1 || n > kMaxLatinN) {
        throw std::domain_error("latin_squares: only n in [1, " +
                                std::to_string(kMaxLatinN) + "] is stored, got " +
                                std::to_string(n));
    }
    return table[n];
}

BigCount total_profiles(int n) {
    check_n(n, "total_profiles");
    return fact_pow(n, 2 * n);
}

BigCount homecoming_queen_profiles(int n) {
    check_n(n, "homecoming_queen_profiles");
    return n * fact_pow(n - 1, n) * fact_pow(n, n);
}

BigCount homecoming_queen_men_only(int n) {
    check_n(n, "homecoming_queen_men_only");
    return n * fact_pow(n - 1, n);
}

BigCount dominance_profiles(int n) {
    check_n(n, "dominance_profiles", 2);
    return exact_div(fact_pow(n, 2 * n), pow(BigCount(2), unsigned(n)));
}

BigCount dominance_men_only(int n) {
    check_n(n, "dominance_men_only", 2);
    return exact_div(fact_pow(n, n), pow(BigCount(2), unsigned(n)));
}

BigCount dominance_both_sides(int n) {
    check_n(n, "dominance_both_sides", 2);
    return exact_div(fact_pow(n, 2 * n), pow(BigCount(4), unsigned(n)));
}

BigCount same_taste_profiles(int n) {
    check_n(n, "same_taste_profiles");
    return fact_pow(n, n + 1);
}

BigCount same_taste_both(int n) {
    check_n(n, "same_taste_both");
    return fact_pow(n, 2);
}

BigCount tastes_differ_profiles(int n) {
    check_n(n, "tastes_differ_profiles");
    return fact_pow(n, n + 1) * fact_pow(n - 1, n);
}

BigCount tastes_differ_men_only(int n) {
    check_n(n, "tastes_differ_men_only");
    return factorial_table()[n] * fact_pow(n - 1, n);
}

BigCount tastes_differ_both(int n) {
    check_n(n, "tastes_differ_both");
    return fact_pow(n, 2) * fact_pow(n - 1, 2 * n);
}

BigCount latin_men_profiles(int n) {
    check_n(n, "latin_men_profiles");
    return fact_pow(n, n) * latin_squares(n);
}

BigCount mutually_latin_profiles(int n) {
    check_n(n, "mutually_latin_profiles");
    return latin_squares(n) * latin_squares(n);
}

BigCount latin_profiles(int n) {
    check_n(n, "latin_profiles");
    return latin_squares(n);
}

BigCount joint_profiles(int n) {
    check_n(n, "joint_profiles");
    return latin_squares(n) * factorial_table()[n];
}

BigCount soulmate_free_completions(int k, int n) {
    check_n(n, "soulmate_free_completions");
    if (k < 0 || k > n) throw std::domain_error("soulmate_free_completions: need 0 <= k <= n");
    BigCount sum = 0;
    for (int i = 0; i <= n - k; ++i) {
        BigCount term = binomial(BigCount(n - k), i);
        term *= term;
        term *= fact_pow(n - 1, 2 * i);
        term *= factorial_table()[i];
        term *= fact_pow(n, 2 * n - 2 * k - 2 * i);
        sum += (i % 2 == 0) ? term : -term;
    }
    if (sum < 0) throw std::logic_error("soulmate_free_completions: negative total");
    return sum;
}

BigCount soulmate_profiles(int k, int n) {
    check_n(n, "soulmate_profiles");
    if (k < 0 || k > n) throw std::domain_error("soulmate_profiles: need 0 <= k <= n");
    BigCount choose = binomial(BigCount(n), k);
    return choose * choose * factorial_table()[k] * fact_pow(n - 1, 2 * k) *
           soulmate_free_completions(k, n);
}

BigCount latin_men_soulmates(int n, int k) {
    check_n(n, "latin_men_soulmates");
    if (k < 0 || k > n) throw std::domain_error("latin_men_soulmates: need 0 <= k <= n");
    // (n-1)^(n-k) with the 0^0 = 1 reading at n = 1, k = 1.
    BigCount leave_first = n - k == 0 ? BigCount(1) : pow(BigCount(n - 1), unsigned(n - k));
    return latin_squares(n) * binomial(BigCount(n), k) * leave_first * fact_pow(n - 1, n);
}

BigCount mutually_latin_soulmates(int n, int k) {
    check_n(n, "mutually_latin_soulmates");
    if (k < 0 || k > n) throw std::domain_error("mutually_latin_soulmates: need 0 <= k <= n");
    const BigCount squares_per_relabeling = exact_div(latin_squares(n) * latin_squares(n),
                                                      factorial_table()[n]);
    return squares_per_relabeling * binomial(BigCount(n), k) * derangement_table()[n - k];
}

BigCount outcast_profiles(int n) {
    check_n(n, "outcast_profiles");
    if (n == 2) return 14;  // two outcast pairs can coexist only at n = 2
    return pow(BigCount(n), 4) * fact_pow(n - 1, 2 * n);
}

BigCount outcast_hell_profiles(int n) {
    check_n(n, "outcast_hell_profiles");
    return BigCount(n) * n * fact_pow(n - 1, 2 * n);
}

BigCount men_profiles_up_to_relabeling(int n) {
    check_n(n, "men_profiles_up_to_relabeling");
    return binomial(factorial_table()[n] + n - 1, n);
}

std::pair<BigCount, BigCount> disjoint_profile_bounds(int n) {
    check_n(n, "disjoint_profile_bounds");
    BigCount upper = 1;
    for (int i = 2; i <= n * n; ++i) upper *= i;
    return {upper, fact_pow(n, 2)};
}

}  // namespace smp::formulas
