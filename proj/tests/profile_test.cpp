#include <doctest.h>

#include <random>

#include "smp/classify.hpp"
#include "smp/error.hpp"
#include "smp/formulas.hpp"
#include "smp/profile.hpp"
#include "smp/profile_index.hpp"

#include "test_util.hpp"

using namespace smp;

TEST_CASE("parse_profile reads the documented format") {
    const auto p = parse_profile("1 2\n2 1\n2 1\n1 2\n");
    CHECK(p.n == 2);
    CHECK(p.men == std::vector<int>{1, 2, 2, 1});
    CHECK(p.women == std::vector<int>{2, 1, 1, 2});
    CHECK(p == test::two_stable_2x2());
}

TEST_CASE("parse_profile handles n=1, comments and blank lines") {
    CHECK(parse_profile("1\n1\n").n == 1);
    const auto p = parse_profile("# a comment\n\n1 2\n2 1\n\n2 1\n# another\n1 2\n");
    CHECK(p == test::two_stable_2x2());
    CHECK(parse_profile("1 2\n2 1\n2 1\n1 2")  // no trailing newline
          == test::two_stable_2x2());
}

TEST_CASE("parse_profile rejects bad input with line numbers") {
    CHECK_THROWS_AS(parse_profile(""), ParseError);
    CHECK_THROWS_AS(parse_profile("1 2\n2 1\n"), ParseError);         // wrong row count
    CHECK_THROWS_AS(parse_profile("1 2\n2 1\n2 1\n1 x\n"), ParseError);
    try {
        parse_profile("1 2\n1 1\n1 2\n2 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
    try {
        parse_profile("1 2\n2 1\n2 1\n1\n");  // inconsistent n
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("format_profile round-trips") {
    std::mt19937 rng(7);
    for (int n : {1, 2, 3, 5}) {
        const auto p = test::random_profile(n, rng);
        CHECK(parse_profile(format_profile(p)) == p);
    }
}

TEST_CASE("make_profile validates rows") {
    CHECK_THROWS_AS(make_profile(2, {1, 1, 1, 2}, {1, 2, 1, 2}), ValidationError);
    CHECK_THROWS_AS(make_profile(2, {1, 2, 1, 2}, {1, 3, 1, 2}), ValidationError);
    CHECK_THROWS_AS(make_profile(0, {}, {}), ValidationError);
    CHECK_THROWS_AS(make_profile(2, {1, 2}, {1, 2, 1, 2}), ValidationError);
}

TEST_CASE("encode_profile matches the mixed-radix examples") {
    const auto one = make_profile(1, {1}, {1});
    CHECK(encode_profile(one).value == 0);
    CHECK(decode_profile({BigCount(0), 1}) == one);

    const auto identity2 = make_profile(2, {1, 2, 1, 2}, {1, 2, 1, 2});
    CHECK(encode_profile(identity2).value == 0);
    CHECK(decode_profile({BigCount(0), 2}) == identity2);

    const auto reversed2 = make_profile(2, {2, 1, 2, 1}, {2, 1, 2, 1});
    CHECK(encode_profile(reversed2).value == 15);
    CHECK(decode_profile({BigCount(15), 2}) == reversed2);
}

TEST_CASE("decode_profile rejects out-of-range indices") {
    CHECK_THROWS_AS(decode_profile({BigCount(16), 2}), ValidationError);
    CHECK_THROWS_AS(decode_profile({BigCount(-1), 2}), ValidationError);
    CHECK_THROWS_AS(decode_profile({BigCount(0), 0}), ValidationError);
}

TEST_CASE("round-trip decode(encode(p)) is exhaustive for n=2") {
    int count = 0;
    test::for_each_profile(2, [&](const PreferenceProfile& p) {
        const auto idx = encode_profile(p);
        CHECK(idx.value == count);
        CHECK(decode_profile(idx) == p);
        ++count;
    });
    CHECK(count == 16);
}

TEST_CASE("round-trip holds on random profiles for n=3,4") {
    std::mt19937 rng(42);
    for (int n : {3, 4}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto p = test::random_profile(n, rng);
            CHECK(decode_profile(encode_profile(p)) == p);
        }
    }
}

TEST_CASE("index space size equals the closed-form profile count") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(profile_space_size(n) == formulas::total_profiles(n));
    }
}

TEST_CASE("permutation rank/unrank are lexicographic inverses") {
    const int n = 4;
    std::vector<int> perm(n);
    for (std::uint64_t rank = 0; rank < factorial_u64(n); ++rank) {
        permutation_unrank(rank, perm);
        CHECK(permutation_rank(perm) == rank);
        if (rank > 0) {
            std::vector<int> prev(n);
            permutation_unrank(rank - 1, prev);
            CHECK(prev < perm);  // lexicographic order
        }
    }
}

TEST_CASE("complement is an involution and maps the examples") {
    const auto one = make_profile(1, {1}, {1});
    CHECK(complement(one) == one);

    const auto p = test::two_stable_2x2();
    const auto c = complement(p);
    CHECK(c == make_profile(2, {2, 1, 1, 2}, {1, 2, 2, 1}));
    CHECK(complement(c) == p);
}

TEST_CASE("complement exchanges soulmates with hell-pairs") {
    test::for_each_profile(2, [&](const PreferenceProfile& p) {
        const auto c = complement(p);
        CHECK(complement(c) == p);
        CHECK(count_soulmates(c) == count_hell_pairs(p));
        CHECK(count_hell_pairs(c) == count_soulmates(p));
    });
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = test::random_profile(3, rng);
        const auto c = complement(p);
        CHECK(complement(c) == p);
        CHECK(count_soulmates(c) == count_hell_pairs(p));
    }
}

TEST_CASE("choice_order inverts a rating row") {
    const std::vector<int> ratings{2, 3, 1};  // person 2 is the favorite
    CHECK(choice_order(ratings) == std::vector<int>{2, 0, 1});
}
