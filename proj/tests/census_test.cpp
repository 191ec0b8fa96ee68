#include <doctest.h>

#include "smp/census.hpp"
#include "smp/classify.hpp"
#include "smp/error.hpp"
#include "smp/formulas.hpp"
#include "smp/matching.hpp"

#include "test_util.hpp"

using namespace smp;
namespace f = smp::formulas;

namespace {

CensusSpec base_spec(int n, std::vector<Statistic> stats) {
    CensusSpec spec;
    spec.n = n;
    spec.statistics = std::move(stats);
    return spec;
}

}  // namespace

TEST_CASE("n=1 censuses are all trivial") {
    auto table = census_statistic(1, Statistic::StableMatchings);
    CHECK(table.rows == std::map<int, BigCount>{{1, 1}});
    CHECK(census_statistic(1, Statistic::SoulmatePairs).rows ==
          std::map<int, BigCount>{{1, 1}});
    CHECK(census_hell_couples(1) == std::pair<BigCount, BigCount>{1, 1});
    CHECK(census_disjoint(1) == 1);
}

TEST_CASE("n=2 stable matching distribution") {
    const auto table = census_statistic(2, Statistic::StableMatchings);
    CHECK(table.rows == std::map<int, BigCount>{{1, 14}, {2, 2}});
    CHECK(table.total == 16);
}

TEST_CASE("n=2 soulmate distribution matches the hand count") {
    const auto table = census_statistic(2, Statistic::SoulmatePairs);
    CHECK(table.rows == std::map<int, BigCount>{{0, 2}, {1, 12}, {2, 2}});
}

TEST_CASE("soulmate and hell-pair tables coincide (complement bijection)") {
    for (int n : {1, 2, 3}) {
        auto result = run_census(base_spec(n, {Statistic::SoulmatePairs, Statistic::HellPairs}));
        CHECK(result.at(Statistic::SoulmatePairs).rows == result.at(Statistic::HellPairs).rows);
    }
}

TEST_CASE("census tables are identical across worker counts and chunk sizes") {
    for (Statistic stat : {Statistic::StableMatchings, Statistic::EgalitarianCostMatchings,
                           Statistic::SoulmatePairs}) {
        const auto reference = census_statistic(3, stat, 1);
        for (int workers : {2, 8}) {
            auto spec = base_spec(3, {stat});
            spec.workers = workers;
            CHECK(run_census(spec).at(stat).rows == reference.rows);
        }
        auto odd_chunks = base_spec(3, {stat});
        odd_chunks.workers = 3;
        odd_chunks.chunk_size = 977;  // force uneven partitioning
        CHECK(run_census(odd_chunks).at(stat).rows == reference.rows);
    }
}

TEST_CASE("symmetry reduction leaves invariant statistics unchanged") {
    for (int n : {2, 3}) {
        for (Statistic stat : {Statistic::StableMatchings, Statistic::SoulmatePairs,
                               Statistic::EgalitarianCostProfiles, Statistic::OutcastPairs,
                               Statistic::HellCoupleMatchings}) {
            const auto full = census_statistic(n, stat);
            auto spec = base_spec(n, {stat});
            spec.symmetry_reduction = true;
            spec.workers = 2;
            const auto reduced = run_census(spec).at(stat);
            CHECK(reduced.rows == full.rows);
        }
    }
}

TEST_CASE("class-counts refuses reduced runs") {
    auto spec = base_spec(2, {Statistic::ClassCounts});
    spec.symmetry_reduction = true;
    CHECK_THROWS_AS(run_census(spec), ValidationError);

    auto disjoint_spec = base_spec(2, {Statistic::ClassCounts});
    disjoint_spec.family = Family::Disjoint;
    CHECK_THROWS_AS(run_census(disjoint_spec), ValidationError);

    auto latin_spec = base_spec(2, {Statistic::ClassCounts});
    latin_spec.family = Family::LatinMen;
    latin_spec.symmetry_reduction = true;
    CHECK_THROWS_AS(run_census(latin_spec), ValidationError);
}

TEST_CASE("work guards refuse oversized runs") {
    auto spec = base_spec(4, {Statistic::StableMatchings});
    CHECK_THROWS_AS(run_census(spec), GatedError);  // needs force

    auto huge = base_spec(5, {Statistic::StableMatchings});
    huge.force = true;
    CHECK_THROWS_AS(run_census(huge), GatedError);  // beyond desk scale even forced

    auto latin5 = base_spec(5, {Statistic::SoulmatePairs});
    latin5.family = Family::LatinMen;
    latin5.force = true;
    CHECK_THROWS_AS(run_census(latin5), GatedError);

    CHECK_THROWS_AS(run_census(base_spec(2, {})), ValidationError);  // no statistics
}

TEST_CASE("with-soulmate-pair family matches a filtered oracle for n=2") {
    // Oracle: filter the full space through the classifier.
    std::map<int, BigCount> expected;
    test::for_each_profile(2, [&](const PreferenceProfile& p) {
        if (count_soulmates(p) == 0) return;
        expected[int(enumerate_stable(p).size())] += 1;
    });
    const auto table = census_stable_with_soulmates(2);
    CHECK(table.rows == expected);
    CHECK(table.rows == std::map<int, BigCount>{{1, 14}});
}

TEST_CASE("stable distribution with soulmates for n=3") {
    const auto table = census_stable_with_soulmates(3, 2);
    CHECK(table.rows == std::map<int, BigCount>{{1, 30840}, {2, 5832}});
    CHECK(table.total == 36672);
    CHECK(table.total == f::total_profiles(3) - f::soulmate_profiles(0, 3));
}

TEST_CASE("disjoint census agrees with a brute-force filter for n=2") {
    BigCount filtered = 0;
    test::for_each_profile(2, [&](const PreferenceProfile& p) { filtered += is_disjoint(p); });
    CHECK(census_disjoint(2) == filtered);
    CHECK(census_disjoint(2) == 12);
    CHECK(census_disjoint(3) == 8784);
}

TEST_CASE("generative joint family visits exactly the joint profiles") {
    for (int n : {1, 2, 3}) {
        auto spec = base_spec(n, {Statistic::ClassCounts});
        spec.family = Family::Joint;
        const auto table = run_census(spec).at(Statistic::ClassCounts);
        auto bucket = [&](ClassPredicate c) {
            auto it = table.rows.find(int(c));
            return it == table.rows.end() ? BigCount(0) : it->second;
        };
        CHECK(bucket(ClassPredicate::Joint) == f::joint_profiles(n));
        CHECK(bucket(ClassPredicate::MutuallyLatin) == f::joint_profiles(n));
        CHECK(bucket(ClassPredicate::LatinMen) == f::joint_profiles(n));
    }
}

TEST_CASE("hell-couple censuses for n<=3") {
    CHECK(census_hell_couples(2) == std::pair<BigCount, BigCount>{4, 4});
    CHECK(census_hell_couples(3, 2) == std::pair<BigCount, BigCount>{4536, 4608});
}

TEST_CASE("egalitarian tables for n=2") {
    const auto profiles = census_egalitarian_profiles(2);
    CHECK(profiles.rows == std::map<int, BigCount>{{4, 2}, {5, 8}, {6, 6}});
    const auto matchings = census_egalitarian_matchings(2);
    CHECK(matchings.rows == std::map<int, BigCount>{{4, 2}, {5, 8}, {6, 8}});
}

TEST_CASE("progress callback reaches 100 percent") {
    auto spec = base_spec(2, {Statistic::SoulmatePairs});
    spec.chunk_size = 4;
    int last = -1;
    spec.progress = [&](int pct) {
        CHECK(pct == last + 1);  // every percent, in order
        last = pct;
    };
    run_census(spec);
    CHECK(last == 100);
}

TEST_CASE("verify_formulas passes for n=1 and n=2") {
    for (int n : {1, 2}) {
        const auto report = verify_formulas(n);
        CHECK(report.all_ok());
        CHECK(!report.rows.empty());
    }
}

TEST_CASE("work estimates match family sizes") {
    CHECK(census_work_estimate(3, Family::All, false) == 46656);
    CHECK(census_work_estimate(3, Family::All, true) == 7776);
    CHECK(census_work_estimate(3, Family::LatinMen, false) == 2592);
    CHECK(census_work_estimate(3, Family::MutuallyLatin, false) == 144);
    CHECK(census_work_estimate(3, Family::Joint, false) == 72);
    CHECK(census_work_estimate(3, Family::Disjoint, false) == 1296);
}

TEST_CASE("family and statistic names round-trip") {
    for (Family fam : {Family::All, Family::LatinMen, Family::MutuallyLatin, Family::Disjoint,
                       Family::Joint, Family::WithSoulmatePair}) {
        CHECK(family_from_name(family_name(fam)) == fam);
    }
    for (Statistic s : {Statistic::StableMatchings, Statistic::SoulmatePairs,
                        Statistic::HellPairs, Statistic::OutcastPairs,
                        Statistic::EgalitarianCostProfiles, Statistic::EgalitarianCostMatchings,
                        Statistic::HellCoupleProfiles, Statistic::HellCoupleMatchings,
                        Statistic::ClassCounts}) {
        CHECK(statistic_from_name(statistic_name(s)) == s);
    }
    CHECK_THROWS_AS(family_from_name("bogus"), ValidationError);
    CHECK_THROWS_AS(statistic_from_name("bogus"), ValidationError);
}
