#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "smp/bigint.hpp"

namespace smp {

enum class Family { All, LatinMen, MutuallyLatin, Disjoint, Joint, WithSoulmatePair };

enum class Statistic {
    StableMatchings,           // profiles bucketed by number of stable matchings
    SoulmatePairs,             // profiles bucketed by soulmate-pair count
    HellPairs,                 // profiles bucketed by hell-pair count
    OutcastPairs,              // profiles bucketed by outcast-pair count
    EgalitarianCostProfiles,   // profiles counted once per distinct stable cost
    EgalitarianCostMatchings,  // stable (profile, matching) pairs bucketed by cost
    HellCoupleProfiles,        // bucket 1: profiles whose stable matchings have a hell-couple
    HellCoupleMatchings,       // bucket 1: those profiles with stable-matching multiplicity
    ClassCounts,               // bucket per profile-family predicate (always unreduced)
};

// Bucket indices used by Statistic::ClassCounts. The dominance predicates fix
// the pair (1, 2) and are counted only for n >= 2.
enum class ClassPredicate : int {
    HomecomingQueen,
    HomecomingKing,
    DominanceMen,
    DominanceBoth,
    SameTasteMen,
    SameTasteBoth,
    TastesDifferMen,
    TastesDifferBoth,
    LatinMen,
    MutuallyLatin,
    LatinProfile,
    Joint,
    Disjoint,
    OutcastAny,
    OutcastHell,
    Count_,
};
const char* class_predicate_name(ClassPredicate p);

const char* family_name(Family f);
const char* statistic_name(Statistic s);
Family family_from_name(const std::string& name);
Statistic statistic_from_name(const std::string& name);

struct CensusSpec {
    int n = 1;
    Family family = Family::All;
    std::vector<Statistic> statistics;
    int workers = 1;
    bool symmetry_reduction = false;  // fix woman 1's row to identity, scale by n!
    bool force = false;               // allow runs past the default work guard
    std::uint64_t chunk_size = 1u << 16;
    // Called with each newly reached whole percent; must be thread-safe.
    std::function<void(int)> progress;
};

struct CensusTable {
    std::map<int, BigCount> rows;
    BigCount total;  // sum of rows
    std::chrono::duration<double> elapsed{};
};

using CensusResult = std::map<Statistic, CensusTable>;

// Number of profiles a census run would visit; the guard input.
BigCount census_work_estimate(int n, Family family, bool symmetry_reduction);

// Deterministic brute-force census: iterates the family's profiles in
// contiguous index ranges with worker-local accumulators merged by addition,
// so tables are identical for any worker count. Throws GatedError with a
// cost estimate when the run exceeds the work guard and force is off.
CensusResult run_census(const CensusSpec& spec);

// Convenience wrappers over run_census.
CensusTable census_statistic(int n, Statistic stat, int workers = 1, bool force = false);
CensusTable census_stable_with_soulmates(int n, int workers = 1, bool force = false);
// (profiles admitting a stable matching with a hell-couple, same profiles
// counted with stable-matching multiplicity)
std::pair<BigCount, BigCount> census_hell_couples(int n, int workers = 1, bool force = false);
CensusTable census_egalitarian_profiles(int n, int workers = 1, bool force = false);
CensusTable census_egalitarian_matchings(int n, int workers = 1, bool force = false);
// Counts disjoint profiles by scanning only those whose first man and first
// woman rank everyone in label order, scaled by (n!)^2.
BigCount census_disjoint(int n, bool force = false);

struct VerifyRow {
    std::string name;
    BigCount census_value;
    BigCount formula_value;
    bool ok = false;
};

struct VerifyReport {
    int n = 0;
    std::vector<VerifyRow> rows;
    bool all_ok() const;
};

// Cross-validates every census statistic that has a closed form against the
// formulas module.
VerifyReport verify_formulas(int n, int workers = 1, bool force = false);

}  // namespace smp
