#include "smp/census.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "smp/classify.hpp"
#include "smp/error.hpp"
#include "smp/formulas.hpp"
#include "smp/latin.hpp"
#include "smp/matching.hpp"
#include "smp/profile_index.hpp"

namespace smp {

namespace {

// Work guards, in visited profiles. Default runs stay interactive; forced
// runs allow the multi-hour n = 4 full census but still refuse anything
// beyond desk scale.
constexpr std::uint64_t kFreeVisitLimit = 20'000'000;
constexpr std::uint64_t kForcedVisitLimit = 500'000'000'000;

struct NamePair {
    const char* name;
    int value;
};

constexpr NamePair kFamilyNames[] = {
    {"all", int(Family::All)},
    {"latin-men", int(Family::LatinMen)},
    {"mutually-latin", int(Family::MutuallyLatin)},
    {"disjoint", int(Family::Disjoint)},
    {"joint", int(Family::Joint)},
    {"with-soulmate-pair", int(Family::WithSoulmatePair)},
};

constexpr NamePair kStatisticNames[] = {
    {"stable-count", int(Statistic::StableMatchings)},
    {"soulmate-count", int(Statistic::SoulmatePairs)},
    {"hell-pair-count", int(Statistic::HellPairs)},
    {"outcasts", int(Statistic::OutcastPairs)},
    {"egalitarian-cost-profiles", int(Statistic::EgalitarianCostProfiles)},
    {"egalitarian-cost-matchings", int(Statistic::EgalitarianCostMatchings)},
    {"hell-couple-profiles", int(Statistic::HellCoupleProfiles)},
    {"hell-couple-matchings", int(Statistic::HellCoupleMatchings)},
    {"class-counts", int(Statistic::ClassCounts)},
};

constexpr const char* kClassPredicateNames[] = {
    "homecoming-queen", "homecoming-king",   "dominance-men",  "dominance-both",
    "same-taste-men",   "same-taste-both",   "tastes-differ-men", "tastes-differ-both",
    "latin-men",        "mutually-latin",    "latin-profile",  "joint",
    "disjoint",         "outcast-any",       "outcast-hell",
};
static_assert(std::size(kClassPredicateNames) == size_t(ClassPredicate::Count_));

}  // namespace

const char* family_name(Family f) {
    for (const auto& p : kFamilyNames) {
        if (p.value == int(f)) return p.name;
    }
    return "?";
}

const char* statistic_name(Statistic s) {
    for (const auto& p : kStatisticNames) {
        if (p.value == int(s)) return p.name;
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    for (const auto& p : kFamilyNames) {
        if (name == p.name) return Family(p.value);
    }
    throw ValidationError("unknown family: " + name);
}

Statistic statistic_from_name(const std::string& name) {
    for (const auto& p : kStatisticNames) {
        if (name == p.name) return Statistic(p.value);
    }
    throw ValidationError("unknown statistic: " + name);
}

const char* class_predicate_name(ClassPredicate p) { return kClassPredicateNames[int(p)]; }

namespace {

// ---------------------------------------------------------------------------
// Per-profile statistic evaluation into dense worker-local histograms.

struct Accumulator {
    std::vector<std::vector<std::uint64_t>> hist;  // one per requested statistic
};

struct Scratch {
    std::vector<int> costs;
};

class StatCollector {
public:
    StatCollector(int n, const std::vector<Statistic>& stats) : n_(n), stats_(stats) {
        for (Statistic s : stats) {
            switch (s) {
                case Statistic::StableMatchings:
                case Statistic::EgalitarianCostProfiles:
                case Statistic::EgalitarianCostMatchings:
                case Statistic::HellCoupleProfiles:
                case Statistic::HellCoupleMatchings:
                    need_stable_ = true;
                    break;
                default:
                    break;
            }
            need_costs_ |= s == Statistic::EgalitarianCostProfiles ||
                           s == Statistic::EgalitarianCostMatchings;
            need_hell_couples_ |= s == Statistic::HellCoupleProfiles ||
                                  s == Statistic::HellCoupleMatchings;
        }
        if (need_stable_) {
            Matching perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                perms_.push_back(perm);
                Matching inv(n);
                for (int i = 0; i < n; ++i) inv[perm[i]] = i;
                inv_perms_.push_back(std::move(inv));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    Accumulator make_accumulator() const {
        Accumulator acc;
        for (Statistic s : stats_) acc.hist.emplace_back(bucket_count(s), 0);
        return acc;
    }

    void visit(const PreferenceProfile& p, Accumulator& acc, Scratch& scratch) const {
        int stable_count = 0;
        int hell_matchings = 0;
        if (need_stable_) {
            scratch.costs.clear();
            for (size_t i = 0; i < perms_.size(); ++i) {
                const auto& wife = perms_[i];
                if (!is_stable_matched(p, wife, inv_perms_[i])) continue;
                ++stable_count;
                if (need_costs_) {
                    int cost = 0;
                    for (int m = 0; m < n_; ++m) {
                        cost += p.man_rank(m, wife[m]) + p.woman_rank(wife[m], m);
                    }
                    scratch.costs.push_back(cost);
                }
                if (need_hell_couples_) {
                    for (int m = 0; m < n_; ++m) {
                        if (p.man_rank(m, wife[m]) == n_ && p.woman_rank(wife[m], m) == n_) {
                            ++hell_matchings;
                            break;
                        }
                    }
                }
            }
        }

        for (size_t si = 0; si < stats_.size(); ++si) {
            auto& hist = acc.hist[si];
            switch (stats_[si]) {
                case Statistic::StableMatchings:
                    ++hist[stable_count];
                    break;
                case Statistic::SoulmatePairs:
                    ++hist[count_soulmates(p)];
                    break;
                case Statistic::HellPairs:
                    ++hist[count_hell_pairs(p)];
                    break;
                case Statistic::OutcastPairs:
                    ++hist[count_outcast_pairs(p)];
                    break;
                case Statistic::EgalitarianCostProfiles: {
                    auto& costs = scratch.costs;
                    std::sort(costs.begin(), costs.end());
                    for (size_t i = 0; i < costs.size(); ++i) {
                        if (i == 0 || costs[i] != costs[i - 1]) ++hist[costs[i]];
                    }
                    break;
                }
                case Statistic::EgalitarianCostMatchings:
                    for (int c : scratch.costs) ++hist[c];
                    break;
                case Statistic::HellCoupleProfiles:
                    if (hell_matchings > 0) ++hist[1];
                    break;
                case Statistic::HellCoupleMatchings:
                    hist[1] += hell_matchings;
                    break;
                case Statistic::ClassCounts:
                    add_class_counts(p, hist);
                    break;
            }
        }
    }

    const std::vector<Statistic>& stats() const { return stats_; }

private:
    size_t bucket_count(Statistic s) const {
        switch (s) {
            case Statistic::StableMatchings:
                return perms_.size() + 1;
            case Statistic::SoulmatePairs:
            case Statistic::HellPairs:
            case Statistic::OutcastPairs:
                return size_t(n_) + 1;
            case Statistic::EgalitarianCostProfiles:
            case Statistic::EgalitarianCostMatchings:
                return size_t(2 * n_ * n_) + 1;
            case Statistic::HellCoupleProfiles:
            case Statistic::HellCoupleMatchings:
                return 2;
            case Statistic::ClassCounts:
                return size_t(ClassPredicate::Count_);
        }
        return 0;
    }

    void add_class_counts(const PreferenceProfile& p, std::vector<std::uint64_t>& hist) const {
        auto bump = [&](ClassPredicate c, bool value) {
            if (value) ++hist[int(c)];
        };
        bump(ClassPredicate::HomecomingQueen, has_homecoming_queen(p));
        bump(ClassPredicate::HomecomingKing, has_homecoming_king(p));
        if (n_ >= 2) {
            const bool dm = dominance(p, 0, 1, Side::Men);
            bump(ClassPredicate::DominanceMen, dm);
            bump(ClassPredicate::DominanceBoth, dm && dominance(p, 0, 1, Side::Women));
        }
        const bool mst = men_same_taste(p);
        bump(ClassPredicate::SameTasteMen, mst);
        bump(ClassPredicate::SameTasteBoth, mst && women_same_taste(p));
        const bool mfd = men_first_choices_distinct(p);
        bump(ClassPredicate::TastesDifferMen, mfd);
        bump(ClassPredicate::TastesDifferBoth, mfd && women_first_choices_distinct(p));
        const bool ml = men_latin(p);
        bump(ClassPredicate::LatinMen, ml);
        bump(ClassPredicate::MutuallyLatin, ml && women_latin(p));
        bump(ClassPredicate::LatinProfile, is_latin_profile(p));
        bump(ClassPredicate::Joint, is_joint(p));
        bump(ClassPredicate::Disjoint, is_disjoint(p));
        bump(ClassPredicate::OutcastAny, count_outcast_pairs(p) > 0);
        bump(ClassPredicate::OutcastHell, has_outcast_hell_pair(p));
    }

    int n_;
    std::vector<Statistic> stats_;
    bool need_stable_ = false;
    bool need_costs_ = false;
    bool need_hell_couples_ = false;
    std::vector<Matching> perms_;
    std::vector<Matching> inv_perms_;
};

void merge(Accumulator& into, const Accumulator& from) {
    for (size_t i = 0; i < into.hist.size(); ++i) {
        for (size_t j = 0; j < into.hist[i].size(); ++j) into.hist[i][j] += from.hist[i][j];
    }
}

// ---------------------------------------------------------------------------
// Mixed-radix iteration over profile rows. Pinned rows stay at the identity
// permutation (Lehmer digit 0) or whatever the caller wrote into the profile.

class RowOdometer {
public:
    // free_rows: flat row ids (men 0..n-1, women n..2n-1) that iterate, most
    // significant first.
    RowOdometer(int n, std::vector<int> free_rows)
        : n_(n), base_(factorial_u64(n)), free_rows_(std::move(free_rows)),
          digits_(free_rows_.size(), 0) {
        prof_.n = n;
        prof_.men.assign(size_t(n) * n, 0);
        prof_.women.assign(size_t(n) * n, 0);
        for (int r = 0; r < 2 * n; ++r) permutation_unrank(0, row_span(r));
    }

    BigCount space() const {
        return boost::multiprecision::pow(BigCount(base_), unsigned(free_rows_.size()));
    }

    void seek(std::uint64_t sub_index) {
        for (int slot = int(digits_.size()) - 1; slot >= 0; --slot) {
            digits_[slot] = sub_index % base_;
            sub_index /= base_;
            permutation_unrank(digits_[slot], row_span(free_rows_[slot]));
        }
        assert(sub_index == 0);
    }

    // Advances to the next profile; false once the free digits wrap to zero.
    bool advance() {
        for (int slot = int(digits_.size()) - 1; slot >= 0; --slot) {
            if (++digits_[slot] < base_) {
                permutation_unrank(digits_[slot], row_span(free_rows_[slot]));
                return true;
            }
            digits_[slot] = 0;
            permutation_unrank(0, row_span(free_rows_[slot]));
        }
        return false;
    }

    const PreferenceProfile& profile() const { return prof_; }
    PreferenceProfile& mutable_profile() { return prof_; }

private:
    std::span<int> row_span(int flat_row) {
        int* data = flat_row < n_ ? prof_.men.data() + flat_row * n_
                                  : prof_.women.data() + (flat_row - n_) * n_;
        return {data, size_t(n_)};
    }

    int n_;
    std::uint64_t base_;
    std::vector<int> free_rows_;
    std::vector<std::uint64_t> digits_;
    PreferenceProfile prof_;
};

struct ProgressMeter {
    std::uint64_t total_chunks = 0;
    std::atomic<std::uint64_t> done{0};
    std::atomic<int> last_percent{-1};
    std::mutex mu;
    const std::function<void(int)>* callback = nullptr;

    void tick() {
        if (!callback || !*callback || total_chunks == 0) return;
        const std::uint64_t d = ++done;
        const int pct = int(d * 100 / total_chunks);
        if (pct <= last_percent.load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> lock(mu);
        while (last_percent.load(std::memory_order_relaxed) < pct) {
            last_percent.fetch_add(1, std::memory_order_relaxed);
            (*callback)(last_percent.load(std::memory_order_relaxed));
        }
    }
};

// Runs `body(worker_accumulator, scratch, work_item)` over items [0, count)
// claimed from a shared counter; merges worker accumulators by addition, so
// the result is independent of scheduling.
template <typename Body>
Accumulator parallel_reduce(const StatCollector& collector, int workers, std::uint64_t count,
                            const Body& body) {
    workers = std::max(1, workers);
    if (count > 0) workers = int(std::min<std::uint64_t>(workers, count));
    Accumulator total = collector.make_accumulator();
    if (count == 0) return total;

    if (workers == 1) {
        Scratch scratch;
        for (std::uint64_t item = 0; item < count; ++item) body(total, scratch, item);
        return total;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<Accumulator> partial(workers);
    std::vector<std::thread> threads;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (int t = 0; t < workers; ++t) {
        partial[t] = collector.make_accumulator();
        threads.emplace_back([&, t] {
            try {
                Scratch scratch;
                for (;;) {
                    const std::uint64_t item = next.fetch_add(1);
                    if (item >= count) break;
                    body(partial[t], scratch, item);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);
    for (const auto& p : partial) merge(total, p);
    return total;
}

enum class IndexFilter { None, HasSoulmate, Disjoint };

Accumulator run_indexed(const CensusSpec& spec, const StatCollector& collector,
                        const std::vector<int>& free_rows, IndexFilter filter) {
    RowOdometer probe(spec.n, free_rows);
    const BigCount space_big = probe.space();
    if (space_big > std::numeric_limits<std::uint64_t>::max()) {
        throw std::logic_error("census: index space exceeds 64 bits; guard should have fired");
    }
    const auto space = std::uint64_t(space_big);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, spec.chunk_size);
    const std::uint64_t chunks = (space + chunk - 1) / chunk;

    ProgressMeter meter;
    meter.total_chunks = chunks;
    meter.callback = &spec.progress;

    return parallel_reduce(collector, spec.workers, chunks,
                           [&](Accumulator& acc, Scratch& scratch, std::uint64_t c) {
        RowOdometer odo(spec.n, free_rows);
        const std::uint64_t start = c * chunk;
        const std::uint64_t count = std::min(chunk, space - start);
        odo.seek(start);
        for (std::uint64_t i = 0; i < count; ++i) {
            const PreferenceProfile& p = odo.profile();
            bool keep = true;
            if (filter == IndexFilter::HasSoulmate) keep = count_soulmates(p) > 0;
            if (filter == IndexFilter::Disjoint) keep = is_disjoint(p);
            if (keep) collector.visit(p, acc, scratch);
            odo.advance();
        }
        meter.tick();
    });
}

std::vector<std::vector<int>> collect_latin_squares(int n) {
    std::vector<std::vector<int>> squares;
    for_each_latin_square(n, [&](const std::vector<int>& sq) { squares.push_back(sq); });
    return squares;
}

Accumulator run_latin_men(const CensusSpec& spec, const StatCollector& collector) {
    const int n = spec.n;
    const auto squares = collect_latin_squares(n);
    std::vector<int> women_rows(n);
    std::iota(women_rows.begin(), women_rows.end(), n);
    return parallel_reduce(collector, spec.workers, squares.size(),
                           [&](Accumulator& acc, Scratch& scratch, std::uint64_t s) {
        RowOdometer odo(n, women_rows);
        odo.mutable_profile().men = squares[s];
        odo.seek(0);
        do {
            collector.visit(odo.profile(), acc, scratch);
        } while (odo.advance());
    });
}

Accumulator run_mutually_latin(const CensusSpec& spec, const StatCollector& collector) {
    const int n = spec.n;
    const auto squares = collect_latin_squares(n);
    return parallel_reduce(collector, spec.workers, squares.size(),
                           [&](Accumulator& acc, Scratch& scratch, std::uint64_t s) {
        PreferenceProfile p;
        p.n = n;
        p.men = squares[s];
        for (const auto& women : squares) {
            p.women = women;
            collector.visit(p, acc, scratch);
        }
    });
}

// A joint profile is a women's Latin square plus a key permutation f: the
// men's ratings are forced to man_rank(m, w) = f^{-1}(woman_rank(w, m)).
Accumulator run_joint(const CensusSpec& spec, const StatCollector& collector) {
    const int n = spec.n;
    const auto squares = collect_latin_squares(n);
    return parallel_reduce(collector, spec.workers, squares.size(),
                           [&](Accumulator& acc, Scratch& scratch, std::uint64_t s) {
        PreferenceProfile p;
        p.n = n;
        p.women = squares[s];
        p.men.assign(size_t(n) * n, 0);
        std::vector<int> key(n), key_inv(n);
        std::iota(key.begin(), key.end(), 1);
        do {
            for (int i = 0; i < n; ++i) key_inv[key[i] - 1] = i + 1;
            for (int m = 0; m < n; ++m) {
                for (int w = 0; w < n; ++w) p.men[m * n + w] = key_inv[p.women[w * n + m] - 1];
            }
            collector.visit(p, acc, scratch);
        } while (std::next_permutation(key.begin(), key.end()));
    });
}

void check_guard(const CensusSpec& spec) {
    const BigCount visits = census_work_estimate(spec.n, spec.family, spec.symmetry_reduction);
    if (visits > kForcedVisitLimit) {
        throw GatedError("census: " + visits.str() + " profiles for family '" +
                         family_name(spec.family) + "' at n=" + std::to_string(spec.n) +
                         " is beyond desk scale");
    }
    if (!spec.force && visits > kFreeVisitLimit) {
        throw GatedError("census: would visit " + visits.str() +
                         " profiles; rerun with force/--force to accept a long run");
    }
}

}  // namespace

BigCount census_work_estimate(int n, Family family, bool symmetry_reduction) {
    if (n < 1) throw ValidationError("census: n must be positive");
    switch (family) {
        case Family::All:
        case Family::WithSoulmatePair: {
            BigCount fact = formulas::factorial(n);
            return boost::multiprecision::pow(fact, unsigned(2 * n - (symmetry_reduction ? 1 : 0)));
        }
        case Family::LatinMen:
            return formulas::latin_men_profiles(n);
        case Family::MutuallyLatin:
            return formulas::mutually_latin_profiles(n);
        case Family::Joint:
            return formulas::joint_profiles(n);
        case Family::Disjoint: {
            BigCount fact = formulas::factorial(n);
            return boost::multiprecision::pow(fact, unsigned(2 * n - 2));
        }
    }
    throw ValidationError("census: unknown family");
}

CensusResult run_census(const CensusSpec& spec) {
    if (spec.n < 1) throw ValidationError("census: n must be positive");
    if (spec.statistics.empty()) throw ValidationError("census: no statistics requested");
    const bool indexed = spec.family == Family::All || spec.family == Family::WithSoulmatePair;
    if (spec.symmetry_reduction && !indexed) {
        throw ValidationError("census: symmetry reduction applies only to the full "
                              "profile space");
    }
    // Counts from a relabeling-reduced scan are only valid for statistics
    // that do not reference person labels.
    if (spec.symmetry_reduction || spec.family == Family::Disjoint) {
        for (Statistic s : spec.statistics) {
            if (s == Statistic::ClassCounts) {
                throw ValidationError("census: class-counts references person labels and "
                                      "must run unreduced");
            }
        }
    }
    check_guard(spec);

    const auto start_time = std::chrono::steady_clock::now();
    StatCollector collector(spec.n, spec.statistics);

    BigCount scale = 1;
    Accumulator acc;
    switch (spec.family) {
        case Family::All:
        case Family::WithSoulmatePair: {
            std::vector<int> free_rows;
            for (int r = 0; r < 2 * spec.n; ++r) {
                if (spec.symmetry_reduction && r == spec.n) continue;  // pin woman 1
                free_rows.push_back(r);
            }
            if (spec.symmetry_reduction) scale = formulas::factorial(spec.n);
            const auto filter = spec.family == Family::WithSoulmatePair
                                    ? IndexFilter::HasSoulmate
                                    : IndexFilter::None;
            acc = run_indexed(spec, collector, free_rows, filter);
            break;
        }
        case Family::LatinMen:
            acc = run_latin_men(spec, collector);
            break;
        case Family::MutuallyLatin:
            acc = run_mutually_latin(spec, collector);
            break;
        case Family::Joint:
            acc = run_joint(spec, collector);
            break;
        case Family::Disjoint: {
            // Scan only profiles where man 1 and woman 1 rank everyone in
            // label order; relabeling recovers each disjoint profile (n!)^2
            // times.
            std::vector<int> free_rows;
            for (int r = 1; r < 2 * spec.n; ++r) {
                if (r == spec.n) continue;
                free_rows.push_back(r);
            }
            scale = formulas::factorial(spec.n);
            scale *= scale;
            acc = run_indexed(spec, collector, free_rows, IndexFilter::Disjoint);
            break;
        }
    }

    const auto elapsed = std::chrono::steady_clock::now() - start_time;
    CensusResult result;
    for (size_t si = 0; si < spec.statistics.size(); ++si) {
        CensusTable table;
        table.elapsed = elapsed;
        table.total = 0;
        for (size_t value = 0; value < acc.hist[si].size(); ++value) {
            if (acc.hist[si][value] == 0) continue;
            BigCount count = BigCount(acc.hist[si][value]) * scale;
            table.total += count;
            table.rows.emplace(int(value), std::move(count));
        }
        result[spec.statistics[si]] = std::move(table);
    }
    return result;
}

CensusTable census_statistic(int n, Statistic stat, int workers, bool force) {
    CensusSpec spec;
    spec.n = n;
    spec.statistics = {stat};
    spec.workers = workers;
    spec.force = force;
    return run_census(spec).at(stat);
}

CensusTable census_stable_with_soulmates(int n, int workers, bool force) {
    CensusSpec spec;
    spec.n = n;
    spec.family = Family::WithSoulmatePair;
    spec.statistics = {Statistic::StableMatchings};
    spec.workers = workers;
    spec.force = force;
    return run_census(spec).at(Statistic::StableMatchings);
}

std::pair<BigCount, BigCount> census_hell_couples(int n, int workers, bool force) {
    CensusSpec spec;
    spec.n = n;
    spec.statistics = {Statistic::HellCoupleProfiles, Statistic::HellCoupleMatchings};
    spec.workers = workers;
    spec.force = force;
    auto result = run_census(spec);
    auto bucket = [](const CensusTable& t) {
        auto it = t.rows.find(1);
        return it == t.rows.end() ? BigCount(0) : it->second;
    };
    return {bucket(result.at(Statistic::HellCoupleProfiles)),
            bucket(result.at(Statistic::HellCoupleMatchings))};
}

CensusTable census_egalitarian_profiles(int n, int workers, bool force) {
    return census_statistic(n, Statistic::EgalitarianCostProfiles, workers, force);
}

CensusTable census_egalitarian_matchings(int n, int workers, bool force) {
    return census_statistic(n, Statistic::EgalitarianCostMatchings, workers, force);
}

BigCount census_disjoint(int n, bool force) {
    CensusSpec spec;
    spec.n = n;
    spec.family = Family::Disjoint;
    spec.statistics = {Statistic::SoulmatePairs};
    spec.force = force;
    const CensusTable table = run_census(spec).at(Statistic::SoulmatePairs);
    // Every disjoint profile has exactly one soulmate pair.
    for (const auto& [value, count] : table.rows) {
        if (value != 1) {
            throw std::logic_error("census_disjoint: profile with " + std::to_string(value) +
                                   " soulmate pairs counted as disjoint");
        }
    }
    return table.total;
}

bool VerifyReport::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.ok; });
}

VerifyReport verify_formulas(int n, int workers, bool force) {
    namespace f = formulas;
    VerifyReport report;
    report.n = n;
    auto add = [&](const std::string& name, const BigCount& census, const BigCount& formula) {
        report.rows.push_back({name, census, formula, census == formula});
    };
    auto bucket = [](const CensusTable& t, int value) {
        auto it = t.rows.find(value);
        return it == t.rows.end() ? BigCount(0) : it->second;
    };

    CensusSpec spec;
    spec.n = n;
    spec.statistics = {Statistic::SoulmatePairs, Statistic::HellPairs, Statistic::OutcastPairs,
                       Statistic::ClassCounts};
    spec.workers = workers;
    spec.force = force;
    auto all = run_census(spec);

    const auto& soulmates = all.at(Statistic::SoulmatePairs);
    const auto& hell = all.at(Statistic::HellPairs);
    for (int k = 0; k <= n; ++k) {
        add("soulmate-pairs k=" + std::to_string(k), bucket(soulmates, k),
            f::soulmate_profiles(k, n));
        add("hell-pairs k=" + std::to_string(k), bucket(hell, k), f::soulmate_profiles(k, n));
    }

    const auto& outcasts = all.at(Statistic::OutcastPairs);
    BigCount outcast_any = 0;
    for (const auto& [value, count] : outcasts.rows) {
        if (value >= 1) outcast_any += count;
    }
    add("outcast-pairs >=1", outcast_any, f::outcast_profiles(n));

    const auto& classes = all.at(Statistic::ClassCounts);
    auto cls = [&](ClassPredicate c) { return bucket(classes, int(c)); };
    add("homecoming-queen", cls(ClassPredicate::HomecomingQueen), f::homecoming_queen_profiles(n));
    add("homecoming-king", cls(ClassPredicate::HomecomingKing), f::homecoming_queen_profiles(n));
    if (n >= 2) {
        add("dominance-men", cls(ClassPredicate::DominanceMen), f::dominance_profiles(n));
        add("dominance-both", cls(ClassPredicate::DominanceBoth), f::dominance_both_sides(n));
    }
    add("same-taste-men", cls(ClassPredicate::SameTasteMen), f::same_taste_profiles(n));
    add("same-taste-both", cls(ClassPredicate::SameTasteBoth), f::same_taste_both(n));
    add("tastes-differ-men", cls(ClassPredicate::TastesDifferMen), f::tastes_differ_profiles(n));
    add("tastes-differ-both", cls(ClassPredicate::TastesDifferBoth), f::tastes_differ_both(n));
    add("latin-men", cls(ClassPredicate::LatinMen), f::latin_men_profiles(n));
    add("mutually-latin", cls(ClassPredicate::MutuallyLatin), f::mutually_latin_profiles(n));
    add("latin-profile", cls(ClassPredicate::LatinProfile), f::latin_profiles(n));
    add("joint", cls(ClassPredicate::Joint), f::joint_profiles(n));
    add("outcast-hell", cls(ClassPredicate::OutcastHell), f::outcast_hell_profiles(n));

    // Dual route for disjoint profiles: full-space filtering versus the
    // canonical generative scan; plus the arithmetic bounds.
    const BigCount disjoint_filtered = cls(ClassPredicate::Disjoint);
    const BigCount disjoint_generative = census_disjoint(n, force);
    add("disjoint filtered vs generative", disjoint_filtered, disjoint_generative);
    const auto [upper, divisor] = f::disjoint_profile_bounds(n);
    report.rows.push_back({"disjoint <= n^2!", disjoint_filtered, upper,
                           disjoint_filtered <= upper});
    report.rows.push_back({"disjoint divisible by (n!)^2", disjoint_filtered, divisor,
                           disjoint_filtered % divisor == 0});

    // Soulmate distributions over the Latin families.
    CensusSpec latin_spec;
    latin_spec.n = n;
    latin_spec.family = Family::LatinMen;
    latin_spec.statistics = {Statistic::SoulmatePairs};
    latin_spec.workers = workers;
    latin_spec.force = force;
    const auto latin_men_table = run_census(latin_spec).at(Statistic::SoulmatePairs);
    latin_spec.family = Family::MutuallyLatin;
    const auto mutually_table = run_census(latin_spec).at(Statistic::SoulmatePairs);
    for (int k = 0; k <= n; ++k) {
        add("latin-men soulmates k=" + std::to_string(k), bucket(latin_men_table, k),
            f::latin_men_soulmates(n, k));
        add("mutually-latin soulmates k=" + std::to_string(k), bucket(mutually_table, k),
            f::mutually_latin_soulmates(n, k));
    }

    // Profiles with at least one soulmate pair complement the no-soulmate count.
    const auto with_soulmates = census_stable_with_soulmates(n, workers, force);
    add("with-soulmate-pair total", with_soulmates.total,
        f::total_profiles(n) - f::soulmate_profiles(0, n));

    return report;
}

}  // namespace smp
