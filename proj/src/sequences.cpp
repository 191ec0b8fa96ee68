#include "smp/sequences.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "smp/census.hpp"
#include "smp/error.hpp"
#include "smp/formulas.hpp"

#ifndef SMP_DATA_DIR
#define SMP_DATA_DIR "data"
#endif

namespace smp {

namespace {

namespace f = formulas;

// Shared census results while checking one sequence, so a multi-term check
// runs each census once. Every statistic reproduced here is
// relabeling-invariant, so the scans run under the n! reduction on all
// cores; forced n=4 checks then take minutes-to-hours instead of days.
struct ProducerContext {
    bool force = false;
    std::map<std::string, CensusTable> tables;

    const CensusTable& table(int n, Statistic stat) {
        const std::string key = std::string(statistic_name(stat)) + ":" + std::to_string(n);
        auto it = tables.find(key);
        if (it == tables.end()) {
            CensusSpec spec;
            spec.n = n;
            spec.statistics = {stat};
            spec.workers = int(std::max(1u, std::thread::hardware_concurrency()));
            spec.symmetry_reduction = true;
            spec.force = force;
            it = tables.emplace(key, run_census(spec).at(stat)).first;
        }
        return it->second;
    }

    const CensusTable& stable_table(int n) { return table(n, Statistic::StableMatchings); }
};

BigCount table_bucket(const CensusTable& t, int value) {
    auto it = t.rows.find(value);
    return it == t.rows.end() ? BigCount(0) : it->second;
}

// The two egalitarian-cost tables are irregular; their flat index walks the
// rows n = 1..4 (lengths 1, 3, 7, 13) with costs starting at 2n.
struct EgalPosition {
    int n;
    int cost;
};

EgalPosition egal_position(int flat_index) {
    static constexpr int kRowLength[] = {1, 3, 7, 13};
    int remaining = flat_index - 1;
    for (int row = 0; row < 4; ++row) {
        if (remaining < kRowLength[row]) return {row + 1, 2 * (row + 1) + remaining};
        remaining -= kRowLength[row];
    }
    throw ValidationError("egalitarian table index out of range: " + std::to_string(flat_index));
}

using Producer = std::function<BigCount(int index, ProducerContext& ctx)>;

const std::map<std::string, Producer>& producer_map() {
    static const std::map<std::string, Producer> map = {
        {"factorial", [](int n, ProducerContext&) { return f::factorial(n); }},
        {"total-profiles", [](int n, ProducerContext&) { return f::total_profiles(n); }},
        {"homecoming-queen", [](int n, ProducerContext&) { return f::homecoming_queen_profiles(n); }},
        {"homecoming-queen-men-only",
         [](int n, ProducerContext&) { return f::homecoming_queen_men_only(n); }},
        {"dominance", [](int n, ProducerContext&) { return f::dominance_profiles(n); }},
        {"dominance-men-only", [](int n, ProducerContext&) { return f::dominance_men_only(n); }},
        {"dominance-both", [](int n, ProducerContext&) { return f::dominance_both_sides(n); }},
        {"same-taste", [](int n, ProducerContext&) { return f::same_taste_profiles(n); }},
        {"same-taste-both", [](int n, ProducerContext&) { return f::same_taste_both(n); }},
        {"tastes-differ", [](int n, ProducerContext&) { return f::tastes_differ_profiles(n); }},
        {"tastes-differ-men-only",
         [](int n, ProducerContext&) { return f::tastes_differ_men_only(n); }},
        {"tastes-differ-both", [](int n, ProducerContext&) { return f::tastes_differ_both(n); }},
        {"latin-squares", [](int n, ProducerContext&) { return f::latin_squares(n); }},
        {"latin-men", [](int n, ProducerContext&) { return f::latin_men_profiles(n); }},
        {"mutually-latin", [](int n, ProducerContext&) { return f::mutually_latin_profiles(n); }},
        {"latin-profiles", [](int n, ProducerContext&) { return f::latin_profiles(n); }},
        {"joint", [](int n, ProducerContext&) { return f::joint_profiles(n); }},
        {"soulmates-full", [](int n, ProducerContext&) { return f::soulmate_profiles(n, n); }},
        {"soulmates-all-but-one",
         [](int n, ProducerContext&) { return f::soulmate_profiles(n - 1, n); }},
        {"soulmates-none", [](int n, ProducerContext&) { return f::soulmate_profiles(0, n); }},
        {"latin-men-soulmates-full",
         [](int n, ProducerContext&) { return f::latin_men_soulmates(n, n); }},
        {"latin-men-soulmates-none",
         [](int n, ProducerContext&) { return f::latin_men_soulmates(n, 0); }},
        {"mutually-latin-soulmates-full",
         [](int n, ProducerContext&) { return f::mutually_latin_soulmates(n, n); }},
        {"mutually-latin-soulmates-none",
         [](int n, ProducerContext&) { return f::mutually_latin_soulmates(n, 0); }},
        {"outcasts", [](int n, ProducerContext&) { return f::outcast_profiles(n); }},
        {"outcast-hell", [](int n, ProducerContext&) { return f::outcast_hell_profiles(n); }},
        {"relabeling-men",
         [](int n, ProducerContext&) { return f::men_profiles_up_to_relabeling(n); }},
        {"census-stable-distribution-n3",
         [](int k, ProducerContext& ctx) { return table_bucket(ctx.stable_table(3), k); }},
        {"census-stable-distribution-n4",
         [](int k, ProducerContext& ctx) { return table_bucket(ctx.stable_table(4), k); }},
        {"census-unique-stable",
         [](int n, ProducerContext& ctx) { return table_bucket(ctx.stable_table(n), 1); }},
        {"census-max-stable",
         [](int n, ProducerContext& ctx) {
             const auto& rows = ctx.stable_table(n).rows;
             if (rows.empty()) return BigCount(0);
             return rows.rbegin()->second;
         }},
        {"census-hell-couple-profiles",
         [](int n, ProducerContext& ctx) {
             return table_bucket(ctx.table(n, Statistic::HellCoupleProfiles), 1);
         }},
        {"census-hell-couple-matchings",
         [](int n, ProducerContext& ctx) {
             return table_bucket(ctx.table(n, Statistic::HellCoupleMatchings), 1);
         }},
        {"census-egalitarian-profiles",
         [](int idx, ProducerContext& ctx) {
             const auto pos = egal_position(idx);
             return table_bucket(ctx.table(pos.n, Statistic::EgalitarianCostProfiles),
                                 pos.cost);
         }},
        {"census-egalitarian-matchings",
         [](int idx, ProducerContext& ctx) {
             const auto pos = egal_position(idx);
             return table_bucket(ctx.table(pos.n, Statistic::EgalitarianCostMatchings),
                                 pos.cost);
         }},
        {"census-disjoint",
         [](int n, ProducerContext& ctx) { return census_disjoint(n, ctx.force); }},
    };
    return map;
}

BigCount produce_term(const SequenceEntry& entry, int index, ProducerContext& ctx) {
    const auto& map = producer_map();
    auto it = map.find(entry.producer);
    if (it == map.end()) {
        throw ValidationError("sequence " + entry.id + ": unknown producer '" + entry.producer +
                              "'");
    }
    return it->second(index, ctx);
}

}  // namespace

bool SequenceReport::all_ok() const {
    return std::none_of(terms.begin(), terms.end(),
                        [](const TermCheck& t) { return t.status == TermStatus::Mismatch; });
}

SequenceRegistry SequenceRegistry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open sequence data file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("bad sequence data file " + path + ": " + e.what());
    }

    SequenceRegistry reg;
    for (const auto& rec : doc.at("sequences")) {
        SequenceEntry entry;
        entry.id = rec.at("id").get<std::string>();
        entry.description = rec.at("description").get<std::string>();
        entry.offset = rec.at("offset").get<int>();
        entry.producer = rec.at("producer").get<std::string>();
        int index = entry.offset;
        for (const auto& term : rec.at("terms")) {
            entry.known_terms.emplace_back(index++, BigCount(term.get<std::string>()));
        }
        if (rec.contains("gated_from")) entry.gated_from = rec.at("gated_from").get<int>();
        if (rec.contains("stored_only")) entry.stored_only = rec.at("stored_only").get<bool>();
        reg.entries_.emplace(entry.id, std::move(entry));
    }
    return reg;
}

SequenceRegistry SequenceRegistry::load_default() {
    std::string dir = SMP_DATA_DIR;
    if (const char* env = std::getenv("SMP_DATA_DIR")) dir = env;
    return load(dir + "/sequences.json");
}

const SequenceEntry& SequenceRegistry::entry(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw ValidationError("unknown sequence id: " + id);
    return it->second;
}

std::vector<std::string> SequenceRegistry::ids() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [id, entry] : entries_) out.push_back(id);
    return out;
}

SequenceReport SequenceRegistry::check(const std::string& id, int max_index, bool force) const {
    const SequenceEntry& e = entry(id);
    SequenceReport report;
    report.id = id;
    ProducerContext ctx;
    ctx.force = force;
    for (const auto& [index, expected] : e.known_terms) {
        if (index > max_index) break;
        TermCheck check;
        check.index = index;
        check.expected = expected;
        if (e.stored_only) {
            check.status = TermStatus::StoredOnly;
        } else if (index >= e.gated_from && !force) {
            check.status = TermStatus::Gated;
        } else {
            check.got = produce_term(e, index, ctx);
            check.status = *check.got == expected ? TermStatus::Ok : TermStatus::Mismatch;
        }
        report.terms.push_back(std::move(check));
    }
    return report;
}

std::string SequenceRegistry::export_bfile(const std::string& id, int max_index,
                                           bool force) const {
    const SequenceEntry& e = entry(id);
    std::ostringstream out;
    ProducerContext ctx;
    ctx.force = force;
    auto known = e.known_terms.begin();
    for (int index = e.offset; index <= max_index; ++index) {
        while (known != e.known_terms.end() && known->first < index) ++known;
        if (known != e.known_terms.end() && known->first == index) {
            out << index << ' ' << known->second.str() << '\n';
            continue;
        }
        if (e.stored_only) {
            throw GatedError("sequence " + id + ": terms past index " +
                             std::to_string(index - 1) + " are stored-only and cannot be computed");
        }
        if (index >= e.gated_from && !force) {
            throw GatedError("sequence " + id + ": term " + std::to_string(index) +
                             " needs a forced census run");
        }
        out << index << ' ' << produce_term(e, index, ctx).str() << '\n';
    }
    return out.str();
}

std::vector<std::pair<int, BigCount>> parse_bfile(const std::string& text) {
    std::vector<std::pair<int, BigCount>> terms;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        int index = 0;
        std::string value;
        if (!(fields >> index >> value)) throw ParseError(line_no, "expected 'index value'");
        terms.emplace_back(index, BigCount(value));
    }
    return terms;
}

}  // namespace smp
