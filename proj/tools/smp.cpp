// Command-line front end: solve, enumerate, classify, formula, census,
// verify, seq. Results go to stdout, diagnostics and progress to stderr.
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smp/census.hpp"
#include "smp/classify.hpp"
#include "smp/error.hpp"
#include "smp/formulas.hpp"
#include "smp/matching.hpp"
#include "smp/profile.hpp"
#include "smp/sequences.hpp"

namespace {

using nlohmann::json;
using namespace smp;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open profile file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Wraps a subcommand result for --format json and prints it.
void emit_json(const std::string& command, const json& params, const json& result,
               std::chrono::steady_clock::time_point start) {
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start);
    json wrapper{{"command", command},
                 {"params", params},
                 {"result", result},
                 {"elapsed_ms", elapsed.count()}};
    std::cout << wrapper.dump(2) << '\n';
}

json matching_to_json(const PreferenceProfile& p, const GsTrace& trace) {
    json pairs = json::array();
    for (int m = 0; m < p.n; ++m) {
        pairs.push_back({{"man", m + 1},
                         {"woman", trace.matching[m] + 1},
                         {"cost", pair_cost(p, m, trace.matching[m])}});
    }
    return {{"side", trace.side == Side::Men ? "men" : "women"},
            {"pairs", pairs},
            {"total_cost", egalitarian_cost(p, trace.matching)},
            {"rounds", trace.rounds}};
}

void print_matching_text(const PreferenceProfile& p, const GsTrace& trace) {
    for (int m = 0; m < p.n; ++m) {
        std::cout << 'm' << m + 1 << " w" << trace.matching[m] + 1 << " cost "
                  << pair_cost(p, m, trace.matching[m]) << '\n';
    }
    std::cout << "total " << egalitarian_cost(p, trace.matching) << " rounds " << trace.rounds
              << '\n';
}

json table_to_json(const CensusTable& table,
                   const std::function<std::string(int)>& label = nullptr) {
    json rows = json::object();
    for (const auto& [value, count] : table.rows) {
        rows[label ? label(value) : std::to_string(value)] = count.str();
    }
    return {{"rows", rows},
            {"total", table.total.str()},
            {"elapsed_ms", std::chrono::duration_cast<std::chrono::milliseconds>(table.elapsed)
                               .count()}};
}

void print_table(const CensusTable& table, const std::string& format,
                 const std::function<std::string(int)>& label = nullptr) {
    if (format == "csv") {
        std::cout << "value,count\n";
        for (const auto& [value, count] : table.rows) {
            std::cout << (label ? label(value) : std::to_string(value)) << ',' << count.str()
                      << '\n';
        }
        return;
    }
    size_t width = 5;
    for (const auto& [value, count] : table.rows) {
        width = std::max(width, (label ? label(value) : std::to_string(value)).size());
    }
    std::cout << std::left;
    for (const auto& [value, count] : table.rows) {
        const std::string name = label ? label(value) : std::to_string(value);
        std::cout << name << std::string(width + 2 - name.size(), ' ') << count.str() << '\n';
    }
    std::cout << "total" << std::string(width + 2 - 5, ' ') << table.total.str() << '\n';
}

json stats_to_json(const PreferenceProfile& p, const ProfileStats& s) {
    json outcasts = json::array();
    for (auto [m, w] : s.outcast_pairs) outcasts.push_back({m + 1, w + 1});
    return {{"n", p.n},
            {"soulmate_pairs", s.soulmate_pairs},
            {"hell_pairs", s.hell_pairs},
            {"has_homecoming_queen", s.has_homecoming_queen},
            {"has_homecoming_king", s.has_homecoming_king},
            {"men_first_choices_distinct", s.men_first_choices_distinct},
            {"men_same_taste", s.men_same_taste},
            {"men_latin", s.men_latin},
            {"women_latin", s.women_latin},
            {"is_latin_profile", s.is_latin_profile},
            {"is_disjoint", s.is_disjoint},
            {"is_joint", s.is_joint},
            {"outcast_pairs", outcasts}};
}

// --- formula name table ------------------------------------------------------

struct FormulaDef {
    const char* name;
    bool needs_k;
    std::function<BigCount(int n, int k)> eval;
};

const std::vector<FormulaDef>& formula_defs() {
    namespace f = formulas;
    static const std::vector<FormulaDef> defs = {
        {"total-profiles", false, [](int n, int) { return f::total_profiles(n); }},
        {"homecoming-queen", false, [](int n, int) { return f::homecoming_queen_profiles(n); }},
        {"homecoming-queen-men-only", false,
         [](int n, int) { return f::homecoming_queen_men_only(n); }},
        {"dominance", false, [](int n, int) { return f::dominance_profiles(n); }},
        {"dominance-men-only", false, [](int n, int) { return f::dominance_men_only(n); }},
        {"dominance-both", false, [](int n, int) { return f::dominance_both_sides(n); }},
        {"same-taste", false, [](int n, int) { return f::same_taste_profiles(n); }},
        {"same-taste-both", false, [](int n, int) { return f::same_taste_both(n); }},
        {"tastes-differ", false, [](int n, int) { return f::tastes_differ_profiles(n); }},
        {"tastes-differ-men-only", false,
         [](int n, int) { return f::tastes_differ_men_only(n); }},
        {"tastes-differ-both", false, [](int n, int) { return f::tastes_differ_both(n); }},
        {"latin-men", false, [](int n, int) { return f::latin_men_profiles(n); }},
        {"mutually-latin", false, [](int n, int) { return f::mutually_latin_profiles(n); }},
        {"latin-profiles", false, [](int n, int) { return f::latin_profiles(n); }},
        {"joint", false, [](int n, int) { return f::joint_profiles(n); }},
        {"S", true, [](int n, int k) { return f::soulmate_free_completions(k, n); }},
        {"F", true, [](int n, int k) { return f::soulmate_profiles(k, n); }},
        {"latin-men-soulmates", true, [](int n, int k) { return f::latin_men_soulmates(n, k); }},
        {"mutually-latin-soulmates", true,
         [](int n, int k) { return f::mutually_latin_soulmates(n, k); }},
        {"soulmates-full", false, [](int n, int) { return f::soulmate_profiles(n, n); }},
        {"soulmates-all-but-one", false, [](int n, int) { return f::soulmate_profiles(n - 1, n); }},
        {"soulmates-none", false, [](int n, int) { return f::soulmate_profiles(0, n); }},
        {"latin-men-soulmates-full", false,
         [](int n, int) { return f::latin_men_soulmates(n, n); }},
        {"latin-men-soulmates-none", false,
         [](int n, int) { return f::latin_men_soulmates(n, 0); }},
        {"mutually-latin-soulmates-full", false,
         [](int n, int) { return f::mutually_latin_soulmates(n, n); }},
        {"mutually-latin-soulmates-none", false,
         [](int n, int) { return f::mutually_latin_soulmates(n, 0); }},
        {"outcasts", false, [](int n, int) { return f::outcast_profiles(n); }},
        {"outcast-hell", false, [](int n, int) { return f::outcast_hell_profiles(n); }},
        {"relabeling-men", false, [](int n, int) { return f::men_profiles_up_to_relabeling(n); }},
        {"factorial", false, [](int n, int) { return f::factorial(n); }},
        {"derangements", false, [](int n, int) { return f::derangements(n); }},
        {"latin-squares", false, [](int n, int) { return f::latin_squares(n); }},
    };
    return defs;
}

void list_formulas() {
    // Best effort: annotate each formula with the sequence ids it produces.
    std::map<std::string, std::string> refs;
    try {
        SequenceRegistry reg = SequenceRegistry::load_default();
        for (const auto& id : reg.ids()) {
            const auto& e = reg.entry(id);
            auto& slot = refs[e.producer];
            if (!slot.empty()) slot += ", ";
            slot += id;
        }
    } catch (const std::exception&) {
        // no registry available; list names only
    }
    for (const auto& def : formula_defs()) {
        std::cout << def.name << (def.needs_k ? "  (--n N --k K)" : "  (--n N)");
        auto it = refs.find(def.name);
        if (it != refs.end()) std::cout << "  [" << it->second << "]";
        std::cout << '\n';
    }
}

// --- subcommand state ---------------------------------------------------------

struct Options {
    std::string format = "text";
    std::string profile_path;
    std::string side = "men";
    std::string formula_name;
    bool formula_list = false;
    int n = 0;
    int k = -1;
    std::string family = "all";
    std::vector<std::string> stats;
    int workers = 1;
    bool symmetry = false;
    bool force = false;
    bool quiet = false;
    unsigned seed = 0;
    std::string seq_id;
    int seq_max = 0;
    std::string data_path;
};

PreferenceProfile load_profile(const Options& opt) {
    if (opt.profile_path.empty()) throw ValidationError("--profile is required");
    return parse_profile(read_input(opt.profile_path));
}

SequenceRegistry load_registry(const Options& opt) {
    return opt.data_path.empty() ? SequenceRegistry::load_default()
                                 : SequenceRegistry::load(opt.data_path);
}

int cmd_solve(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    const PreferenceProfile p = load_profile(opt);
    const Side side = opt.side == "women" ? Side::Women : Side::Men;
    const GsTrace trace = gale_shapley(p, side);
    if (opt.format == "json") {
        emit_json("solve", {{"profile", opt.profile_path}, {"side", opt.side}},
                  matching_to_json(p, trace), start);
    } else {
        print_matching_text(p, trace);
    }
    return kExitOk;
}

int cmd_enumerate(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    const PreferenceProfile p = load_profile(opt);
    const auto stable = enumerate_stable(p);
    if (opt.format == "json") {
        json list = json::array();
        for (const auto& m : stable) {
            json pairs = json::array();
            for (int w : m) pairs.push_back(w + 1);
            list.push_back({{"pairs", pairs}, {"cost", egalitarian_cost(p, m)}});
        }
        emit_json("enumerate", {{"profile", opt.profile_path}},
                  {{"count", stable.size()}, {"matchings", list}}, start);
    } else {
        for (const auto& m : stable) {
            for (int man = 0; man < p.n; ++man) {
                if (man) std::cout << ' ';
                std::cout << 'm' << man + 1 << "-w" << m[man] + 1;
            }
            std::cout << " cost " << egalitarian_cost(p, m) << '\n';
        }
        std::cout << "count " << stable.size() << '\n';
    }
    return kExitOk;
}

int cmd_classify(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    const PreferenceProfile p = load_profile(opt);
    const ProfileStats s = classify(p);
    if (opt.format == "json") {
        emit_json("classify", {{"profile", opt.profile_path}}, stats_to_json(p, s), start);
    } else {
        std::cout << stats_to_json(p, s).dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_formula(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    if (opt.formula_list) {
        list_formulas();
        return kExitOk;
    }
    const FormulaDef* def = nullptr;
    for (const auto& d : formula_defs()) {
        if (opt.formula_name == d.name) def = &d;
    }
    if (!def) throw ValidationError("unknown formula: " + opt.formula_name + " (see --list)");
    if (opt.n < 1) throw ValidationError("formula: --n is required");
    if (def->needs_k && opt.k < 0) throw ValidationError("formula " + opt.formula_name +
                                                         ": --k is required");
    const BigCount value = def->eval(opt.n, opt.k);
    if (opt.format == "json") {
        emit_json("formula", {{"name", opt.formula_name}, {"n", opt.n}, {"k", opt.k}},
                  value.str(), start);
    } else {
        std::cout << value.str() << '\n';
    }
    return kExitOk;
}

int cmd_census(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    CensusSpec spec;
    spec.n = opt.n;
    spec.family = family_from_name(opt.family);
    if (opt.stats.empty()) throw ValidationError("census: at least one --stat is required");
    for (const auto& s : opt.stats) spec.statistics.push_back(statistic_from_name(s));
    spec.workers = opt.workers;
    spec.symmetry_reduction = opt.symmetry;
    spec.force = opt.force;
    if (!opt.quiet) {
        spec.progress = [](int pct) { std::cerr << pct << "%\n"; };
    }
    const CensusResult result = run_census(spec);

    const std::function<std::string(int)> class_label = [](int v) {
        return std::string(class_predicate_name(ClassPredicate(v)));
    };
    auto label_for = [&](Statistic stat) -> const std::function<std::string(int)>& {
        static const std::function<std::string(int)> none;
        return stat == Statistic::ClassCounts ? class_label : none;
    };
    if (opt.format == "json") {
        json tables = json::object();
        for (const auto& [stat, table] : result) {
            tables[statistic_name(stat)] = table_to_json(table, label_for(stat));
        }
        emit_json("census",
                  {{"n", opt.n},
                   {"family", opt.family},
                   {"stats", opt.stats},
                   {"workers", opt.workers},
                   {"symmetry", opt.symmetry}},
                  tables, start);
    } else {
        for (const auto& [stat, table] : result) {
            if (result.size() > 1) std::cout << "# " << statistic_name(stat) << '\n';
            print_table(table, opt.format, label_for(stat));
        }
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    const VerifyReport report = verify_formulas(opt.n, opt.workers, opt.force);
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& r : report.rows) {
            rows.push_back({{"name", r.name},
                            {"census", r.census_value.str()},
                            {"formula", r.formula_value.str()},
                            {"ok", r.ok}});
        }
        emit_json("verify", {{"n", opt.n}}, {{"rows", rows}, {"all_ok", report.all_ok()}}, start);
    } else {
        size_t width = 0;
        for (const auto& r : report.rows) width = std::max(width, r.name.size());
        for (const auto& r : report.rows) {
            std::cout << (r.ok ? "ok       " : "MISMATCH ") << r.name
                      << std::string(width + 2 - r.name.size(), ' ') << "census=" << r.census_value
                      << " formula=" << r.formula_value << '\n';
        }
        std::cout << (report.all_ok() ? "verify: all checks passed" : "verify: MISMATCHES FOUND")
                  << '\n';
    }
    return report.all_ok() ? kExitOk : kExitMismatch;
}

int cmd_seq_check(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    const SequenceRegistry reg = load_registry(opt);
    const int max_index = opt.seq_max > 0 ? opt.seq_max : reg.entry(opt.seq_id).known_terms.back().first;
    const SequenceReport report = reg.check(opt.seq_id, max_index, opt.force);
    auto status_name = [](TermStatus s) {
        switch (s) {
            case TermStatus::Ok: return "ok";
            case TermStatus::Mismatch: return "MISMATCH";
            case TermStatus::Gated: return "gated";
            case TermStatus::StoredOnly: return "stored-only";
        }
        return "?";
    };
    if (opt.format == "json") {
        json terms = json::array();
        for (const auto& t : report.terms) {
            json row{{"index", t.index},
                     {"expected", t.expected.str()},
                     {"status", status_name(t.status)}};
            if (t.got) row["got"] = t.got->str();
            terms.push_back(row);
        }
        emit_json("seq check", {{"id", opt.seq_id}, {"max", max_index}},
                  {{"terms", terms}, {"all_ok", report.all_ok()}}, start);
    } else {
        for (const auto& t : report.terms) {
            std::cout << opt.seq_id << '(' << t.index << ") expected=" << t.expected;
            if (t.got) std::cout << " got=" << *t.got;
            std::cout << ' ' << status_name(t.status) << '\n';
        }
    }
    return report.all_ok() ? kExitOk : kExitMismatch;
}

int cmd_seq_export(const Options& opt) {
    const SequenceRegistry reg = load_registry(opt);
    const int max_index = opt.seq_max > 0 ? opt.seq_max : reg.entry(opt.seq_id).known_terms.back().first;
    std::cout << reg.export_bfile(opt.seq_id, max_index, opt.force);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable marriage problem toolkit: matching, classification, "
                 "counting formulas, and brute-force censuses"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* sub, bool with_csv = false) {
        auto choices = with_csv ? std::vector<std::string>{"text", "json", "csv"}
                                : std::vector<std::string>{"text", "json"};
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember(choices));
    };

    auto* solve = app.add_subcommand("solve", "run deferred acceptance on a profile");
    solve->add_option("--profile", opt.profile_path, "profile file ('-' for stdin)")->required();
    solve->add_option("--side", opt.side, "proposing side")
        ->check(CLI::IsMember({"men", "women"}));
    add_format(solve);

    auto* enumerate = app.add_subcommand("enumerate", "list all stable matchings");
    enumerate->add_option("--profile", opt.profile_path, "profile file ('-' for stdin)")
        ->required();
    add_format(enumerate);

    auto* classify_cmd = app.add_subcommand("classify", "profile predicates as JSON");
    classify_cmd->add_option("--profile", opt.profile_path, "profile file ('-' for stdin)")
        ->required();
    classify_cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* formula = app.add_subcommand("formula", "evaluate a closed-form count");
    formula->add_option("name", opt.formula_name, "formula name (see --list)");
    formula->add_option("--n", opt.n, "group size");
    formula->add_option("--k", opt.k, "soulmate-pair count, where applicable");
    formula->add_flag("--list", opt.formula_list, "list formula names and sequence ids");
    add_format(formula);

    auto* census = app.add_subcommand("census", "brute-force census over a profile family");
    census->add_option("--n", opt.n, "group size")->required();
    census->add_option("--family", opt.family, "profile family")
        ->check(CLI::IsMember({"all", "latin-men", "mutually-latin", "disjoint", "joint",
                               "with-soulmate-pair"}));
    census->add_option("--stat", opt.stats, "statistic (repeatable)")->required();
    census->add_option("--workers", opt.workers, "worker threads");
    census->add_flag("--symmetry", opt.symmetry, "fix woman 1's row, scale counts by n!");
    census->add_flag("--force", opt.force, "allow runs past the default work guard");
    census->add_flag("--quiet", opt.quiet, "suppress progress on stderr");
    add_format(census, true);

    auto* verify = app.add_subcommand("verify", "cross-check censuses against formulas");
    verify->add_option("--n", opt.n, "group size")->required();
    verify->add_option("--workers", opt.workers, "worker threads");
    verify->add_flag("--force", opt.force, "allow runs past the default work guard");
    add_format(verify);

    auto* seq = app.add_subcommand("seq", "published-sequence regression checks");
    seq->require_subcommand(1);
    auto* seq_check = seq->add_subcommand("check", "recompute known terms and diff");
    seq_check->add_option("id", opt.seq_id, "sequence id, e.g. A343698")->required();
    seq_check->add_option("--max", opt.seq_max, "largest index to check");
    seq_check->add_flag("--force", opt.force, "recompute gated terms too");
    seq_check->add_option("--data", opt.data_path, "sequence data file");
    add_format(seq_check);
    auto* seq_export = seq->add_subcommand("export", "print terms in b-file format");
    seq_export->add_option("id", opt.seq_id, "sequence id")->required();
    seq_export->add_option("--max", opt.seq_max, "largest index to export");
    seq_export->add_flag("--force", opt.force, "compute gated terms too");
    seq_export->add_option("--data", opt.data_path, "sequence data file");

    // Spec'd shared flag; only sampled property runs use it, but accept it
    // anywhere for script compatibility.
    app.add_option("--seed", opt.seed, "RNG seed for sampled runs")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (classify_cmd->parsed()) return cmd_classify(opt);
        if (formula->parsed()) return cmd_formula(opt);
        if (census->parsed()) return cmd_census(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (seq->parsed()) {
            if (seq_check->parsed()) return cmd_seq_check(opt);
            if (seq_export->parsed()) return cmd_seq_export(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
