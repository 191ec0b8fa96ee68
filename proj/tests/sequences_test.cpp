#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "smp/error.hpp"
#include "smp/sequences.hpp"

using namespace smp;

namespace {

const SequenceRegistry& registry() {
    static const SequenceRegistry reg = SequenceRegistry::load_default();
    return reg;
}

const char* kNewSequences[] = {
    "A338665", "A340890", "A342573", "A343474", "A343475", "A343692", "A343693", "A343694",
    "A343695", "A343696", "A343697", "A343698", "A343699", "A343700", "A344662", "A344663",
    "A344664", "A344665", "A344666", "A344667", "A344668", "A344669", "A344670", "A344671",
    "A344689", "A344690", "A344691", "A344692", "A344693", "A345679",
};

}  // namespace

TEST_CASE("every published sequence id is registered") {
    for (const char* id : kNewSequences) CHECK_NOTHROW(registry().entry(id));
    for (const char* id : {"A000142", "A001044", "A002860", "A069124", "A091868", "A185141"}) {
        CHECK_NOTHROW(registry().entry(id));
    }
    CHECK(registry().ids().size() == 36);
    CHECK_THROWS_AS(registry().entry("A000000"), ValidationError);
}

TEST_CASE("formula-backed sequences reproduce all known terms") {
    for (const char* id : {"A185141", "A343698", "A343699", "A343700", "A344662", "A344663",
                           "A344664", "A344665", "A344689", "A344690", "A344693", "A340890",
                           "A342573", "A343474", "A338665", "A343692", "A343693", "A001044",
                           "A091868", "A343475", "A343694", "A343695", "A343696", "A343697",
                           "A000142", "A002860"}) {
        const auto& e = registry().entry(id);
        const auto report = registry().check(id, e.known_terms.back().first);
        CHECK(report.all_ok());
        for (const auto& t : report.terms) CHECK(t.status == TermStatus::Ok);
    }
}

TEST_CASE("check examples from small censuses") {
    auto report = registry().check("A343698", 4);
    REQUIRE(report.terms.size() == 4);
    CHECK(report.all_ok());

    report = registry().check("A344668", 3);
    REQUIRE(report.terms.size() == 3);
    CHECK(report.terms[0].got == BigCount(1));
    CHECK(report.terms[1].got == BigCount(14));
    CHECK(report.terms[2].got == BigCount(34080));

    report = registry().check("A343700", 3);
    CHECK(report.all_ok());
    CHECK(report.terms[0].expected == 0);
}

TEST_CASE("gated terms are skipped without force and are not failures") {
    const auto report = registry().check("A344668", 4);
    REQUIRE(report.terms.size() == 4);
    CHECK(report.terms[3].status == TermStatus::Gated);
    CHECK_FALSE(report.terms[3].got.has_value());
    CHECK(report.all_ok());
}

TEST_CASE("stored-only sequences are reported, never recomputed") {
    const auto report = registry().check("A069124", 14);
    REQUIRE(report.terms.size() == 14);
    for (const auto& t : report.terms) {
        CHECK(t.status == TermStatus::StoredOnly);
        CHECK_FALSE(t.got.has_value());
    }
    CHECK(report.all_ok());
}

TEST_CASE("b-file export matches the documented examples") {
    CHECK(registry().export_bfile("A001044", 3) == "1 1\n2 4\n3 36\n");
    CHECK(registry().export_bfile("A344690", 3) == "1 1\n2 3\n3 56\n");
    CHECK(registry().export_bfile("A001044", 0).empty());
}

TEST_CASE("b-file export recomputes past the stored terms when affordable") {
    // A343698 stores n <= 5; term 6 comes from the formula.
    const auto text = registry().export_bfile("A343698", 6);
    const auto terms = parse_bfile(text);
    REQUIRE(terms.size() == 6);
    CHECK(terms[5].first == 6);
    CHECK(terms[5].second == BigCount("6419592322744320000000000000"));  // ((6-1)!)^12 * 6!
}

TEST_CASE("b-file export refuses gated and stored-only continuations") {
    // Stored terms export freely; computing past them hits the gate.
    CHECK_NOTHROW(registry().export_bfile("A344667", 10));
    CHECK_THROWS_AS(registry().export_bfile("A344667", 11), GatedError);
    CHECK_THROWS_AS(registry().export_bfile("A069124", 15), GatedError);
    CHECK_NOTHROW(registry().export_bfile("A069124", 14));
}

TEST_CASE("b-file round-trip equals the known slice") {
    for (const char* id : {"A343698", "A344666", "A069124"}) {
        const auto& e = registry().entry(id);
        const int max_index = e.known_terms.back().first;
        const auto parsed = parse_bfile(registry().export_bfile(id, max_index));
        CHECK(parsed == e.known_terms);
    }
}

TEST_CASE("a corrupted registry entry is reported as a mismatch") {
    const char* path = "bad_sequences_test.json";
    {
        std::ofstream out(path);
        out << R"({"sequences": [{"id": "A185141", "description": "x", "offset": 1,
                   "producer": "total-profiles", "terms": ["1", "17"]}]})";
    }
    const auto reg = SequenceRegistry::load(path);
    const auto report = reg.check("A185141", 2);
    CHECK_FALSE(report.all_ok());
    CHECK(report.terms[0].status == TermStatus::Ok);
    CHECK(report.terms[1].status == TermStatus::Mismatch);
    CHECK(report.terms[1].got == BigCount(16));
    std::remove(path);
}

TEST_CASE("loading a missing file fails cleanly") {
    CHECK_THROWS_AS(SequenceRegistry::load("/nonexistent/sequences.json"), ValidationError);
}

TEST_CASE("parse_bfile accepts comments and rejects garbage") {
    const auto terms = parse_bfile("# header\n1 10\n\n2 20\n");
    REQUIRE(terms.size() == 2);
    CHECK(terms[1] == std::pair<int, BigCount>{2, BigCount(20)});
    CHECK_THROWS_AS(parse_bfile("1\n"), ParseError);
}
