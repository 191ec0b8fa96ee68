#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smp/bigint.hpp"

namespace smp {

// One registered integer sequence: its published terms and the operation
// that reproduces them. Terms at index >= gated_from need an expensive
// (forced) census; stored-only entries are beyond computational reach and
// are never recomputed.
struct SequenceEntry {
    std::string id;
    std::string description;
    int offset = 1;
    std::string producer;
    std::vector<std::pair<int, BigCount>> known_terms;  // (index, value), ascending
    int gated_from = std::numeric_limits<int>::max();
    bool stored_only = false;
};

enum class TermStatus { Ok, Mismatch, Gated, StoredOnly };

struct TermCheck {
    int index = 0;
    BigCount expected;
    std::optional<BigCount> got;
    TermStatus status = TermStatus::Ok;
};

struct SequenceReport {
    std::string id;
    std::vector<TermCheck> terms;
    bool all_ok() const;  // no mismatches (gated/stored terms are not failures)
};

class SequenceRegistry {
public:
    static SequenceRegistry load(const std::string& path);
    // Loads data/sequences.json from the configured data directory, or from
    // $SMP_DATA_DIR when set.
    static SequenceRegistry load_default();

    const SequenceEntry& entry(const std::string& id) const;  // throws ValidationError
    std::vector<std::string> ids() const;

    // Recomputes known terms up to max_index via the producer and diffs them.
    SequenceReport check(const std::string& id, int max_index, bool force = false) const;

    // b-file text: one "index value" line per term up to max_index. Known
    // terms are emitted as stored; asking past them recomputes via the
    // producer or throws GatedError if that computation is gated.
    std::string export_bfile(const std::string& id, int max_index, bool force = false) const;

private:
    std::map<std::string, SequenceEntry> entries_;
};

// Parses b-file text back into (index, value) pairs.
std::vector<std::pair<int, BigCount>> parse_bfile(const std::string& text);

}  // namespace smp
