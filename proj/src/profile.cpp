#include "smp/profile.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "smp/error.hpp"

namespace smp {

namespace {

bool is_permutation_1n(std::span<const int> row) {
    const int n = int(row.size());
    std::vector<bool> seen(n, false);
    for (int r : row) {
        if (r < 1 || r > n || seen[r - 1]) return false;
        seen[r - 1] = true;
    }
    return true;
}

// Row label for error messages: men's rows 1..n, then women's rows n+1..2n.
std::string row_label(int n, int flat_row) {
    if (flat_row < n) return "men's row " + std::to_string(flat_row + 1);
    return "women's row " + std::to_string(flat_row - n + 1);
}

}  // namespace

void validate_profile(const PreferenceProfile& p) {
    if (p.n < 1) throw ValidationError("profile: n must be positive");
    const size_t nn = size_t(p.n) * p.n;
    if (p.men.size() != nn || p.women.size() != nn) {
        throw ValidationError("profile: matrices must be n x n");
    }
    for (int i = 0; i < 2 * p.n; ++i) {
        auto row = i < p.n ? p.man_row(i) : p.woman_row(i - p.n);
        if (!is_permutation_1n(row)) {
            throw ValidationError("profile: " + row_label(p.n, i) +
                                  " is not a permutation of 1.." + std::to_string(p.n));
        }
    }
}

PreferenceProfile make_profile(int n, std::vector<int> men, std::vector<int> women) {
    PreferenceProfile p{n, std::move(men), std::move(women)};
    validate_profile(p);
    return p;
}

PreferenceProfile parse_profile(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::vector<int> row_lines;
    int line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos ? text.substr(pos)
                                                              : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;

        std::vector<int> row;
        const char* it = line.data() + first;
        const char* end = line.data() + line.size();
        while (it < end) {
            while (it < end && (*it == ' ' || *it == '\t' || *it == '\r')) ++it;
            if (it >= end) break;
            int value = 0;
            auto [next, ec] = std::from_chars(it, end, value);
            if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
                throw ParseError(line_no, "expected an integer");
            }
            row.push_back(value);
            it = next;
        }
        rows.push_back(std::move(row));
        row_lines.push_back(line_no);
    }

    if (rows.empty()) throw ParseError(std::max(line_no, 1), "no data lines");
    const int n = int(rows[0].size());
    if (n < 1) throw ParseError(row_lines[0], "empty rating row");
    if (int(rows.size()) != 2 * n) {
        throw ParseError(line_no, "expected " + std::to_string(2 * n) + " rating rows, got " +
                                      std::to_string(rows.size()));
    }

    PreferenceProfile p;
    p.n = n;
    p.men.reserve(size_t(n) * n);
    p.women.reserve(size_t(n) * n);
    for (int i = 0; i < 2 * n; ++i) {
        if (int(rows[i].size()) != n) {
            throw ParseError(row_lines[i], "expected " + std::to_string(n) + " ratings, got " +
                                               std::to_string(rows[i].size()));
        }
        if (!is_permutation_1n(rows[i])) {
            throw ParseError(row_lines[i],
                             "row " + std::to_string(i + 1) + " is not a permutation of 1.." +
                                 std::to_string(n));
        }
        auto& dst = i < n ? p.men : p.women;
        dst.insert(dst.end(), rows[i].begin(), rows[i].end());
    }
    return p;
}

std::string format_profile(const PreferenceProfile& p) {
    std::ostringstream out;
    for (int i = 0; i < 2 * p.n; ++i) {
        auto row = i < p.n ? p.man_row(i) : p.woman_row(i - p.n);
        for (int j = 0; j < p.n; ++j) {
            if (j) out << ' ';
            out << row[j];
        }
        out << '\n';
    }
    return out.str();
}

PreferenceProfile complement(const PreferenceProfile& p) {
    PreferenceProfile q = p;
    for (int& r : q.men) r = p.n + 1 - r;
    for (int& r : q.women) r = p.n + 1 - r;
    return q;
}

std::vector<int> choice_order(std::span<const int> ratings) {
    std::vector<int> order(ratings.size());
    for (int j = 0; j < int(ratings.size()); ++j) order[ratings[j] - 1] = j;
    return order;
}

}  // namespace smp
