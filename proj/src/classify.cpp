#include "smp/classify.hpp"

#include <algorithm>

#include "smp/error.hpp"

namespace smp {

int count_soulmates(const PreferenceProfile& p) {
    int count = 0;
    for (int m = 0; m < p.n; ++m) {
        for (int w = 0; w < p.n; ++w) {
            if (p.man_rank(m, w) == 1 && p.woman_rank(w, m) == 1) ++count;
        }
    }
    return count;
}

int count_hell_pairs(const PreferenceProfile& p) {
    int count = 0;
    for (int m = 0; m < p.n; ++m) {
        for (int w = 0; w < p.n; ++w) {
            if (p.man_rank(m, w) == p.n && p.woman_rank(w, m) == p.n) ++count;
        }
    }
    return count;
}

std::vector<std::pair<int, int>> find_outcasts(const PreferenceProfile& p) {
    const int n = p.n;
    // last_by_women[m] = women ranking man m last; the pair's own mutual
    // rankings are excluded, so outcasts need n-1 such votes each.
    std::vector<int> last_by_women(n, 0), last_by_men(n, 0);
    for (int w = 0; w < n; ++w) {
        for (int m = 0; m < n; ++m) {
            if (p.woman_rank(w, m) == n) ++last_by_women[m];
        }
    }
    for (int m = 0; m < n; ++m) {
        for (int w = 0; w < n; ++w) {
            if (p.man_rank(m, w) == n) ++last_by_men[w];
        }
    }
    std::vector<std::pair<int, int>> out;
    for (int m = 0; m < n; ++m) {
        if (last_by_women[m] < n - 1) continue;
        for (int w = 0; w < n; ++w) {
            if (last_by_men[w] < n - 1) continue;
            const bool women_ok = last_by_women[m] == n || p.woman_rank(w, m) != n;
            const bool men_ok = last_by_men[w] == n || p.man_rank(m, w) != n;
            if (women_ok && men_ok) out.emplace_back(m, w);
        }
    }
    return out;
}

int count_outcast_pairs(const PreferenceProfile& p) { return int(find_outcasts(p).size()); }

bool has_outcast_hell_pair(const PreferenceProfile& p) {
    const int n = p.n;
    for (int m = 0; m < n; ++m) {
        bool all_last = true;
        for (int w = 0; w < n && all_last; ++w) all_last = p.woman_rank(w, m) == n;
        if (!all_last) continue;
        for (int w = 0; w < n; ++w) {
            bool ok = true;
            for (int m2 = 0; m2 < n && ok; ++m2) ok = p.man_rank(m2, w) == n;
            if (ok) return true;
        }
    }
    return false;
}

bool has_homecoming_queen(const PreferenceProfile& p) {
    for (int w = 0; w < p.n; ++w) {
        bool all_first = true;
        for (int m = 0; m < p.n && all_first; ++m) all_first = p.man_rank(m, w) == 1;
        if (all_first) return true;
    }
    return false;
}

bool has_homecoming_king(const PreferenceProfile& p) {
    for (int m = 0; m < p.n; ++m) {
        bool all_first = true;
        for (int w = 0; w < p.n && all_first; ++w) all_first = p.woman_rank(w, m) == 1;
        if (all_first) return true;
    }
    return false;
}

namespace {

bool same_taste(const std::vector<int>& matrix, int n) {
    for (int i = 1; i < n; ++i) {
        if (!std::equal(matrix.begin(), matrix.begin() + n, matrix.begin() + i * n)) return false;
    }
    return true;
}

bool first_choices_distinct(const std::vector<int>& matrix, int n) {
    std::vector<bool> chosen(n, false);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (matrix[i * n + j] == 1) {
                if (chosen[j]) return false;
                chosen[j] = true;
                break;
            }
        }
    }
    return true;
}

// Rows are permutations by construction, so Latin reduces to: every column
// holds each rank exactly once.
bool is_latin(const std::vector<int>& matrix, int n) {
    for (int j = 0; j < n; ++j) {
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            const int r = matrix[i * n + j];
            if (seen[r - 1]) return false;
            seen[r - 1] = true;
        }
    }
    return true;
}

}  // namespace

bool men_same_taste(const PreferenceProfile& p) { return same_taste(p.men, p.n); }
bool women_same_taste(const PreferenceProfile& p) { return same_taste(p.women, p.n); }

bool men_first_choices_distinct(const PreferenceProfile& p) {
    return first_choices_distinct(p.men, p.n);
}
bool women_first_choices_distinct(const PreferenceProfile& p) {
    return first_choices_distinct(p.women, p.n);
}

bool men_latin(const PreferenceProfile& p) { return is_latin(p.men, p.n); }
bool women_latin(const PreferenceProfile& p) { return is_latin(p.women, p.n); }

bool is_latin_profile(const PreferenceProfile& p) {
    for (int m = 0; m < p.n; ++m) {
        for (int w = 0; w < p.n; ++w) {
            if (p.man_rank(m, w) + p.woman_rank(w, m) != p.n + 1) return false;
        }
    }
    return true;
}

bool is_disjoint(const PreferenceProfile& p) {
    const int n = p.n;
    std::vector<bool> cell(size_t(n) * n, false);
    for (int m = 0; m < n; ++m) {
        for (int w = 0; w < n; ++w) {
            const int i = p.man_rank(m, w) - 1;
            const int j = p.woman_rank(w, m) - 1;
            if (cell[i * n + j]) return false;
            cell[i * n + j] = true;
        }
    }
    return true;
}

bool is_joint(const PreferenceProfile& p) {
    const int n = p.n;
    // key[i] = the unique j paired with mutual ranking (i+1, j); it must be a
    // permutation and each (i, key[i]) must occur exactly n times.
    std::vector<int> key(n, 0);
    std::vector<int> times(n, 0);
    for (int m = 0; m < n; ++m) {
        for (int w = 0; w < n; ++w) {
            const int i = p.man_rank(m, w);
            const int j = p.woman_rank(w, m);
            if (key[i - 1] == 0) {
                key[i - 1] = j;
            } else if (key[i - 1] != j) {
                return false;
            }
            ++times[i - 1];
        }
    }
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (times[i] != n || used[key[i] - 1]) return false;
        used[key[i] - 1] = true;
    }
    return true;
}

bool dominance(const PreferenceProfile& p, int a, int b, Side side) {
    if (a == b) throw ValidationError("dominance: a and b must differ");
    if (a < 0 || b < 0 || a >= p.n || b >= p.n) {
        throw ValidationError("dominance: person index out of range");
    }
    for (int i = 0; i < p.n; ++i) {
        const int ra = side == Side::Men ? p.man_rank(i, a) : p.woman_rank(i, a);
        const int rb = side == Side::Men ? p.man_rank(i, b) : p.woman_rank(i, b);
        if (ra >= rb) return false;
    }
    return true;
}

ProfileStats classify(const PreferenceProfile& p) {
    ProfileStats s;
    s.soulmate_pairs = count_soulmates(p);
    s.hell_pairs = count_hell_pairs(p);
    s.has_homecoming_queen = has_homecoming_queen(p);
    s.has_homecoming_king = has_homecoming_king(p);
    s.men_first_choices_distinct = men_first_choices_distinct(p);
    s.men_same_taste = men_same_taste(p);
    s.men_latin = men_latin(p);
    s.women_latin = women_latin(p);
    s.is_latin_profile = is_latin_profile(p);
    s.is_disjoint = is_disjoint(p);
    s.is_joint = is_joint(p);
    s.outcast_pairs = find_outcasts(p);
    return s;
}

}  // namespace smp
