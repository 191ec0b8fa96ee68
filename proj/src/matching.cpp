#include "smp/matching.hpp"

#include <algorithm>
#include <numeric>

#include "smp/error.hpp"

namespace smp {

namespace {

constexpr int kMaxEnumerationN = 6;  // 6! = 720 candidate matchings

}  // namespace

GsTrace gale_shapley(const PreferenceProfile& p, Side side) {
    const int n = p.n;
    // Unified view: proposer r rates receiver c.
    auto proposer_rank = [&](int r, int c) {
        return side == Side::Men ? p.man_rank(r, c) : p.woman_rank(r, c);
    };
    auto receiver_rank = [&](int c, int r) {
        return side == Side::Men ? p.woman_rank(c, r) : p.man_rank(c, r);
    };

    std::vector<std::vector<int>> order(n);  // order[r][k] = receiver r ranks k+1
    for (int r = 0; r < n; ++r) {
        order[r].resize(n);
        for (int c = 0; c < n; ++c) order[r][proposer_rank(r, c) - 1] = c;
    }

    std::vector<int> next_choice(n, 0);
    std::vector<int> engaged_to(n, -1);  // proposer -> receiver
    std::vector<int> fiance(n, -1);      // receiver -> proposer
    std::vector<std::vector<int>> suitors(n);
    int unengaged = n;
    int rounds = 0;

    while (unengaged > 0) {
        ++rounds;
        for (auto& s : suitors) s.clear();
        for (int r = 0; r < n; ++r) {
            if (engaged_to[r] >= 0) continue;
            suitors[order[r][next_choice[r]++]].push_back(r);
        }
        for (int c = 0; c < n; ++c) {
            if (suitors[c].empty()) continue;
            int best = fiance[c];
            for (int r : suitors[c]) {
                if (best < 0 || receiver_rank(c, r) < receiver_rank(c, best)) best = r;
            }
            if (best != fiance[c]) {
                if (fiance[c] >= 0) {
                    engaged_to[fiance[c]] = -1;
                    ++unengaged;
                }
                fiance[c] = best;
                engaged_to[best] = c;
                --unengaged;
            }
        }
    }

    GsTrace trace;
    trace.side = side;
    trace.rounds = rounds;
    trace.matching.resize(n);
    for (int r = 0; r < n; ++r) {
        if (side == Side::Men) {
            trace.matching[r] = engaged_to[r];
        } else {
            trace.matching[engaged_to[r]] = r;  // proposer r is a woman
        }
    }
    return trace;
}

void validate_matching(const PreferenceProfile& p, const Matching& m) {
    if (int(m.size()) != p.n) throw ValidationError("matching: size does not match profile");
    std::vector<bool> seen(p.n, false);
    for (int w : m) {
        if (w < 0 || w >= p.n || seen[w]) {
            throw ValidationError("matching: not a permutation of the women");
        }
        seen[w] = true;
    }
}

std::optional<std::pair<int, int>> find_blocking_pair(const PreferenceProfile& p,
                                                      const Matching& m) {
    validate_matching(p, m);
    const int n = p.n;
    std::vector<int> husband(n);
    for (int i = 0; i < n; ++i) husband[m[i]] = i;
    for (int man = 0; man < n; ++man) {
        const int wife_rank = p.man_rank(man, m[man]);
        for (int w = 0; w < n; ++w) {
            if (p.man_rank(man, w) < wife_rank &&
                p.woman_rank(w, man) < p.woman_rank(w, husband[w])) {
                return std::make_pair(man, w);
            }
        }
    }
    return std::nullopt;
}

bool is_stable(const PreferenceProfile& p, const Matching& m) {
    validate_matching(p, m);
    std::vector<int> husband(p.n);
    for (int i = 0; i < p.n; ++i) husband[m[i]] = i;
    return is_stable_matched(p, m, husband);
}

std::vector<Matching> enumerate_stable(const PreferenceProfile& p) {
    if (p.n > kMaxEnumerationN) {
        throw ValidationError("enumerate_stable: refusing n > " +
                              std::to_string(kMaxEnumerationN) + " (n! candidates)");
    }
    const int n = p.n;
    Matching perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> husband(n);
    std::vector<Matching> stable;
    do {
        for (int i = 0; i < n; ++i) husband[perm[i]] = i;
        if (is_stable_matched(p, perm, husband)) stable.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return stable;
}

int pair_cost(const PreferenceProfile& p, int man, int woman) {
    return p.man_rank(man, woman) + p.woman_rank(woman, man);
}

int egalitarian_cost(const PreferenceProfile& p, const Matching& m) {
    validate_matching(p, m);
    int total = 0;
    for (int man = 0; man < p.n; ++man) total += pair_cost(p, man, m[man]);
    return total;
}

std::vector<std::pair<int, int>> hell_couples_in(const PreferenceProfile& p, const Matching& m) {
    validate_matching(p, m);
    std::vector<std::pair<int, int>> out;
    for (int man = 0; man < p.n; ++man) {
        if (p.man_rank(man, m[man]) == p.n && p.woman_rank(m[man], man) == p.n) {
            out.emplace_back(man, m[man]);
        }
    }
    return out;
}

}  // namespace smp
