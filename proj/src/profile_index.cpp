#include "smp/profile_index.hpp"

#include <array>

#include "smp/error.hpp"

namespace smp {

namespace {

constexpr int kMaxRankN = 20;  // 20! still fits in 64 bits

constexpr std::array<std::uint64_t, kMaxRankN + 1> make_factorials() {
    std::array<std::uint64_t, kMaxRankN + 1> f{};
    f[0] = 1;
    for (int i = 1; i <= kMaxRankN; ++i) f[i] = f[i - 1] * std::uint64_t(i);
    return f;
}

constexpr auto kFactorial = make_factorials();

}  // namespace

std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > kMaxRankN) throw ValidationError("factorial_u64: n out of range");
    return kFactorial[n];
}

std::uint64_t permutation_rank(std::span<const int> perm) {
    const int n = int(perm.size());
    if (n > kMaxRankN) throw ValidationError("permutation_rank: n > 20");
    // Lehmer digit i = number of later entries smaller than perm[i].
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) {
            if (perm[j] < perm[i]) ++smaller;
        }
        rank += std::uint64_t(smaller) * kFactorial[n - 1 - i];
    }
    return rank;
}

void permutation_unrank(std::uint64_t rank, std::span<int> out) {
    const int n = int(out.size());
    if (n > kMaxRankN) throw ValidationError("permutation_unrank: n > 20");
    if (rank >= kFactorial[n]) throw ValidationError("permutation_unrank: rank out of range");
    std::array<int, kMaxRankN> remaining;
    for (int i = 0; i < n; ++i) remaining[i] = i + 1;
    int left = n;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t base = kFactorial[n - 1 - i];
        const int d = int(rank / base);
        rank %= base;
        out[i] = remaining[d];
        for (int j = d; j < left - 1; ++j) remaining[j] = remaining[j + 1];
        --left;
    }
}

BigCount profile_space_size(int n) {
    if (n < 1) throw ValidationError("profile_space_size: n must be positive");
    BigCount fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return boost::multiprecision::pow(fact, unsigned(2 * n));
}

ProfileIndex encode_profile(const PreferenceProfile& p) {
    validate_profile(p);
    const std::uint64_t base = factorial_u64(p.n);
    BigCount value = 0;
    for (int i = 0; i < 2 * p.n; ++i) {
        auto row = i < p.n ? p.man_row(i) : p.woman_row(i - p.n);
        value = value * base + permutation_rank(row);
    }
    return {value, p.n};
}

PreferenceProfile decode_profile(const ProfileIndex& idx) {
    const int n = idx.n;
    if (n < 1) throw ValidationError("decode_profile: n must be positive");
    if (idx.value < 0 || idx.value >= profile_space_size(n)) {
        throw ValidationError("decode_profile: index out of range for n=" + std::to_string(n));
    }
    const std::uint64_t base = factorial_u64(n);
    std::vector<std::uint64_t> digits(2 * n);
    BigCount v = idx.value;
    for (int i = 2 * n - 1; i >= 0; --i) {
        digits[i] = std::uint64_t(v % base);
        v /= base;
    }
    PreferenceProfile p;
    p.n = n;
    p.men.resize(size_t(n) * n);
    p.women.resize(size_t(n) * n);
    for (int i = 0; i < 2 * n; ++i) {
        auto* data = i < n ? p.men.data() + i * n : p.women.data() + (i - n) * n;
        permutation_unrank(digits[i], {data, size_t(n)});
    }
    return p;
}

}  // namespace smp
