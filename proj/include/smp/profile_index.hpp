#pragma once

#include <cstdint>
#include <span>

#include "smp/bigint.hpp"
#include "smp/profile.hpp"

namespace smp {

// Canonical position of a profile inside the (n!)^(2n) profile space.
// The encoding is mixed-radix over the 2n rows' lexicographic permutation
// ranks (Lehmer codes), men's rows first with row 1 most significant.
struct ProfileIndex {
    BigCount value;
    int n = 0;

    bool operator==(const ProfileIndex&) const = default;
};

// (n!)^(2n), the number of distinct profiles for group size n.
BigCount profile_space_size(int n);

ProfileIndex encode_profile(const PreferenceProfile& p);
PreferenceProfile decode_profile(const ProfileIndex& idx);

// Lexicographic rank of a permutation of 1..n (identity -> 0), and inverse.
// Requires n <= 20 so the rank fits in 64 bits.
std::uint64_t permutation_rank(std::span<const int> perm);
void permutation_unrank(std::uint64_t rank, std::span<int> out);

// n! as uint64; requires n <= 20.
std::uint64_t factorial_u64(int n);

}  // namespace smp
