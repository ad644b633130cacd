#pragma once

// Reference values used by `count --check`, copied in so that checks never
// need a network lookup. Index 0 of every array is n = 1.

#include <array>
#include <cstdint>

namespace knotperm::cli::expected {

/// Unlinked derangements of length n, by number of components and in total.
inline constexpr std::array<std::uint64_t, 10> unlinked_k1{0, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586};
inline constexpr std::array<std::uint64_t, 10> unlinked_k2{0, 0, 0, 2, 10, 48, 238, 1216, 6354, 33760};
inline constexpr std::array<std::uint64_t, 10> unlinked_k3{0, 0, 0, 0, 0, 5, 42, 280, 1752, 10710};
inline constexpr std::array<std::uint64_t, 10> unlinked_k4{0, 0, 0, 0, 0, 0, 0, 14, 168, 1440};
inline constexpr std::array<std::uint64_t, 10> unlinked_total{0, 1, 2, 8, 32, 143, 674, 3316, 16832, 87538};

/// Unlinked permutations of length n with fixed points counted as components.
inline constexpr std::array<std::uint64_t, 9> unlinked_with_fixed{1, 2, 6, 23, 103, 511, 2719, 15205, 88197};

}  // namespace knotperm::cli::expected
