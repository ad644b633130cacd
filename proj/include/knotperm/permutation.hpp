#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation, 1-based.
 *
 * images()[i - 1] holds sigma(i). The 0-based storage never leaks out of
 * this header: every accessor and every free function speaks 1-based.
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotperm/error.hpp"

namespace knotperm {

class Permutation {
 public:
  /// Validates that @p images is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error(Errc::MalformedInput, "empty permutation");
    std::vector<bool> seen(images_.size() + 1, false);
    const int n = size();
    for (int v : images_) {
      if (v < 1 || v > n || seen[v])
        throw Error(Errc::NotABijection, "value " + std::to_string(v) + " out of range or repeated");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }

  /// sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> images() const noexcept { return images_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  /// Comma-separated images, e.g. "2,4,6,3,1,5".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(images_[k]);
    }
    return out;
  }

  /// Digit shorthand for n <= 9 ("246315"), otherwise the comma form.
  std::string to_compact_string() const {
    if (size() > 9) return to_string();
    std::string out;
    for (int v : images_) out += static_cast<char>('0' + v);
    return out;
  }

 private:
  std::vector<int> images_;
};

/// Accepts "4,6,7,5,1,3,2,9,8", "4 6 7 5 1 3 2 9 8" or the digit shorthand
/// "467513298" (a single undelimited token is read digit by digit).
inline Permutation parse_permutation(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::exchange(cur, {}));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      throw Error(Errc::MalformedInput, std::string("unexpected character '") + c + "'");
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  if (tokens.empty()) throw Error(Errc::MalformedInput, "no values");

  std::vector<int> images;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    if (tokens[0].size() > 9)
      throw Error(Errc::MalformedInput, "digit shorthand only allowed for n <= 9; use delimiters");
    for (char c : tokens[0]) images.push_back(c - '0');
  } else {
    for (const auto& t : tokens) {
      if (t.size() > 9) throw Error(Errc::MalformedInput, "value too large: " + t);
      images.push_back(std::stoi(t));
    }
  }
  return Permutation(std::move(images));
}

/// Cycles in canonical order: each starts at its minimum, sorted by minimum.
/// Fixed points appear as length-1 cycles.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  std::size_t count() const noexcept { return cycles.size(); }

  /// "(1 4 5)(2 6 3 7)(8 9)"
  std::string to_string() const {
    std::string out;
    for (const auto& c : cycles) out += cycle_to_string(c);
    return out;
  }

  static std::string cycle_to_string(std::span<const int> cycle) {
    std::string out = "(";
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    return out + ")";
  }

  bool operator==(const CycleDecomposition&) const = default;
};

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition d;
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    auto& cyc = d.cycles.emplace_back();
    for (int i = start; !seen[i]; i = p(i)) {
      seen[i] = true;
      cyc.push_back(i);
    }
  }
  return d;
}

inline int cycle_count(const Permutation& p) {
  return static_cast<int>(cycle_decomposition(p).count());
}

/// True iff p consists of a single cycle of length n (n >= 2).
inline bool is_full_cycle(const Permutation& p) {
  const int n = p.size();
  if (n < 2) return false;
  int len = 1;
  for (int i = p(1); i != 1; i = p(i)) ++len;
  return len == n;
}

inline bool is_derangement(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) return false;
  return true;
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> q(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) q[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(q));
}

/// (a * b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(Errc::MalformedInput, "size mismatch in compose");
  std::vector<int> r(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) r[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(r));
}

inline std::int64_t inversions(const Permutation& p) {
  std::int64_t count = 0;
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++count;
  return count;
}

inline std::int64_t total_displacement(const Permutation& p) {
  std::int64_t td = 0;
  for (int i = 1; i <= p.size(); ++i) td += std::abs(p(i) - i);
  return td;
}

/// td - (inv + n - cyc). Non-negative by the Diaconis-Graham inequality.
inline std::int64_t dg_gap(const Permutation& p) {
  return total_displacement(p) - (inversions(p) + p.size() - cycle_count(p));
}

}  // namespace knotperm
