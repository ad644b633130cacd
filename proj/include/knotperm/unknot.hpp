#pragma once

/**
 * @file unknot.hpp
 * @brief Deciding unknot / unlink status from cycle diagrams.
 *
 * A kink is an index i with |sigma(i) - i| = 1. Collapsing a kink removes
 * position i and the value sigma(i), then closes the gap in the values; this
 * undoes one tree insertion and does not change the link. An unknotted cycle
 * of length >= 3 always has a kink, so a cycle is unknotted iff repeated
 * collapsing reaches 21. Replaying the collapses backwards as tree insertions
 * recovers a signed tree for the cycle.
 */

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <span>
#include <vector>

#include "knotperm/diagram.hpp"
#include "knotperm/error.hpp"
#include "knotperm/permutation.hpp"
#include "knotperm/signed_tree.hpp"

namespace knotperm {

struct Kink {
  int index = 0;
  Sign sign = Sign::Plus;  ///< + if sigma(i) = i + 1, - if sigma(i) = i - 1
  bool operator==(const Kink&) const = default;
};

inline std::vector<Kink> find_kinks(const Permutation& p) {
  std::vector<Kink> out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i + 1) out.push_back({i, Sign::Plus});
    else if (p(i) == i - 1) out.push_back({i, Sign::Minus});
  }
  return out;
}

/// Inverse of insert_node: a + kink at i undoes slot i, a - kink at j undoes slot j - 1.
inline int slot_of(const Kink& k) { return k.sign == Sign::Plus ? k.index : k.index - 1; }

inline Permutation collapse_kink(const Permutation& p, const Kink& k) {
  const int n = p.size();
  if (n < 3) throw Error(Errc::TooSmall, "cannot collapse below length 2");
  const int i = k.index;
  const int expect = k.sign == Sign::Plus ? i + 1 : i - 1;
  if (i < 1 || i > n || k.sign == Sign::None || p(i) != expect)
    throw Error(Errc::NotAKink, "index " + std::to_string(i) + " is not a kink of that sign");
  const int removed = p(i);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - 1);
  for (int pos = 1; pos <= n; ++pos) {
    if (pos == i) continue;
    const int v = p(pos);
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation(std::move(out));
}

enum class Status { Unknot, Knotted, Unlink, Linked };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Unknot: return "unknot";
    case Status::Knotted: return "knotted";
    case Status::Unlink: return "unlink";
    case Status::Linked: return "linked";
  }
  return "?";
}

/// Two components whose diagrams cross.
struct CrossingWitness {
  Crossing crossing;
  std::vector<int> component_a;  ///< cycle through crossing.horizontal
  std::vector<int> component_b;  ///< cycle through crossing.vertical
};

struct Verdict {
  Status status = Status::Knotted;
  int components = 0;
  std::optional<SignedTree> tree;                 ///< canonical tree, Unknot only
  std::optional<CrossingWitness> crossing;        ///< Linked because two components cross
  std::optional<std::vector<int>> knotted_component;  ///< Linked because a component is knotted
};

namespace detail {

inline constexpr std::size_t kKernelMax = 32;

/// Collapses the smallest kink until length 2 or no kink is left. @p a holds
/// a cycle in one-line form; returns true iff it reaches 21.
inline bool collapses_to_trivial(std::span<const int> cycle) {
  std::array<int, kKernelMax> a{};
  std::vector<int> heap;
  int* s = a.data();
  if (cycle.size() > kKernelMax) {
    heap.assign(cycle.begin(), cycle.end());
    s = heap.data();
  } else {
    std::copy(cycle.begin(), cycle.end(), a.begin());
  }
  int n = static_cast<int>(cycle.size());
  while (n > 2) {
    int k = 0;
    while (k < n && std::abs(s[k] - (k + 1)) != 1) ++k;
    if (k == n) return false;
    const int removed = s[k];
    for (int q = k; q + 1 < n; ++q) s[q] = s[q + 1];
    --n;
    for (int q = 0; q < n; ++q)
      if (s[q] > removed) --s[q];
  }
  return n == 2 && s[0] == 2;
}

/// Order-isomorphic relabelling of the cycle through the sorted @p support.
inline void dense_cycle(std::span<const int> images, std::span<const int> support, std::vector<int>& out) {
  out.resize(support.size());
  for (std::size_t k = 0; k < support.size(); ++k) {
    const int target = images[static_cast<std::size_t>(support[k] - 1)];
    const auto rank = std::lower_bound(support.begin(), support.end(), target) - support.begin();
    out[k] = static_cast<int>(rank) + 1;
  }
}

/// Component count of the unlink, or -1 when linked. Fixed points count as
/// components only when @p count_fixed is set.
inline int unlink_components(std::span<const int> s, bool count_fixed) {
  const int n = static_cast<int>(s.size());
  std::array<int, kKernelMax + 1> comp_small{};
  std::vector<int> comp_heap;
  int* comp = comp_small.data();
  if (static_cast<std::size_t>(n) > kKernelMax) {
    comp_heap.assign(static_cast<std::size_t>(n) + 1, 0);
    comp = comp_heap.data();
  } else {
    std::fill(comp_small.begin(), comp_small.end(), 0);
  }
  int cycles = 0;
  int nontrivial = 0;
  for (int i = 1; i <= n; ++i) {
    if (comp[i]) continue;
    ++cycles;
    int len = 0;
    for (int j = i; !comp[j]; j = s[static_cast<std::size_t>(j - 1)]) {
      comp[j] = cycles;
      ++len;
    }
    if (len > 1) ++nontrivial;
  }
  // Crossings between different components.
  for (int i = 1; i <= n; ++i) {
    const int si = s[static_cast<std::size_t>(i - 1)];
    if (si == i) continue;
    for (int j = 1; j <= n; ++j) {
      if (comp[j] == comp[i]) continue;
      const int sj = s[static_cast<std::size_t>(j - 1)];
      if ((i < j && j < si && si < sj) || (i > j && j > si && si > sj)) return -1;
    }
  }
  std::vector<int> support;
  std::vector<int> dense;
  for (int c = 1; c <= cycles; ++c) {
    support.clear();
    for (int i = 1; i <= n; ++i)
      if (comp[i] == c) support.push_back(i);
    if (support.size() < 2) continue;
    dense_cycle(s, support, dense);
    if (!collapses_to_trivial(dense)) return -1;
  }
  return count_fixed ? cycles : nontrivial;
}

inline void require_cycle(const Permutation& p) {
  if (!is_full_cycle(p)) throw Error(Errc::NotACycle, p.to_string() + " is not a single cycle of length >= 2");
}

}  // namespace detail

/// Fast yes/no test for a single cycle; no tree is built.
inline bool is_unknotted_cycle(const Permutation& p) {
  detail::require_cycle(p);
  return detail::collapses_to_trivial(p.images());
}

/// Decides a single cycle, choosing the kink to collapse at each step with
/// @p choose (given the current kinks, return an index into them).
template <class Chooser>
Verdict decide_unknot(const Permutation& p, Chooser&& choose) {
  detail::require_cycle(p);
  std::vector<Kink> history;
  Permutation cur = p;
  while (cur.size() > 2) {
    const auto kinks = find_kinks(cur);
    if (kinks.empty()) return Verdict{Status::Knotted, 1, std::nullopt, std::nullopt, std::nullopt};
    const Kink k = kinks.at(static_cast<std::size_t>(choose(kinks)));
    history.push_back(k);
    cur = collapse_kink(cur, k);
  }
  if (cur != Permutation({2, 1})) throw Error(Errc::InternalInconsistency, "collapse left a non-cycle");

  SignedTree t;
  for (auto it = history.rbegin(); it != history.rend(); ++it) t = insert_leaf(std::move(t), slot_of(*it), it->sign);
  return Verdict{Status::Unknot, 1, canonical_form(t), std::nullopt, std::nullopt};
}

/// Collapses the smallest-index kink first.
inline Verdict decide_unknot(const Permutation& p) {
  return decide_unknot(p, [](const std::vector<Kink>&) { return 0; });
}

/// The permutation induced on @p support (which p must map onto itself),
/// relabelled to {1..|support|} keeping relative order.
inline Permutation relabel_to_dense(const Permutation& p, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.empty()) throw Error(Errc::SupportNotInvariant, "empty support");
  for (int i : support) {
    if (i < 1 || i > p.size() || !std::binary_search(support.begin(), support.end(), p(i)))
      throw Error(Errc::SupportNotInvariant, "support is not closed under the permutation");
  }
  std::vector<int> dense;
  detail::dense_cycle(p.images(), support, dense);
  return Permutation(std::move(dense));
}

/// Unlink decision. Components must pairwise not cross and each must be an
/// unknotted cycle after relabelling. Fixed points are allowed only when
/// @p count_fixed_points is set, and then count as components.
inline Verdict is_unlinked(const Permutation& p, bool count_fixed_points) {
  if (!count_fixed_points) require_derangement(p);
  const CycleDecomposition d = cycle_decomposition(p);
  const auto of = cycle_index_map(p, d);

  for (const Crossing& c : c_pairs(p).pairs) {
    const auto a = of[static_cast<std::size_t>(c.horizontal)];
    const auto b = of[static_cast<std::size_t>(c.vertical)];
    if (a != b) {
      Verdict v{Status::Linked, static_cast<int>(d.count()), std::nullopt, std::nullopt, std::nullopt};
      v.crossing = CrossingWitness{c, d.cycles[a], d.cycles[b]};
      return v;
    }
  }
  int nontrivial = 0;
  for (const auto& cyc : d.cycles) {
    if (cyc.size() < 2) continue;
    ++nontrivial;
    const Permutation dense = relabel_to_dense(p, cyc);
    if (!detail::collapses_to_trivial(dense.images())) {
      Verdict v{Status::Linked, static_cast<int>(d.count()), std::nullopt, std::nullopt, std::nullopt};
      v.knotted_component = cyc;
      return v;
    }
  }
  const int k = count_fixed_points ? static_cast<int>(d.count()) : nontrivial;
  return Verdict{Status::Unlink, k, std::nullopt, std::nullopt, std::nullopt};
}

}  // namespace knotperm
