#pragma once

/**
 * @file diagram.hpp
 * @brief The cycle diagram of a permutation read as an oriented link diagram.
 *
 * For each non-fixed i the diagram has a vertical segment (i,i) -> (i,sigma(i))
 * followed by a horizontal segment (i,sigma(i)) -> (sigma(i),sigma(i)).
 * Vertical strands pass over horizontal ones. Segments above the diagonal run
 * up/right, segments below run down/left, so every crossing is negative.
 *
 * Crossings are counted arithmetically: (i, j) is a crossing pair iff
 * i < j < sigma(i) < sigma(j) or i > j > sigma(i) > sigma(j). The crossing
 * sits where the horizontal segment of i meets the vertical segment of j,
 * i.e. at (j, sigma(i)).
 */

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "knotperm/error.hpp"
#include "knotperm/permutation.hpp"

namespace knotperm {

struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

enum class Direction { Up, Down, Left, Right };

inline Point unit(Direction d) {
  switch (d) {
    case Direction::Up: return {0, 1};
    case Direction::Down: return {0, -1};
    case Direction::Left: return {-1, 0};
    case Direction::Right: return {1, 0};
  }
  return {};
}

struct Segment {
  int owner = 0;  ///< index i whose step this segment belongs to
  bool vertical = false;
  Point from;
  Point to;
  Direction direction = Direction::Up;
};

struct CycleDiagram {
  Permutation perm;
  std::vector<Point> points;      ///< off-diagonal points (i, sigma(i))
  std::vector<Segment> segments;  ///< vertical then horizontal, per owner, in index order
};

inline CycleDiagram build_diagram(const Permutation& p) {
  CycleDiagram d{p, {}, {}};
  for (int i = 1; i <= p.size(); ++i) {
    const int s = p(i);
    if (s == i) continue;
    const bool above = s > i;
    d.points.push_back({i, s});
    d.segments.push_back({i, true, {i, i}, {i, s}, above ? Direction::Up : Direction::Down});
    d.segments.push_back({i, false, {i, s}, {s, s}, above ? Direction::Right : Direction::Left});
  }
  return d;
}

/// One crossing: the horizontal segment of `horizontal` under the vertical
/// segment of `vertical`.
struct Crossing {
  int horizontal = 0;  ///< i of the C-pair (i, j)
  int vertical = 0;    ///< j of the C-pair (i, j)
  Point at;            ///< (j, sigma(i))
  bool above = true;   ///< above or below the diagonal

  bool operator==(const Crossing&) const = default;
};

struct CrossingSet {
  std::vector<Crossing> pairs;
  std::size_t size() const noexcept { return pairs.size(); }
};

inline CrossingSet c_pairs(const Permutation& p) {
  CrossingSet out;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    const int si = p(i);
    for (int j = 1; j <= n; ++j) {
      const int sj = p(j);
      if (i < j && j < si && si < sj)
        out.pairs.push_back({i, j, {j, si}, true});
      else if (i > j && j > si && si > sj)
        out.pairs.push_back({i, j, {j, si}, false});
    }
  }
  return out;
}

inline std::size_t crossing_count(const Permutation& p) { return c_pairs(p).size(); }

/// Upper-right diagonal corners: sigma^{-1}(i) < i and sigma(i) < i.
inline std::vector<int> ur_indices(const Permutation& p) {
  const Permutation inv = inverse(p);
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i)
    if (inv(i) < i && p(i) < i) out.push_back(i);
  return out;
}

/// Lower-left diagonal corners: sigma^{-1}(i) > i and sigma(i) > i.
inline std::vector<int> ll_indices(const Permutation& p) {
  const Permutation inv = inverse(p);
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i)
    if (inv(i) > i && p(i) > i) out.push_back(i);
  return out;
}

/// All crossings are negative, so the writhe is minus the crossing count.
inline int writhe(const Permutation& p) { return -static_cast<int>(crossing_count(p)); }

inline void require_derangement(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i)
      throw Error(Errc::HasFixedPoint, std::to_string(i) + " is fixed; no link diagram");
}

/// tb of the associated Legendrian front: C(D) - UR(D).
inline int thurston_bennequin(const Permutation& p) {
  require_derangement(p);
  return static_cast<int>(crossing_count(p)) - static_cast<int>(ur_indices(p).size());
}

/// cycle_of[i] = index into cycle_decomposition(p).cycles of the cycle through i.
inline std::vector<std::size_t> cycle_index_map(const Permutation& p, const CycleDecomposition& d) {
  std::vector<std::size_t> of(static_cast<std::size_t>(p.size()) + 1, 0);
  for (std::size_t c = 0; c < d.cycles.size(); ++c)
    for (int i : d.cycles[c]) of[static_cast<std::size_t>(i)] = c;
  return of;
}

using ComponentPair = std::pair<std::size_t, std::size_t>;

/// Crossing counts between every pair of distinct cycles. Keys index
/// cycle_decomposition(p).cycles with first < second; zero counts included.
inline std::map<ComponentPair, int> inter_component_crossings(const Permutation& p) {
  require_derangement(p);
  const CycleDecomposition d = cycle_decomposition(p);
  const auto of = cycle_index_map(p, d);
  std::map<ComponentPair, int> out;
  for (std::size_t a = 0; a < d.cycles.size(); ++a)
    for (std::size_t b = a + 1; b < d.cycles.size(); ++b) out[{a, b}] = 0;
  for (const Crossing& c : c_pairs(p).pairs) {
    auto a = of[static_cast<std::size_t>(c.horizontal)];
    auto b = of[static_cast<std::size_t>(c.vertical)];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    ++out[{a, b}];
  }
  return out;
}

/// Linking number of the components through elements @p a and @p b:
/// half the signed count of crossings between them, each crossing negative.
inline int linking_number(const Permutation& p, int a, int b) {
  require_derangement(p);
  if (a < 1 || a > p.size() || b < 1 || b > p.size())
    throw Error(Errc::MalformedInput, "element out of range");
  const CycleDecomposition d = cycle_decomposition(p);
  const auto of = cycle_index_map(p, d);
  const auto ca = of[static_cast<std::size_t>(a)];
  const auto cb = of[static_cast<std::size_t>(b)];
  if (ca == cb) throw Error(Errc::SameComponent, "elements lie on the same cycle");
  int count = 0;
  for (const Crossing& c : c_pairs(p).pairs) {
    const auto h = of[static_cast<std::size_t>(c.horizontal)];
    const auto v = of[static_cast<std::size_t>(c.vertical)];
    if ((h == ca && v == cb) || (h == cb && v == ca)) ++count;
  }
  if (count % 2 != 0)
    throw Error(Errc::OddCrossingCount, "odd crossing count between two closed components");
  return -count / 2;
}

}  // namespace knotperm
