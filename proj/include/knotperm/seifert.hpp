#pragma once

/**
 * @file seifert.hpp
 * @brief Seifert circles of a cycle diagram.
 *
 * Every segment is cut at its crossings into arcs. Away from crossings an arc
 * continues along its own strand. At a crossing the incoming vertical arc is
 * joined to the outgoing horizontal arc and the incoming horizontal arc to the
 * outgoing vertical arc; this is the orientation-coherent smoothing.
 *
 * Circle geometry is kept in integer coordinates scaled by kSeifertScale. A
 * smoothed crossing X is drawn as a small staircase that stays kChamfer away
 * from X, so the two circles meeting at a crossing never touch.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "knotperm/diagram.hpp"
#include "knotperm/error.hpp"
#include "knotperm/permutation.hpp"

namespace knotperm {

inline constexpr int kSeifertScale = 8;
inline constexpr int kChamfer = 2;

struct SeifertCircle {
  std::vector<Point> vertices;        ///< closed rectilinear polygon, scaled coordinates
  std::vector<int> diagonal_points;   ///< diagonal indices (k,k) the circle passes through
  std::vector<int> ur_points;         ///< the subset that are upper-right corners
  std::vector<int> ll_points;         ///< the subset that are lower-left corners
  std::vector<std::size_t> crossings; ///< indices into SeifertDecomposition::crossings
};

struct SeifertDecomposition {
  CrossingSet crossings;
  std::vector<SeifertCircle> circles;
  /// For every crossing, the two circles created by smoothing it.
  std::vector<std::array<std::size_t, 2>> membership;
  /// encloses[a][b]: circle b lies in the bounded region of circle a.
  std::vector<std::vector<bool>> encloses;

  std::size_t size() const noexcept { return circles.size(); }

  /// Circles not enclosed by any other circle.
  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < circles.size(); ++b) {
      bool inside = false;
      for (std::size_t a = 0; a < circles.size() && !inside; ++a) inside = encloses[a][b];
      if (!inside) out.push_back(b);
    }
    return out;
  }
};

namespace detail {

struct Arc {
  bool vertical = false;
  int owner = 0;
  Point from;  // lattice coordinates
  Point to;
  Point dir;
  std::optional<std::size_t> start_crossing;
  std::optional<std::size_t> end_crossing;
  std::size_t next_on_strand = 0;
};

inline Point scaled(Point p) { return {p.x * kSeifertScale, p.y * kSeifertScale}; }

/// Crossing-number test; @p pt must not lie on the polygon.
inline bool point_in_polygon(Point pt, const std::vector<Point>& poly) {
  bool inside = false;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point a = poly[k];
    const Point b = poly[(k + 1) % poly.size()];
    const bool on_vertical = a.x == b.x && a.x == pt.x &&
                             std::min(a.y, b.y) <= pt.y && pt.y <= std::max(a.y, b.y);
    const bool on_horizontal = a.y == b.y && a.y == pt.y &&
                               std::min(a.x, b.x) <= pt.x && pt.x <= std::max(a.x, b.x);
    if (on_vertical || on_horizontal)
      throw Error(Errc::InternalInconsistency, "Seifert circles touch");
    if (a.x == b.x && ((a.y > pt.y) != (b.y > pt.y)) && a.x > pt.x) inside = !inside;
  }
  return inside;
}

}  // namespace detail

inline SeifertDecomposition seifert_circles(const Permutation& p) {
  using detail::Arc;
  SeifertDecomposition out;
  out.crossings = c_pairs(p);
  const auto& xs = out.crossings.pairs;
  const int n = p.size();

  // Crossings along each segment, keyed by owner.
  std::vector<std::vector<std::size_t>> on_vertical(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<std::size_t>> on_horizontal(static_cast<std::size_t>(n) + 1);
  for (std::size_t c = 0; c < xs.size(); ++c) {
    on_vertical[static_cast<std::size_t>(xs[c].vertical)].push_back(c);
    on_horizontal[static_cast<std::size_t>(xs[c].horizontal)].push_back(c);
  }

  std::vector<Arc> arcs;
  std::vector<std::size_t> first_vertical(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::size_t> v_in(xs.size()), v_out(xs.size()), h_in(xs.size()), h_out(xs.size());

  auto cut = [&](int owner, bool vertical, Point from, Point to, std::vector<std::size_t> cs) {
    const Point dir{(to.x > from.x) - (to.x < from.x), (to.y > from.y) - (to.y < from.y)};
    auto key = [&](std::size_t c) { return vertical ? xs[c].at.y * dir.y : xs[c].at.x * dir.x; };
    std::sort(cs.begin(), cs.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    const std::size_t first = arcs.size();
    Point cur = from;
    std::optional<std::size_t> cur_cross;
    for (std::size_t c : cs) {
      (vertical ? v_in : h_in)[c] = arcs.size();
      arcs.push_back({vertical, owner, cur, xs[c].at, dir, cur_cross, c, 0});
      (vertical ? v_out : h_out)[c] = arcs.size();
      cur = xs[c].at;
      cur_cross = c;
    }
    arcs.push_back({vertical, owner, cur, to, dir, cur_cross, std::nullopt, 0});
    for (std::size_t a = first; a + 1 < arcs.size(); ++a) arcs[a].next_on_strand = a + 1;
    return first;
  };

  std::vector<std::size_t> last_horizontal(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int s = p(i);
    if (s == i) continue;
    first_vertical[static_cast<std::size_t>(i)] =
        cut(i, true, {i, i}, {i, s}, on_vertical[static_cast<std::size_t>(i)]);
    const std::size_t vend = arcs.size() - 1;
    const std::size_t hfirst = cut(i, false, {i, s}, {s, s}, on_horizontal[static_cast<std::size_t>(i)]);
    arcs[vend].next_on_strand = hfirst;
    last_horizontal[static_cast<std::size_t>(i)] = arcs.size() - 1;
  }
  for (int i = 1; i <= n; ++i) {
    const int s = p(i);
    if (s == i) continue;
    arcs[last_horizontal[static_cast<std::size_t>(i)]].next_on_strand =
        first_vertical[static_cast<std::size_t>(s)];
  }

  const Permutation inv = inverse(p);
  auto smoothed_next = [&](const Arc& a) {
    if (!a.end_crossing) return a.next_on_strand;
    const std::size_t c = *a.end_crossing;
    return a.vertical ? h_out[c] : v_out[c];
  };

  std::vector<int> circle_of(arcs.size(), -1);
  for (std::size_t start = 0; start < arcs.size(); ++start) {
    if (circle_of[start] >= 0) continue;
    const int id = static_cast<int>(out.circles.size());
    SeifertCircle circle;
    std::size_t a = start;
    do {
      circle_of[a] = id;
      const Arc& cur = arcs[a];
      const std::size_t b = smoothed_next(cur);
      const Arc& nxt = arcs[b];
      if (cur.end_crossing) {
        const Point x = detail::scaled(cur.to);
        const Point back{x.x - kChamfer * cur.dir.x, x.y - kChamfer * cur.dir.y};
        const Point fwd{x.x + kChamfer * nxt.dir.x, x.y + kChamfer * nxt.dir.y};
        circle.vertices.push_back(back);
        circle.vertices.push_back({back.x + kChamfer * nxt.dir.x, back.y + kChamfer * nxt.dir.y});
        circle.vertices.push_back(fwd);
      } else {
        circle.vertices.push_back(detail::scaled(cur.to));
        if (!cur.vertical) {
          const int k = cur.to.x;  // a horizontal step ends on the diagonal
          circle.diagonal_points.push_back(k);
          if (p(k) < k && inv(k) < k) circle.ur_points.push_back(k);
          if (p(k) > k && inv(k) > k) circle.ll_points.push_back(k);
        }
      }
      a = b;
    } while (a != start);
    std::sort(circle.diagonal_points.begin(), circle.diagonal_points.end());
    std::sort(circle.ur_points.begin(), circle.ur_points.end());
    std::sort(circle.ll_points.begin(), circle.ll_points.end());
    out.circles.push_back(std::move(circle));
  }

  out.membership.resize(xs.size());
  for (std::size_t c = 0; c < xs.size(); ++c) {
    const auto first = static_cast<std::size_t>(circle_of[v_in[c]]);
    const auto second = static_cast<std::size_t>(circle_of[h_in[c]]);
    out.membership[c] = {first, second};
    out.circles[first].crossings.push_back(c);
    if (second != first) out.circles[second].crossings.push_back(c);
  }

  const std::size_t m = out.circles.size();
  out.encloses.assign(m, std::vector<bool>(m, false));
  for (std::size_t b = 0; b < m; ++b) {
    const auto& vb = out.circles[b].vertices;
    const Point probe{(vb[0].x + vb[1].x) / 2, (vb[0].y + vb[1].y) / 2};
    for (std::size_t a = 0; a < m; ++a)
      if (a != b) out.encloses[a][b] = detail::point_in_polygon(probe, out.circles[a].vertices);
  }
  return out;
}

/// Summary record used by the command line front end.
struct DiagramStats {
  int n = 0;
  std::size_t crossings = 0;
  std::vector<int> ur_indices;
  int writhe = 0;
  std::size_t seifert_circle_count = 0;
  std::optional<int> tb;  ///< only for derangements
};

inline DiagramStats diagram_stats(const Permutation& p) {
  DiagramStats s;
  s.n = p.size();
  s.crossings = crossing_count(p);
  s.ur_indices = ur_indices(p);
  s.writhe = -static_cast<int>(s.crossings);
  s.seifert_circle_count = seifert_circles(p).size();
  if (is_derangement(p)) s.tb = static_cast<int>(s.crossings) - static_cast<int>(s.ur_indices.size());
  return s;
}

}  // namespace knotperm
