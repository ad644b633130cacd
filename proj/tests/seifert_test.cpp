#include <gtest/gtest.h>

#include <map>
#include <set>
#include <tuple>

#include "knotperm/enumerate.hpp"
#include "knotperm/seifert.hpp"
#include "knotperm/unknot.hpp"
#include "oracles.hpp"

using namespace knotperm;
using oracle::perm;

namespace {

// Walks the diagram one lattice step at a time and smooths on the fly: a
// walker reaching a crossing along a vertical leaves along the horizontal
// strand there, and vice versa. Returns the number of closed walks.
int smoothing_oracle(const Permutation& p) {
  const int n = p.size();
  std::map<std::pair<int, int>, int> vdir, hdir;  // direction of the strand through a lattice point
  std::set<std::pair<int, int>> corner;
  for (int i = 1; i <= n; ++i) {
    const int s = p(i);
    if (s == i) continue;
    const int dv = s > i ? 1 : -1;
    for (int y = std::min(i, s); y <= std::max(i, s); ++y)
      if (y != i && y != s) vdir[{i, y}] = dv;
    for (int x = std::min(i, s); x <= std::max(i, s); ++x)
      if (x != i && x != s) hdir[{x, s}] = dv;
    corner.insert({i, s});
  }
  using Step = std::tuple<int, int, int, int>;  // x, y, dx, dy: edge leaving (x, y)
  std::set<Step> todo;
  for (int i = 1; i <= n; ++i) {
    const int s = p(i);
    if (s == i) continue;
    const int dv = s > i ? 1 : -1;
    for (int y = i; y != s; y += dv) todo.insert({i, y, 0, dv});
    for (int x = i; x != s; x += dv) todo.insert({x, s, dv, 0});
  }
  int circles = 0;
  while (!todo.empty()) {
    ++circles;
    Step cur = *todo.begin();
    while (todo.erase(cur)) {
      auto [x, y, dx, dy] = cur;
      x += dx;
      y += dy;
      const std::pair<int, int> at{x, y};
      if (x == y) {
        const int d = p(x) > x ? 1 : -1;
        cur = {x, y, 0, d};
      } else if (corner.count(at)) {
        cur = {x, y, dy, 0};
      } else if (vdir.count(at) && hdir.count(at)) {
        cur = dx == 0 ? Step{x, y, hdir[at], 0} : Step{x, y, 0, vdir[at]};
      } else {
        cur = {x, y, dx, dy};
      }
    }
  }
  return circles;
}

}  // namespace

TEST(Seifert, Examples) {
  const auto sd = seifert_circles(perm({8, 6, 4, 2, 7, 5, 1, 9, 3}));
  EXPECT_EQ(sd.size(), 4u);
  EXPECT_EQ(sd.maximal().size(), 1u);
  EXPECT_EQ(seifert_circles(perm({2, 1})).size(), 1u);
  EXPECT_EQ(seifert_circles(perm({2, 3, 1})).size(), 1u);
}

TEST(Seifert, MembershipAndCorners) {
  const auto sd = seifert_circles(perm({8, 6, 4, 2, 7, 5, 1, 9, 3}));
  std::vector<int> urs;
  for (const auto& c : sd.circles) {
    ASSERT_EQ(c.ur_points.size(), 1u);
    ASSERT_EQ(c.ll_points.size(), 1u);
    urs.push_back(c.ur_points.front());
  }
  std::sort(urs.begin(), urs.end());
  EXPECT_EQ(urs, (std::vector<int>{4, 6, 7, 9}));
  for (std::size_t x = 0; x < sd.membership.size(); ++x) {
    EXPECT_NE(sd.membership[x][0], sd.membership[x][1]);
    for (auto c : sd.membership[x]) {
      const auto& cs = sd.circles[c].crossings;
      EXPECT_NE(std::find(cs.begin(), cs.end(), x), cs.end());
    }
  }
}

TEST(Seifert, ContainmentIsAStrictOrder) {
  const auto sd = seifert_circles(perm({8, 6, 4, 2, 7, 5, 1, 9, 3}));
  for (std::size_t a = 0; a < sd.size(); ++a) {
    EXPECT_FALSE(sd.encloses[a][a]);
    for (std::size_t b = 0; b < sd.size(); ++b) {
      if (sd.encloses[a][b]) EXPECT_FALSE(sd.encloses[b][a]);
      for (std::size_t c = 0; c < sd.size(); ++c)
        if (sd.encloses[a][b] && sd.encloses[b][c]) EXPECT_TRUE(sd.encloses[a][c]);
    }
  }
}

TEST(Seifert, SplitUnlinkHasOneMaximalCirclePerComponent) {
  EXPECT_EQ(seifert_circles(perm({2, 1, 4, 3})).maximal().size(), 2u);
}

TEST(Seifert, AgreesWithWalkingOracle) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& p : oracle::all_permutations(n)) {
      if (!oracle::is_derangement(p)) continue;
      ASSERT_EQ(static_cast<int>(seifert_circles(p).size()), smoothing_oracle(p)) << p.to_string();
    }
  }
}

TEST(Seifert, LemmasOverDerangements) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& p : oracle::all_permutations(n)) {
      if (!oracle::is_derangement(p)) continue;
      const auto sd = seifert_circles(p);
      ASSERT_EQ(sd.size(), ur_indices(p).size()) << p.to_string();
      for (const auto& c : sd.circles) {
        ASSERT_EQ(c.ur_points.size(), 1u) << p.to_string();
        ASSERT_EQ(c.ll_points.size(), 1u) << p.to_string();
      }
      if (!oracle::is_cycle(p)) continue;
      const auto maximal = sd.maximal();
      ASSERT_EQ(maximal.size(), 1u) << p.to_string();
      if (crossing_count(p) > 0)
        for (const auto& c : sd.circles) ASSERT_GE(c.crossings.size(), 1u) << p.to_string();
    }
  }
}

// Kink-free cycles: C >= UR, and a circle with one crossing is the maximal one.
TEST(Seifert, KinkFreeCycles) {
  int seen = 0;
  for (int n = 4; n <= 10; ++n) {
    enumerate_cycles(n, [&](const Permutation& p) {
      for (int i = 1; i <= n; ++i)
        if (std::abs(p(i) - i) < 2) return;
      ++seen;
      ASSERT_GE(crossing_count(p), ur_indices(p).size()) << p.to_string();
      if (n > 8) return;
      const auto sd = seifert_circles(p);
      const auto top = sd.maximal().front();
      for (std::size_t k = 0; k < sd.size(); ++k)
        if (sd.circles[k].crossings.size() == 1) ASSERT_EQ(k, top) << p.to_string();
    });
  }
  EXPECT_GT(seen, 0);
}

TEST(Seifert, UnknotsHaveTbAtMostMinusOne) {
  for (int n = 2; n <= 9; ++n) {
    for (const auto& p : oracle::all_permutations(n)) {
      if (!oracle::is_cycle(p) || !is_unknotted_cycle(p)) continue;
      ASSERT_LE(thurston_bennequin(p), -1) << p.to_string();
    }
  }
}

TEST(DiagramStats, Record) {
  const auto s = diagram_stats(perm({8, 6, 4, 2, 7, 5, 1, 9, 3}));
  EXPECT_EQ(s.n, 9);
  EXPECT_EQ(s.crossings, 3u);
  EXPECT_EQ(s.writhe, -3);
  EXPECT_EQ(s.seifert_circle_count, 4u);
  ASSERT_TRUE(s.tb.has_value());
  EXPECT_EQ(*s.tb, -1);
  EXPECT_FALSE(diagram_stats(perm({1, 3, 2})).tb.has_value());
}
