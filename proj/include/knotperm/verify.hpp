#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive invariant checks shared by the `verify` command and the
 * acceptance suite. Each check stops at the first failure and reports it.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "knotperm/diagram.hpp"
#include "knotperm/enumerate.hpp"
#include "knotperm/permutation.hpp"
#include "knotperm/seifert.hpp"
#include "knotperm/series.hpp"
#include "knotperm/signed_tree.hpp"
#include "knotperm/unknot.hpp"

namespace knotperm {

struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  ///< first failure, empty when passed

  void fail(std::string what) {
    if (passed) detail = std::move(what);
    passed = false;
  }
};

/// Order independence, rotation invariance, negation and decider round trip
/// over every canonical tree with at most @p max_nodes non-root nodes.
inline CheckResult check_bijection(int max_nodes, int random_orders = 20, std::uint64_t seed = 1) {
  CheckResult r("tree bijection (<= " + std::to_string(max_nodes) + " nodes)");
  std::mt19937_64 rng(seed);
  for (int k = 0; k <= max_nodes && r.passed; ++k) {
    std::set<std::vector<int>> images;
    for (const SignedTree& t : canonical_classes(k + 1)) {
      ++r.cases;
      const Permutation c = tree_to_cycle(t);
      const std::string where = " for " + t.to_string();
      if (!images.insert(std::vector<int>(c.images().begin(), c.images().end())).second)
        r.fail("two classes share the cycle " + c.to_string());
      if (!is_full_cycle(c)) r.fail("image is not a cycle" + where);
      for (int o = 0; o < random_orders; ++o)
        if (tree_to_cycle(t, random_processing_order(t, rng)) != c) r.fail("processing order changes the cycle" + where);
      for (const SignedTree& u : rotation_closure(t))
        if (tree_to_cycle(u) != c) r.fail("rotation " + u.to_string() + " changes the cycle" + where);
      if (tree_to_cycle(negate(t)) != inverse(c)) r.fail("negation is not inversion" + where);
      const Verdict v = decide_unknot(c);
      if (v.status != Status::Unknot || !v.tree || v.tree->to_string() != t.to_string())
        r.fail("decider does not return the class" + where);
      if (!r.passed) break;
    }
  }
  return r;
}

/// Unknot verdicts on n-cycles coincide with tree images, and number S_{n-1}.
inline CheckResult check_completeness(int max_n, const EnumerationConfig& config = {}) {
  CheckResult r("unknotted cycles = tree images (n <= " + std::to_string(max_n) + ")");
  for (int n = 2; n <= max_n && r.passed; ++n) {
    std::set<std::vector<int>> from_trees;
    for (const SignedTree& t : canonical_classes(n - 1)) {
      const Permutation c = tree_to_cycle(t);
      from_trees.insert(std::vector<int>(c.images().begin(), c.images().end()));
    }
    std::set<std::vector<int>> decided;
    enumerate_cycles(
        n,
        [&](const Permutation& p) {
          ++r.cases;
          if (decide_unknot(p).status == Status::Unknot) decided.insert(std::vector<int>(p.images().begin(), p.images().end()));
        },
        config);
    if (decided != from_trees) r.fail("sets differ at n = " + std::to_string(n));
    else if (BigInt(decided.size()) != schroder(n - 1)) r.fail("count is not S_{n-1} at n = " + std::to_string(n));
  }
  return r;
}

/// Seifert and crossing lemmas over all derangements with n <= @p max_n;
/// the maximal-circle and crossing statements only for cycles.
inline CheckResult check_topology(int max_n, const EnumerationConfig& config = {}) {
  CheckResult r("topology lemmas (derangements n <= " + std::to_string(max_n) + ")");
  for (int n = 2; n <= max_n && r.passed; ++n) {
    enumerate_permutations(
        n, Family::Derangements,
        [&](const Permutation& p) {
          if (!r.passed) return;
          ++r.cases;
          const std::string at = " at " + p.to_string();
          const auto ur = ur_indices(p);
          const auto sd = seifert_circles(p);
          if (sd.size() != ur.size()) r.fail("Seifert circles != UR indices" + at);
          for (const auto& c : sd.circles)
            if (c.ur_points.size() != 1 || c.ll_points.size() != 1) r.fail("circle without exactly one UR and one LL corner" + at);
          // The remaining statements are about knots: a split link has several maximal circles.
          if (!is_full_cycle(p)) return;
          if (sd.maximal().size() != 1) r.fail("no unique maximal Seifert circle" + at);
          bool spread = true;
          for (int i = 1; i <= n; ++i) spread = spread && std::abs(p(i) - i) >= 2;
          const auto c = static_cast<int>(sd.crossings.size());
          if (spread) {
            if (c < static_cast<int>(ur.size())) r.fail("C < UR for a kink-free cycle" + at);
            const auto maximal = sd.maximal();
            for (std::size_t k = 0; k < sd.size(); ++k)
              if (sd.circles[k].crossings.size() == 1 && (maximal.empty() || maximal.front() != k))
                r.fail("single-crossing circle is not maximal" + at);
          }
          if (is_unknotted_cycle(p) && thurston_bennequin(p) > -1) r.fail("tb > -1 for an unknot" + at);
        },
        config);
  }
  return r;
}

/// [u^k x^n] F against enumerated strata (n <= max_n) and [x^n] G at u = 1
/// against counts with fixed points (n <= min(max_n, 8)).
inline CheckResult check_series(int max_n, const EnumerationConfig& config = {}) {
  CheckResult r("series vs enumeration (n <= " + std::to_string(max_n) + ")");
  const auto f = series_F(max_n);
  const auto g = series_G(max_n);
  if (!cubic_F_residual(f).is_zero()) r.fail("F does not satisfy its cubic");
  if (!cubic_G_residual(g).is_zero()) r.fail("G does not satisfy its cubic");
  for (int n = 1; n <= max_n && r.passed; ++n) {
    const CountRow row = count_unlinked(n, true, false, config);
    ++r.cases;
    for (int k = 0; k <= n; ++k)
      if (f.coeff(k, n) != row.stratum(k))
        r.fail("F coefficient u^" + std::to_string(k) + " x^" + std::to_string(n) + " differs from the count");
    if (n <= std::min(max_n, 8) && g.at_u1(n) != count_unlinked(n, false, true, config).total)
      r.fail("G coefficient x^" + std::to_string(n) + " differs from the count");
  }
  return r;
}

/// Runs dg_experiment up to @p max_n; the check records inequality but only
/// fails on an internal error.
inline CheckResult check_dg(int max_n, std::vector<DgReport>* reports = nullptr, const EnumerationConfig& config = {}) {
  CheckResult r("Diaconis-Graham experiment (n <= " + std::to_string(max_n) + ")");
  for (int n = 1; n <= max_n; ++n) {
    DgReport rep = dg_experiment(n, config);
    ++r.cases;
    if (!rep.equal && r.detail.empty()) r.detail = "sets differ at n = " + std::to_string(n) + " (finding, not a failure)";
    if (reports) reports->push_back(std::move(rep));
  }
  return r;
}

}  // namespace knotperm
