#pragma once

/**
 * @file enumerate.hpp
 * @brief Exhaustive enumeration of cycles, derangements and permutations.
 *
 * The generation space is cut into chunks by a short prefix of images. Each
 * chunk is folded into its own accumulator and the accumulators are combined
 * in chunk order afterwards, so results do not depend on the thread count.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "knotperm/error.hpp"
#include "knotperm/permutation.hpp"
#include "knotperm/series.hpp"
#include "knotperm/unknot.hpp"

namespace knotperm {

enum class Family { Cycles, Derangements, All };

struct EnumerationConfig {
  int max_cycle_n = 11;
  int max_permutation_n = 10;  ///< derangements and full S_n
  int max_dg_n = 8;
  unsigned threads = 1;

  /// Defaults overridden by KNOTPERM_MAX_N / KNOTPERM_THREADS when set.
  static EnumerationConfig from_environment() {
    EnumerationConfig c;
    if (const char* v = std::getenv("KNOTPERM_MAX_N"); v && *v) {
      const int cap = std::atoi(v);
      if (cap > 0) c.max_cycle_n = c.max_permutation_n = cap;
    }
    if (const char* v = std::getenv("KNOTPERM_THREADS"); v && *v) {
      const int t = std::atoi(v);
      if (t > 0) c.threads = static_cast<unsigned>(t);
    }
    return c;
  }

  int cap(Family f) const { return f == Family::Cycles ? max_cycle_n : max_permutation_n; }
};

inline void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw Error(Errc::CapExceeded, std::string(what) + " enumeration capped at n = " + std::to_string(cap) +
                                       ", requested " + std::to_string(n));
}

namespace detail {

struct Chunk {
  std::vector<int> prefix;  // cycles: chain elements after 1; otherwise images of 1, 2, ...
};

inline std::vector<Chunk> make_chunks(int n, Family family) {
  std::vector<Chunk> out;
  if (family == Family::Cycles) {
    if (n < 2) return out;
    const int depth = std::min(2, n - 1);
    std::vector<int> pre;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    used[1] = true;
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(pre.size()) == depth) {
        out.push_back({pre});
        return;
      }
      for (int v = 2; v <= n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = true;
        pre.push_back(v);
        self(self);
        pre.pop_back();
        used[static_cast<std::size_t>(v)] = false;
      }
    };
    rec(rec);
    return out;
  }
  const int depth = std::min(2, n);
  std::vector<int> pre;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    const int pos = static_cast<int>(pre.size()) + 1;
    if (pos - 1 == depth) {
      out.push_back({pre});
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)] || (family == Family::Derangements && v == pos)) continue;
      used[static_cast<std::size_t>(v)] = true;
      pre.push_back(v);
      self(self);
      pre.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec);
  return out;
}

/// Calls visit(span) for every member of the family extending the chunk prefix.
template <class Visit>
void run_chunk(int n, Family family, const Chunk& chunk, Visit&& visit) {
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  if (family == Family::Cycles) {
    std::vector<int> rest;
    for (int v = 2; v <= n; ++v)
      if (std::find(chunk.prefix.begin(), chunk.prefix.end(), v) == chunk.prefix.end()) rest.push_back(v);
    std::vector<int> chain;
    chain.reserve(static_cast<std::size_t>(n));
    do {
      chain.assign(1, 1);
      chain.insert(chain.end(), chunk.prefix.begin(), chunk.prefix.end());
      chain.insert(chain.end(), rest.begin(), rest.end());
      for (std::size_t k = 0; k < chain.size(); ++k)
        img[static_cast<std::size_t>(chain[k] - 1)] = chain[(k + 1) % chain.size()];
      visit(std::span<const int>(img));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return;
  }
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t k = 0; k < chunk.prefix.size(); ++k) {
    img[k] = chunk.prefix[k];
    used[static_cast<std::size_t>(chunk.prefix[k])] = true;
  }
  const bool derange = family == Family::Derangements;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos > n) {
      visit(std::span<const int>(img));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)] || (derange && v == pos)) continue;
      used[static_cast<std::size_t>(v)] = true;
      img[static_cast<std::size_t>(pos - 1)] = v;
      self(self, pos + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, static_cast<int>(chunk.prefix.size()) + 1);
}

}  // namespace detail

/// Folds @p visit (Acc&, std::span<const int> one-line images) over every
/// member of @p family of length @p n. Acc needs a default constructor and
/// an associative operator+=.
template <class Acc, class Visit>
Acc fold_family(int n, Family family, unsigned threads, Visit visit) {
  const auto chunks = detail::make_chunks(n, family);
  std::vector<Acc> partial(chunks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks.size();)
      detail::run_chunk(n, family, chunks[c], [&](std::span<const int> s) { visit(partial[c], s); });
  };
  const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(chunks.size(), 1))));
  if (t == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(t);
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
  }
  Acc total{};
  for (auto& p : partial) total += p;
  return total;
}

struct EnumerationSummary {
  std::uint64_t visited = 0;
};

/// Visits every n-cycle once, in a fixed order, on the calling thread.
template <class Visitor>
EnumerationSummary enumerate_cycles(int n, Visitor&& visitor, const EnumerationConfig& config = {}) {
  if (n < 2) throw Error(Errc::MalformedInput, "cycles need n >= 2");
  check_cap(n, config.max_cycle_n, "cycle");
  EnumerationSummary summary;
  for (const auto& chunk : detail::make_chunks(n, Family::Cycles)) {
    detail::run_chunk(n, Family::Cycles, chunk, [&](std::span<const int> s) {
      ++summary.visited;
      visitor(Permutation(std::vector<int>(s.begin(), s.end())));
    });
  }
  return summary;
}

/// Same as enumerate_cycles for derangements (family Derangements) or all of S_n.
template <class Visitor>
EnumerationSummary enumerate_permutations(int n, Family family, Visitor&& visitor, const EnumerationConfig& config = {}) {
  if (n < 1) throw Error(Errc::MalformedInput, "need n >= 1");
  check_cap(n, config.cap(family), "permutation");
  EnumerationSummary summary;
  for (const auto& chunk : detail::make_chunks(n, family)) {
    detail::run_chunk(n, family, chunk, [&](std::span<const int> s) {
      ++summary.visited;
      visitor(Permutation(std::vector<int>(s.begin(), s.end())));
    });
  }
  return summary;
}

namespace detail {

struct Counter {
  std::uint64_t value = 0;
  Counter& operator+=(const Counter& o) {
    value += o.value;
    return *this;
  }
};

struct Strata {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_k;
  Strata& operator+=(const Strata& o) {
    total += o.total;
    if (by_k.size() < o.by_k.size()) by_k.resize(o.by_k.size(), 0);
    for (std::size_t k = 0; k < o.by_k.size(); ++k) by_k[k] += o.by_k[k];
    return *this;
  }
};

}  // namespace detail

inline BigInt count_unknotted_cycles(int n, const EnumerationConfig& config = {}) {
  if (n < 2) throw Error(Errc::MalformedInput, "cycles need n >= 2");
  check_cap(n, config.max_cycle_n, "cycle");
  const auto c = fold_family<detail::Counter>(n, Family::Cycles, config.threads, [](detail::Counter& acc, std::span<const int> s) {
    if (detail::collapses_to_trivial(s)) ++acc.value;
  });
  return BigInt(c.value);
}

/// One row of an unlink count table: total and, by component count k,
/// by_components[k] (index 0 unused).
struct CountRow {
  int n = 0;
  BigInt total = 0;
  std::vector<BigInt> by_components;

  BigInt stratum(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < by_components.size() ? by_components[static_cast<std::size_t>(k)] : BigInt(0);
  }
};

struct CountTable {
  std::vector<CountRow> rows;

  /// Tab-separated, one row per n: "n total [k1 k2 ...]".
  std::string to_text(bool by_components, int max_k = 0) const {
    int kmax = max_k;
    if (by_components && kmax == 0)
      for (const auto& r : rows) kmax = std::max(kmax, static_cast<int>(r.by_components.size()) - 1);
    std::string out = "n\ttotal";
    if (by_components)
      for (int k = 1; k <= kmax; ++k) out += "\tk=" + std::to_string(k);
    out += '\n';
    for (const auto& r : rows) {
      out += std::to_string(r.n) + '\t' + r.total.str();
      if (by_components)
        for (int k = 1; k <= kmax; ++k) out += '\t' + r.stratum(k).str();
      out += '\n';
    }
    return out;
  }
};

/// Unlinked permutations of length n. With @p include_fixed_points the whole
/// of S_n is scanned and fixed points count as components; otherwise only
/// derangements. Strata by component count are filled when @p by_components.
inline CountRow count_unlinked(int n, bool by_components, bool include_fixed_points,
                               const EnumerationConfig& config = {}) {
  if (n < 1) throw Error(Errc::MalformedInput, "need n >= 1");
  const Family fam = include_fixed_points ? Family::All : Family::Derangements;
  check_cap(n, config.cap(fam), include_fixed_points ? "permutation" : "derangement");
  CountRow row;
  row.n = n;
  if (!include_fixed_points && n == 1) return row;
  const auto st = fold_family<detail::Strata>(n, fam, config.threads, [&](detail::Strata& acc, std::span<const int> s) {
    const int k = detail::unlink_components(s, include_fixed_points);
    if (k < 0) return;
    ++acc.total;
    if (by_components) {
      if (acc.by_k.size() <= static_cast<std::size_t>(k)) acc.by_k.resize(static_cast<std::size_t>(k) + 1, 0);
      ++acc.by_k[static_cast<std::size_t>(k)];
    }
  });
  row.total = st.total;
  for (auto v : st.by_k) row.by_components.emplace_back(v);
  return row;
}

/// Compares {p : dg_gap(p) = 0} with {p : unlink, fixed points as components} over S_n.
struct DgReport {
  int n = 0;
  bool equal = true;
  std::uint64_t dg_tight = 0;
  std::uint64_t unlinked = 0;
  std::uint64_t only_dg = 0;
  std::uint64_t only_unlinked = 0;
  std::vector<std::vector<int>> only_dg_witnesses;        ///< at most 5
  std::vector<std::vector<int>> only_unlinked_witnesses;  ///< at most 5

  DgReport& operator+=(const DgReport& o) {
    dg_tight += o.dg_tight;
    unlinked += o.unlinked;
    only_dg += o.only_dg;
    only_unlinked += o.only_unlinked;
    for (const auto& w : o.only_dg_witnesses)
      if (only_dg_witnesses.size() < 5) only_dg_witnesses.push_back(w);
    for (const auto& w : o.only_unlinked_witnesses)
      if (only_unlinked_witnesses.size() < 5) only_unlinked_witnesses.push_back(w);
    return *this;
  }
};

namespace detail {

inline std::int64_t dg_gap_of(std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  std::int64_t td = 0;
  std::int64_t inv = 0;
  for (int i = 0; i < n; ++i) {
    td += std::abs(s[static_cast<std::size_t>(i)] - (i + 1));
    for (int j = i + 1; j < n; ++j)
      if (s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(j)]) ++inv;
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int cyc = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cyc;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = s[static_cast<std::size_t>(j - 1)]) seen[static_cast<std::size_t>(j)] = true;
  }
  return td - (inv + n - cyc);
}

}  // namespace detail

inline DgReport dg_experiment(int n, const EnumerationConfig& config = {}) {
  if (n < 1) throw Error(Errc::MalformedInput, "need n >= 1");
  check_cap(n, config.max_dg_n, "Diaconis-Graham");
  DgReport r = fold_family<DgReport>(n, Family::All, config.threads, [](DgReport& acc, std::span<const int> s) {
    const bool tight = detail::dg_gap_of(s) == 0;
    const bool unl = detail::unlink_components(s, true) >= 0;
    acc.dg_tight += tight;
    acc.unlinked += unl;
    if (tight && !unl) {
      ++acc.only_dg;
      if (acc.only_dg_witnesses.size() < 5) acc.only_dg_witnesses.emplace_back(s.begin(), s.end());
    }
    if (unl && !tight) {
      ++acc.only_unlinked;
      if (acc.only_unlinked_witnesses.size() < 5) acc.only_unlinked_witnesses.emplace_back(s.begin(), s.end());
    }
  });
  r.n = n;
  r.equal = r.only_dg == 0 && r.only_unlinked == 0;
  return r;
}

}  // namespace knotperm
