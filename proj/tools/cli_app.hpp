#pragma once

// The knotperm command line. run() takes the arguments without the program
// name and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 negative verdict or failed check, 2 usage, parse
// or cap errors.

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expected_sequences.hpp"
#include "knotperm/diagram.hpp"
#include "knotperm/enumerate.hpp"
#include "knotperm/error.hpp"
#include "knotperm/permutation.hpp"
#include "knotperm/seifert.hpp"
#include "knotperm/series.hpp"
#include "knotperm/signed_tree.hpp"
#include "knotperm/unknot.hpp"
#include "knotperm/verify.hpp"
#include "render.hpp"

namespace knotperm::cli {

using nlohmann::json;

inline constexpr int kBijectionNodeLimit = 7;

struct Range {
  int lo = 0;
  int hi = 0;
};

/// "7" or "2..9".
inline Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(Errc::MalformedInput, "bad range '" + text + "'");
    return std::stoi(s);
  };
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw Error(Errc::MalformedInput, "empty range '" + text + "'");
  return r;
}

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

struct Classification {
  Permutation perm;
  Verdict verdict;
  DiagramStats stats;
};

inline Classification classify(const Permutation& p) {
  Verdict v = is_full_cycle(p) ? decide_unknot(p) : is_unlinked(p, true);
  return {p, std::move(v), diagram_stats(p)};
}

inline std::string status_text(const Verdict& v) {
  if (v.status == Status::Unlink) return "unlink(" + std::to_string(v.components) + ")";
  return std::string(to_string(v.status));
}

inline json classification_json(const Classification& c) {
  json j;
  j["input"] = c.perm.to_string();
  j["n"] = c.perm.size();
  j["status"] = std::string(to_string(c.verdict.status));
  j["components"] = c.verdict.components;
  j["crossings"] = c.stats.crossings;
  j["ur_indices"] = c.stats.ur_indices;
  j["writhe"] = c.stats.writhe;
  if (c.stats.tb) j["tb"] = *c.stats.tb;
  if (c.verdict.tree) j["tree"] = c.verdict.tree->to_string();
  if (c.verdict.crossing) {
    const auto& w = *c.verdict.crossing;
    j["witness"] = {{"crossing", {w.crossing.horizontal, w.crossing.vertical}},
                    {"components",
                     {CycleDecomposition::cycle_to_string(w.component_a), CycleDecomposition::cycle_to_string(w.component_b)}}};
  } else if (c.verdict.knotted_component) {
    j["witness"] = {{"knotted_component", CycleDecomposition::cycle_to_string(*c.verdict.knotted_component)}};
  }
  return j;
}

inline std::string classification_text(const Classification& c) {
  std::ostringstream o;
  o << "input: " << c.perm.to_string() << '\n'
    << "n: " << c.perm.size() << '\n'
    << "status: " << status_text(c.verdict) << '\n'
    << "components: " << c.verdict.components << '\n'
    << "crossings: " << c.stats.crossings << '\n'
    << "ur_indices: " << join(c.stats.ur_indices) << '\n'
    << "writhe: " << c.stats.writhe << '\n'
    << "seifert_circles: " << c.stats.seifert_circle_count << '\n';
  if (c.stats.tb) o << "tb: " << *c.stats.tb << '\n';
  if (c.verdict.tree) o << "tree: " << c.verdict.tree->to_string() << '\n';
  if (c.verdict.crossing) {
    const auto& w = *c.verdict.crossing;
    o << "witness: crossing (" << w.crossing.horizontal << ',' << w.crossing.vertical << ") between "
      << CycleDecomposition::cycle_to_string(w.component_a) << " and "
      << CycleDecomposition::cycle_to_string(w.component_b) << '\n';
  } else if (c.verdict.knotted_component) {
    o << "witness: knotted component " << CycleDecomposition::cycle_to_string(*c.verdict.knotted_component) << '\n';
  }
  return o.str();
}

inline std::string trace_text(const SignedTree& t) {
  std::ostringstream o;
  for (const TreeStep& s : tree_to_cycle_trace(t, t.preorder())) {
    std::string label = s.slot == 0 ? "start" : std::string(1, sign_char(s.sign)) + " at " + std::to_string(s.slot);
    label.resize(std::max<std::size_t>(label.size(), 8), ' ');
    o << label << ' ' << s.cycle.to_string() << '\n';
  }
  return o.str();
}

namespace detail {

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::InternalInconsistency:
    case Errc::OddCrossingCount:
    case Errc::NoSeriesRoot:
      return 1;
    default:
      return 2;
  }
}

struct CheckLog {
  std::ostream& out;
  bool ok = true;
  void expect(bool good, const std::string& what) {
    if (!good) {
      ok = false;
      out << "mismatch: " << what << '\n';
    }
  }
};

template <std::size_t N>
std::optional<BigInt> reference(const std::array<std::uint64_t, N>& seq, int n) {
  if (n < 1 || n > static_cast<int>(N)) return std::nullopt;
  return BigInt(seq[static_cast<std::size_t>(n - 1)]);
}

}  // namespace detail

inline int cmd_count(const std::string& target, const Range& range, bool by_components, bool check,
                     const EnumerationConfig& config, std::ostream& out, std::ostream& err) {
  detail::CheckLog log{err};
  if (target == "unknotted-cycles") {
    if (range.lo < 2) throw Error(Errc::MalformedInput, "cycles need n >= 2");
    check_cap(range.hi, config.max_cycle_n, "cycle");
    out << "n\tunknotted\n";
    for (int n = range.lo; n <= range.hi; ++n) {
      const BigInt c = count_unknotted_cycles(n, config);
      out << n << '\t' << c << '\n';
      if (!check) continue;
      log.expect(c == schroder(n - 1), "n = " + std::to_string(n) + " differs from S_{n-1}");
      if (auto r = detail::reference(expected::unlinked_k1, n))
        log.expect(c == *r, "n = " + std::to_string(n) + " differs from the reference sequence");
    }
  } else if (target == "unlinked") {
    check_cap(range.hi, config.max_permutation_n, "derangement");
    CountTable table;
    for (int n = range.lo; n <= range.hi; ++n) table.rows.push_back(count_unlinked(n, by_components, false, config));
    out << table.to_text(by_components);
    if (check) {
      const auto f = series_F(range.hi);
      log.expect(cubic_F_residual(f).is_zero(), "F fails its cubic");
      const std::array<const std::array<std::uint64_t, 10>*, 4> strata{&expected::unlinked_k1, &expected::unlinked_k2,
                                                                      &expected::unlinked_k3, &expected::unlinked_k4};
      for (const CountRow& row : table.rows) {
        const std::string at = "n = " + std::to_string(row.n);
        log.expect(row.total == f.at_u1(row.n), at + " total differs from the series");
        if (auto r = detail::reference(expected::unlinked_total, row.n))
          log.expect(row.total == *r, at + " total differs from the reference sequence");
        if (!by_components) continue;
        for (int k = 1; k <= row.n; ++k) {
          log.expect(row.stratum(k) == f.coeff(k, row.n), at + " k = " + std::to_string(k) + " differs from the series");
          if (k <= 4)
            if (auto r = detail::reference(*strata[static_cast<std::size_t>(k - 1)], row.n))
              log.expect(row.stratum(k) == *r, at + " k = " + std::to_string(k) + " differs from the reference sequence");
        }
      }
    }
  } else if (target == "unlinked-with-fixed") {
    check_cap(range.hi, config.max_permutation_n, "permutation");
    CountTable table;
    for (int n = range.lo; n <= range.hi; ++n) table.rows.push_back(count_unlinked(n, by_components, true, config));
    out << table.to_text(by_components);
    if (check) {
      const auto g = series_G(range.hi);
      for (const CountRow& row : table.rows) {
        const std::string at = "n = " + std::to_string(row.n);
        log.expect(row.total == g.at_u1(row.n), at + " differs from the series");
        if (auto r = detail::reference(expected::unlinked_with_fixed, row.n))
          log.expect(row.total == *r, at + " differs from the reference sequence");
      }
    }
  } else {
    err << "unknown count target '" << target << "'\n";
    return 2;
  }
  if (check) err << (log.ok ? "check: ok\n" : "check: FAILED\n");
  return log.ok ? 0 : 1;
}

inline int cmd_verify(int max_n, const EnumerationConfig& config, std::ostream& out) {
  check_cap(max_n, config.max_permutation_n, "verify");
  if (max_n < 1) throw Error(Errc::MalformedInput, "verify needs n >= 1");
  std::vector<CheckResult> results;
  results.push_back(check_bijection(std::min(max_n - 1, kBijectionNodeLimit)));
  results.push_back(check_completeness(std::min(max_n, config.max_cycle_n), config));
  results.push_back(check_topology(max_n, config));
  results.push_back(check_series(max_n, config));
  results.push_back(check_dg(std::min(max_n, config.max_dg_n), nullptr, config));
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [" << r.cases << " cases]";
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
  }
  return all ? 0 : 1;
}

inline void print_dg(const DgReport& r, std::ostream& out) {
  out << "n=" << r.n << ": " << (r.equal ? "equal" : "differ") << "  dg_tight=" << r.dg_tight
      << " unlinked=" << r.unlinked << " only_dg=" << r.only_dg << " only_unlinked=" << r.only_unlinked << '\n';
  for (const auto& w : r.only_dg_witnesses) out << "  only dg-tight: " << join(w) << '\n';
  for (const auto& w : r.only_unlinked_witnesses) out << "  only unlinked: " << join(w) << '\n';
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle diagrams of permutations: unknots, unlinks and their counts", "knotperm"};
  app.require_subcommand(1);
  app.fallthrough();
  EnumerationConfig config = EnumerationConfig::from_environment();
  std::optional<unsigned> threads;
  std::optional<int> max_n;
  app.add_option("--threads", threads, "worker threads for enumeration (env KNOTPERM_THREADS)");
  app.add_option("--max-n", max_n, "enumeration cap (env KNOTPERM_MAX_N)");

  std::string perm_text;
  bool as_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "unknot / unlink verdict and diagram statistics");
  classify_cmd->add_option("permutation", perm_text)->required();
  classify_cmd->add_flag("--json", as_json);

  auto* tree_cmd = app.add_subcommand("tree", "convert between trees and unknotted cycles");
  tree_cmd->require_subcommand(1);
  std::string tree_text;
  bool trace = false;
  auto* to_cycle_cmd = tree_cmd->add_subcommand("to-cycle", "tree -> cycle");
  to_cycle_cmd->add_option("tree", tree_text)->required();
  to_cycle_cmd->add_flag("--trace", trace, "print every insertion step");
  auto* from_cycle_cmd = tree_cmd->add_subcommand("from-cycle", "cycle -> canonical tree");
  from_cycle_cmd->add_option("cycle", perm_text)->required();

  std::string target;
  std::string range_text;
  bool by_components = false;
  bool check = false;
  auto* count_cmd = app.add_subcommand("count", "exhaustive counts");
  count_cmd->add_option("target", target)
      ->required()
      ->check(CLI::IsMember({"unknotted-cycles", "unlinked", "unlinked-with-fixed"}));
  count_cmd->add_option("range", range_text, "n or lo..hi")->required();
  count_cmd->add_flag("--by-components", by_components);
  count_cmd->add_flag("--check", check, "compare with the series and reference sequences");

  bool svg = false;
  bool ascii = false;
  bool seifert = false;
  std::string out_file;
  RenderSpec spec;
  auto* render_cmd = app.add_subcommand("render", "draw the cycle diagram");
  render_cmd->add_option("permutation", perm_text)->required();
  auto* svg_flag = render_cmd->add_flag("--svg", svg);
  render_cmd->add_flag("--ascii", ascii)->excludes(svg_flag);
  render_cmd->add_flag("--seifert", seifert, "overlay Seifert circles (svg)");
  render_cmd->add_option("--out", out_file, "write to FILE instead of stdout");
  render_cmd->add_option("--cell-size", spec.cell_size, "pixels per lattice unit (svg, >= 4)");

  int verify_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites up to n");
  verify_cmd->add_option("max-n", verify_n)->required();

  auto* dg_cmd = app.add_subcommand("dg-experiment", "compare DG-tight permutations with unlinks");
  dg_cmd->add_option("range", range_text, "n or lo..hi")->required();

  auto* prob_cmd = app.add_subcommand("prob-unknot", "exact probability S_{n-1}/(n-1)!");
  prob_cmd->add_option("range", range_text, "n or lo..hi")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (threads) config.threads = std::max(1u, *threads);
  if (max_n) config.max_cycle_n = config.max_permutation_n = *max_n;

  try {
    if (classify_cmd->parsed()) {
      const Classification c = classify(parse_permutation(perm_text));
      out << (as_json ? classification_json(c).dump() + "\n" : classification_text(c));
      return 0;
    }
    if (to_cycle_cmd->parsed()) {
      const SignedTree t = parse_tree(tree_text);
      if (trace) out << trace_text(t);
      else out << tree_to_cycle(t).to_string() << '\n';
      return 0;
    }
    if (from_cycle_cmd->parsed()) {
      const Verdict v = decide_unknot(parse_permutation(perm_text));
      if (v.status != Status::Unknot) {
        err << "knotted\n";
        return 1;
      }
      out << v.tree->to_string() << '\n';
      return 0;
    }
    if (count_cmd->parsed())
      return cmd_count(target, parse_range(range_text), by_components, check, config, out, err);
    if (render_cmd->parsed()) {
      const Permutation p = parse_permutation(perm_text);
      spec.show_seifert = seifert;
      if (svg && spec.cell_size < 4) {
        err << "cell size must be at least 4\n";
        return 2;
      }
      const std::string doc = svg ? render_svg(p, spec) : render_ascii(p);
      if (out_file.empty()) {
        out << doc;
      } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
          err << "cannot write " << out_file << '\n';
          return 2;
        }
        f << doc;
      }
      return 0;
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_n, config, out);
    if (dg_cmd->parsed()) {
      const Range r = parse_range(range_text);
      check_cap(r.hi, config.max_dg_n, "Diaconis-Graham");
      for (int n = std::max(1, r.lo); n <= r.hi; ++n) print_dg(dg_experiment(n, config), out);
      return 0;
    }
    if (prob_cmd->parsed()) {
      const Range r = parse_range(range_text);
      for (int n = std::max(2, r.lo); n <= r.hi; ++n) out << n << '\t' << to_string(unknot_probability(n)) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return detail::exit_code_for(e);
  }
  return 2;
}

}  // namespace knotperm::cli
