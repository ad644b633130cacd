// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "knotperm/enumerate.hpp"
#include "knotperm/series.hpp"
#include "knotperm/verify.hpp"

using namespace knotperm;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(KNOTPERM_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string cli_out(std::vector<std::string> args) {
  std::ostringstream out, err;
  cli::run(std::move(args), out, err);
  return out.str();
}

Outcome ac1() {
  Outcome o;
  const std::vector<int> expected{1, 2, 6, 22, 90, 394, 1806, 8558, 41586};  // n = 2..10
  EnumerationConfig single;
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 10; ++n)
    o.expect(count_unknotted_cycles(n, single) == expected[static_cast<std::size_t>(n - 2)], "count differs at n = " + std::to_string(n));
  auto t1 = std::chrono::steady_clock::now();
  count_unknotted_cycles(10, single);
  const double one = seconds_since(t1);
  EnumerationConfig eight;
  eight.threads = 8;
  auto t2 = std::chrono::steady_clock::now();
  o.expect(count_unknotted_cycles(10, eight) == 41586, "8-thread count differs");
  const double many = seconds_since(t2);
  o.expect(one <= 60.0, "single-threaded n = 10 too slow");
  o.expect(many <= 10.0, "8-thread n = 10 too slow");
  std::ostringstream s;
  s << "n=10: " << one << " s (1 thread), " << many << " s (8 threads); total " << seconds_since(t0) << " s";
  if (o.pass) o.note = s.str();
  return o;
}

Outcome ac2() {
  Outcome o;
  const std::vector<int> totals{0, 1, 2, 8, 32, 143, 674, 3316, 16832};
  const std::vector<std::vector<int>> strata{
      {0, 1, 2, 6, 22, 90, 394, 1806, 8558},
      {0, 0, 0, 2, 10, 48, 238, 1216, 6354},
      {0, 0, 0, 0, 0, 5, 42, 280, 1752},
      {0, 0, 0, 0, 0, 0, 0, 14, 168},
  };
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 9; ++n) {
    const CountRow row = count_unlinked(n, true, false);
    const auto i = static_cast<std::size_t>(n - 1);
    o.expect(row.total == totals[i], "total differs at n = " + std::to_string(n));
    for (int k = 1; k <= 4; ++k)
      o.expect(row.stratum(k) == strata[static_cast<std::size_t>(k - 1)][i],
               "stratum k = " + std::to_string(k) + " differs at n = " + std::to_string(n));
  }
  const double t = seconds_since(t0);
  o.expect(t <= 120.0, "n <= 9 took longer than 120 s");
  if (o.pass) o.note = "n=1..9 in " + std::to_string(t) + " s";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto f20 = series_F(20);
  o.expect(cubic_F_residual(f20).is_zero(), "cubic fails through degree 20");
  for (int n = 1; n <= 9; ++n) {
    const CountRow row = count_unlinked(n, true, false);
    for (int k = 0; k <= 20; ++k)
      o.expect(f20.coeff(k, n) == row.stratum(k), "[u^" + std::to_string(k) + " x^" + std::to_string(n) + "] differs");
  }
  if (o.pass) o.note = "all [u^k x^n], n <= 9; cubic identity mod x^21";
  return o;
}

Outcome ac4() {
  Outcome o;
  const std::vector<int> expected{1, 2, 6, 23, 103, 511, 2719, 15205, 88197};
  const auto g = series_G(9);
  o.expect(cubic_G_residual(g).is_zero(), "G fails its cubic");
  for (int n = 1; n <= 9; ++n)
    o.expect(g.at_u1(n) == expected[static_cast<std::size_t>(n - 1)], "[x^" + std::to_string(n) + "] differs");
  for (int n = 1; n <= 8; ++n)
    o.expect(g.at_u1(n) == count_unlinked(n, false, true).total, "brute force differs at n = " + std::to_string(n));
  if (o.pass) o.note = "n=1..9 series, n<=8 brute force";
  return o;
}

Outcome ac5() {
  Outcome o;
  const std::vector<int> catalan{1, 2, 5, 14, 42};
  const auto f = series_F(10);
  for (int n = 1; n <= 5; ++n) {
    const BigInt counted = count_unlinked(2 * n, true, false).stratum(n);
    o.expect(counted == catalan[static_cast<std::size_t>(n - 1)], "enumeration differs at n = " + std::to_string(n));
    o.expect(f.coeff(n, 2 * n) == counted, "series differs at n = " + std::to_string(n));
  }
  if (o.pass) o.note = "1, 2, 5, 14, 42";
  return o;
}

Outcome from_check(const CheckResult& r) {
  Outcome o;
  o.pass = r.passed;
  o.note = (r.passed ? std::to_string(r.cases) + " cases" : r.detail);
  return o;
}

Outcome ac6() { return from_check(check_bijection(7, 20)); }
Outcome ac7() { return from_check(check_topology(8)); }

Outcome ac8() {
  Outcome o;
  std::vector<DgReport> reports;
  check_dg(7, &reports);
  std::ostringstream s;
  bool all_equal = true;
  for (const auto& r : reports) {
    all_equal = all_equal && r.equal;
    if (!r.equal) {
      s << "finding at n=" << r.n << ": only_dg=" << r.only_dg << " only_unlinked=" << r.only_unlinked;
      for (const auto& w : r.only_dg_witnesses) s << " dg:" << cli::join(w);
      for (const auto& w : r.only_unlinked_witnesses) s << " unl:" << cli::join(w);
      s << "; ";
    }
  }
  o.note = all_equal ? "sets equal for n = 1..7" : s.str();
  return o;
}

Outcome ac9() {
  Outcome o;
  o.expect(cli_out({"classify", "864275193"}) == golden("classify_864275193.txt"), "classify 864275193 differs from golden");
  o.expect(cli_out({"tree", "to-cycle", "(+(+(. .) -(. .)) -(. .))", "--trace"}) == golden("tree_trace.txt"),
           "tree trace differs from golden");
  o.expect(cli_out({"classify", "732541698"}) == golden("classify_732541698.txt"), "classify 732541698 differs from golden");
  const std::string trace = golden("tree_trace.txt");
  for (const char* state : {"2,3,1\n", "2,3,4,1\n", "2,4,5,3,1\n", "2,4,6,3,1,5\n"})
    o.expect(trace.find(state) != std::string::npos, std::string("trace misses ") + state);
  o.expect(golden("classify_864275193.txt").find("status: unknot\n") != std::string::npos, "golden lacks unknot");
  o.expect(golden("classify_864275193.txt").find("crossings: 3\n") != std::string::npos, "golden lacks 3 crossings");
  o.expect(golden("classify_732541698.txt").find("status: unlink(4)\n") != std::string::npos, "golden lacks unlink(4)");
  if (o.pass) o.note = "3 golden files match";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 unknotted cycles = S_{n-1}, n=2..10", ac1},
      {"AC2 unlinked derangements and strata, n=1..9", ac2},
      {"AC3 F series = enumeration, cubic to degree 20", ac3},
      {"AC4 G series sequence and brute force", ac4},
      {"AC5 Catalan diagonal", ac5},
      {"AC6 tree bijection suite, <= 7 nodes", ac6},
      {"AC7 topology lemma suite, derangements n <= 8", ac7},
      {"AC8 Diaconis-Graham experiment, n <= 7", ac8},
      {"AC9 worked examples against golden files", ac9},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << "  (" << o.note << ")" << std::endl;
  }
  return failed ? 1 : 0;
}
