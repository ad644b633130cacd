#pragma once

/**
 * @file series.hpp
 * @brief Exact bivariate power series and the unlink generating functions.
 *
 * A BivariateSeries is truncated at x^N; each x-coefficient is a polynomial
 * in u with arbitrary-precision integer coefficients. Nothing here touches
 * floating point.
 *
 *   S(x) = x + x S + S^2                      (large Schroeder numbers)
 *   F(u,x) = 1 + u x F S(x F)                 (unlinked derangements)
 *   u x^2 G^3 + (2u^2x^2 - u x^2 - 3u x + 1) G^2 + (3u x - 2) G + 1 = 0
 *                                             (unlinks, fixed points as components)
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knotperm/error.hpp"

namespace knotperm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Polynomial in u, lowest degree first, no trailing zeros.
using UPoly = std::vector<BigInt>;

namespace detail {

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void add_product(UPoly& acc, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
  }
}

/// q with q * d == r exactly, or throws NoSeriesRoot.
inline UPoly exact_divide(const UPoly& r, const UPoly& d) {
  if (d.empty()) throw Error(Errc::NoSeriesRoot, "division by the zero polynomial");
  if (r.empty()) return {};
  std::size_t s = 0;
  while (d[s] == 0) ++s;
  UPoly rem = r;
  UPoly q;
  for (std::size_t k = 0; k < s; ++k)
    if (k < rem.size() && rem[k] != 0) throw Error(Errc::NoSeriesRoot, "inexact division");
  const std::size_t qlen = rem.size() > s ? rem.size() - s : 0;
  q.assign(qlen, 0);
  for (std::size_t k = 0; k < qlen; ++k) {
    const BigInt& lead = rem[k + s];
    if (lead % d[s] != 0) throw Error(Errc::NoSeriesRoot, "inexact division");
    q[k] = lead / d[s];
    for (std::size_t j = s; j < d.size() && k + j < rem.size(); ++j) rem[k + j] -= q[k] * d[j];
  }
  trim(rem);
  if (!rem.empty()) throw Error(Errc::NoSeriesRoot, "inexact division");
  trim(q);
  return q;
}

}  // namespace detail

class BivariateSeries {
 public:
  explicit BivariateSeries(int degree = 0) : terms_(static_cast<std::size_t>(degree) + 1) {}

  static BivariateSeries one(int degree) {
    BivariateSeries s(degree);
    s.terms_[0] = {1};
    return s;
  }

  /// c * u^k * x^n, truncated at @p degree.
  static BivariateSeries monomial(int degree, long long c, int k, int n) {
    BivariateSeries s(degree);
    if (n <= degree) s.add(k, n, c);
    return s;
  }

  int degree() const noexcept { return static_cast<int>(terms_.size()) - 1; }

  /// [u^k x^n]; zero outside the stored range.
  BigInt coeff(int k, int n) const {
    if (n < 0 || n > degree() || k < 0) return 0;
    const auto& p = terms_[static_cast<std::size_t>(n)];
    return static_cast<std::size_t>(k) < p.size() ? p[static_cast<std::size_t>(k)] : BigInt(0);
  }

  const UPoly& x_coeff(int n) const { return terms_.at(static_cast<std::size_t>(n)); }

  void set_x_coeff(int n, UPoly p) {
    detail::trim(p);
    terms_.at(static_cast<std::size_t>(n)) = std::move(p);
  }

  void add(int k, int n, const BigInt& c) {
    auto& p = terms_.at(static_cast<std::size_t>(n));
    if (p.size() <= static_cast<std::size_t>(k)) p.resize(static_cast<std::size_t>(k) + 1);
    p[static_cast<std::size_t>(k)] += c;
    detail::trim(p);
  }

  /// [x^n] evaluated at u = 1.
  BigInt at_u1(int n) const {
    BigInt s = 0;
    if (n < 0 || n > degree()) return s;
    for (const auto& c : terms_[static_cast<std::size_t>(n)]) s += c;
    return s;
  }

  bool is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const UPoly& p) { return p.empty(); });
  }

  BivariateSeries truncated(int degree) const {
    BivariateSeries s(degree);
    for (int n = 0; n <= std::min(degree, this->degree()); ++n) s.terms_[static_cast<std::size_t>(n)] = terms_[static_cast<std::size_t>(n)];
    return s;
  }

  /// Multiplies by u^a x^b.
  BivariateSeries shifted(int a, int b) const {
    BivariateSeries s(degree());
    for (int n = 0; n + b <= degree(); ++n) {
      const auto& p = terms_[static_cast<std::size_t>(n)];
      if (p.empty()) continue;
      UPoly q(static_cast<std::size_t>(a), 0);
      q.insert(q.end(), p.begin(), p.end());
      s.terms_[static_cast<std::size_t>(n + b)] = std::move(q);
    }
    return s;
  }

  BivariateSeries& operator+=(const BivariateSeries& o) {
    for (int n = 0; n <= std::min(degree(), o.degree()); ++n) {
      auto& p = terms_[static_cast<std::size_t>(n)];
      const auto& q = o.terms_[static_cast<std::size_t>(n)];
      if (p.size() < q.size()) p.resize(q.size());
      for (std::size_t k = 0; k < q.size(); ++k) p[k] += q[k];
      detail::trim(p);
    }
    return *this;
  }

  BivariateSeries& operator*=(const BigInt& c) {
    for (auto& p : terms_) {
      for (auto& v : p) v *= c;
      detail::trim(p);
    }
    return *this;
  }

  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator*(BivariateSeries a, const BigInt& c) { return a *= c; }

  /// Product truncated at the smaller of the two degrees.
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    const int deg = std::min(a.degree(), b.degree());
    BivariateSeries s(deg);
    for (int i = 0; i <= deg; ++i) {
      const auto& p = a.terms_[static_cast<std::size_t>(i)];
      if (p.empty()) continue;
      for (int j = 0; i + j <= deg; ++j)
        detail::add_product(s.terms_[static_cast<std::size_t>(i + j)], p, b.terms_[static_cast<std::size_t>(j)]);
    }
    for (auto& p : s.terms_) detail::trim(p);
    return s;
  }

  bool operator==(const BivariateSeries& o) const { return terms_ == o.terms_; }

 private:
  std::vector<UPoly> terms_;
};

/// S_1..S_n (index 0 unused, set to 0).
inline std::vector<BigInt> schroder_numbers(int n) {
  std::vector<BigInt> s(static_cast<std::size_t>(std::max(n, 1)) + 1, 0);
  if (n >= 1) s[1] = 1;
  for (int m = 2; m <= n; ++m) {
    BigInt v = s[static_cast<std::size_t>(m - 1)];
    for (int i = 1; i < m; ++i) v += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(m - i)];
    s[static_cast<std::size_t>(m)] = v;
  }
  return s;
}

inline BigInt schroder(int n) {
  if (n < 1) throw Error(Errc::MalformedInput, "Schroeder numbers start at n = 1");
  return schroder_numbers(n)[static_cast<std::size_t>(n)];
}

/// S(y) for a series y with zero constant term, via Horner.
inline BivariateSeries compose_schroder(const BivariateSeries& y) {
  const int deg = y.degree();
  const auto s = schroder_numbers(std::max(deg, 1));
  BivariateSeries acc(deg);
  for (int k = deg; k >= 1; --k) {
    acc = y * acc;
    acc.add(0, 0, s[static_cast<std::size_t>(k)]);
  }
  return y * acc;
}

/// 1 + (ux - 2) F + (1 - ux - ux^2) F^2 + (ux^2 + u^2x^3) F^3, truncated.
inline BivariateSeries cubic_F_residual(const BivariateSeries& f) {
  const int d = f.degree();
  auto m = [d](long long c, int k, int n) { return BivariateSeries::monomial(d, c, k, n); };
  const auto f2 = f * f;
  const auto f3 = f2 * f;
  return BivariateSeries::one(d) + (m(1, 1, 1) + m(-2, 0, 0)) * f +
         (m(1, 0, 0) + m(-1, 1, 1) + m(-1, 1, 2)) * f2 + (m(1, 1, 2) + m(1, 2, 3)) * f3;
}

/// u x^2 G^3 + (2u^2x^2 - u x^2 - 3u x + 1) G^2 + (3u x - 2) G + 1, truncated.
inline BivariateSeries cubic_G_residual(const BivariateSeries& g) {
  const int d = g.degree();
  auto m = [d](long long c, int k, int n) { return BivariateSeries::monomial(d, c, k, n); };
  const auto g2 = g * g;
  const auto g3 = g2 * g;
  return m(1, 1, 2) * g3 + (m(2, 2, 2) + m(-1, 1, 2) + m(-3, 1, 1) + m(1, 0, 0)) * g2 +
         (m(3, 1, 1) + m(-2, 0, 0)) * g + BivariateSeries::one(d);
}

/// F(u,x) through x^N by iterating F <- 1 + u x F S(x F) to a fixpoint, then
/// checked against the cubic.
inline BivariateSeries series_F(int degree) {
  if (degree < 0) throw Error(Errc::MalformedInput, "negative degree");
  BivariateSeries f = BivariateSeries::one(degree);
  for (int iter = 0;; ++iter) {
    if (iter > degree + 2) throw Error(Errc::InternalInconsistency, "F iteration did not stabilise");
    BivariateSeries next = BivariateSeries::one(degree) + (f * compose_schroder(f.shifted(0, 1))).shifted(1, 1);
    if (next == f) break;
    f = std::move(next);
  }
  if (!cubic_F_residual(f).is_zero())
    throw Error(Errc::InternalInconsistency, "F does not satisfy its cubic");
  return f;
}

/// G(u,x) through x^N, solved one x-degree at a time from the cubic.
///
/// The constant term is a double root, so [x^n] P(G) does not see G_n; G_n
/// first enters [x^{n+1}] P(G), multiplied by [x^1] P'(G). The cubic also has
/// two roots with constant term 1; [x^1] G = u (one fixed point, one
/// component) picks the combinatorial one.
inline BivariateSeries series_G(int degree) {
  if (degree < 0) throw Error(Errc::MalformedInput, "negative degree");
  BivariateSeries g = BivariateSeries::one(degree);
  if (degree >= 1) g.add(1, 1, 1);

  // [x^1] P'(G) with P'(G) = 3u x^2 G^2 + 2(2u^2x^2 - u x^2 - 3u x + 1) G + 3u x - 2.
  // Only G_0 and G_1 contribute.
  UPoly linear;
  {
    const int d = 1;
    BivariateSeries g1 = g.truncated(d);
    auto m = [d](long long c, int k, int n) { return BivariateSeries::monomial(d, c, k, n); };
    BivariateSeries deriv = (m(-6, 1, 1) + m(2, 0, 0)) * g1 + m(3, 1, 1) + m(-2, 0, 0);
    if (!deriv.x_coeff(0).empty()) throw Error(Errc::NoSeriesRoot, "constant term is not a double root");
    linear = deriv.x_coeff(1);
  }

  for (int n = 2; n <= degree; ++n) {
    const BivariateSeries residual = cubic_G_residual(g.truncated(n + 1));
    UPoly r = residual.x_coeff(n + 1);
    for (auto& c : r) c = -c;
    g.set_x_coeff(n, detail::exact_divide(r, linear));
  }
  if (!cubic_G_residual(g).is_zero()) throw Error(Errc::NoSeriesRoot, "G does not satisfy its cubic");
  return g;
}

/// S_{n-1} / (n-1)!, the chance that a uniform n-cycle is unknotted.
inline BigRational unknot_probability(int n) {
  if (n < 2) throw Error(Errc::MalformedInput, "need n >= 2");
  BigInt fact = 1;
  for (int k = 2; k <= n - 1; ++k) fact *= k;
  return BigRational(schroder(n - 1), fact);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const BigRational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace knotperm
