#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folbound/polynomial.hpp"
#include "folbound/rational.hpp"

namespace folbound {

/// Power series in t known through t^N (the truncation order). Coefficients
/// beyond N are unknown; results of arithmetic carry the smallest truncation
/// order of their operands.
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(0) {}
  /// Zero series known through t^N.
  explicit TruncSeries(int truncation);
  TruncSeries(std::vector<Rat> coeffs, int truncation);

  static TruncSeries monomial(const Rat& c, int exponent, int truncation);
  static TruncSeries constant(const Rat& c, int truncation) { return monomial(c, 0, truncation); }

  int truncation() const { return n_; }
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  /// Order of the series when it is determined by the known coefficients;
  /// nothing if every known coefficient vanishes.
  std::optional<int> known_order() const;
  bool vanishes_through_truncation() const { return !known_order().has_value(); }

  /// Keep coefficients through t^N (N must not exceed the current truncation).
  TruncSeries truncated(int truncation) const;
  /// Multiply by t^k (known through N + k).
  TruncSeries shift_up(int k) const;
  /// Divide by t^k; the first k coefficients must vanish.
  TruncSeries shift_down(int k) const;
  TruncSeries derivative() const;
  /// Multiplicative inverse of a series with nonzero constant term.
  TruncSeries inverse() const;

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rat& s);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rat& s) { return a *= s; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries operator-() const { return *this * Rat(-1); }

  /// a / b where ord(b) = m and the first m coefficients of a vanish.
  static TruncSeries divide(const TruncSeries& a, const TruncSeries& b);

  bool operator==(const TruncSeries&) const = default;

  std::string str() const;

 private:
  void trim_to_truncation();
  std::vector<Rat> c_;  // size n_ + 1
  int n_;
};

/// sqrt(1 + t) through t^N, normalized with value 1 at t = 0.
TruncSeries series_sqrt1p(int truncation);

/// p(x(t), y(t)); the result is known through the smaller truncation order.
TruncSeries substitute(const BiPoly& p, const TruncSeries& x, const TruncSeries& y);

}  // namespace folbound
