#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "folbound/rational.hpp"

namespace folbound {

/// Vanishing order that may be infinite (order of the zero polynomial/series).
class Order {
 public:
  static Order finite(int value) { return Order(value, false); }
  static Order infinite() { return Order(0, true); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  int value() const;  // throws on infinity

  friend bool operator==(const Order&, const Order&) = default;
  friend std::strong_ordering operator<=>(const Order& a, const Order& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  Order(int v, bool inf) : value_(v), infinite_(inf) {}
  int value_;
  bool infinite_;
};

/// Dense univariate polynomial over Q, coefficients from low to high degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  static UniPoly constant(const Rat& c) { return UniPoly({c}); }
  static UniPoly monomial(const Rat& c, int degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[static_cast<size_t>(i)] : Rat(0); }
  Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& t) const;
  UniPoly derivative() const;
  /// p(t + shift)
  UniPoly taylor_shift(const Rat& shift) const;
  /// Multiplicity of t0 as a root (0 when p(t0) != 0); infinite for the zero polynomial.
  Order order_at(const Rat& t0) const;
  /// Lowest index with nonzero coefficient.
  Order low_order() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rat& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const { return *this * Rat(-1); }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division; throws on a zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic gcd (zero when both are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);

  std::string str(char var = 't') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Sparse bivariate polynomial over Q. Exponent pair (i, j) stands for x^i y^j;
/// the same type is used for chart coordinates (u, v).
class BiPoly {
 public:
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Rat>;

  BiPoly() = default;
  BiPoly(const Rat& c);  // NOLINT(google-explicit-constructor): constants
  static BiPoly monomial(const Rat& c, int i, int j);
  static BiPoly x() { return monomial(1, 1, 0); }
  static BiPoly y() { return monomial(1, 0, 1); }
  static BiPoly from_terms(const std::vector<std::tuple<int, int, Rat>>& terms);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exponent{0, 0}); }
  const TermMap& terms() const { return t_; }
  Rat coeff(int i, int j) const;
  std::size_t size() const { return t_.size(); }

  /// Minimal total degree of the support (the vanishing order at the origin).
  Order order() const;
  int total_degree() const;  // -1 for zero
  int degree_x() const;
  int degree_y() const;
  /// Largest k with x^k (resp. y^k) dividing the polynomial; infinite for zero.
  Order x_adic_order() const;
  Order y_adic_order() const;

  BiPoly dx() const;
  BiPoly dy() const;
  /// p(X, Y) for polynomial substitutions X, Y.
  BiPoly compose(const BiPoly& X, const BiPoly& Y) const;
  /// Divide by x^a y^b; throws unless exact.
  BiPoly divide_monomial(int a, int b) const;
  /// p(0, y) as a polynomial in y.
  UniPoly restrict_x0() const;
  /// p(x, 0) as a polynomial in x.
  UniPoly restrict_y0() const;
  /// p(x, y + shift)
  BiPoly shift_y(const Rat& shift) const;
  /// p(x + shift, y)
  BiPoly shift_x(const Rat& shift) const;
  Rat eval(const Rat& x, const Rat& y) const;

  /// Exact quotient a / b, or nothing if b does not divide a.
  static std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);
  /// Greatest common divisor, normalized so its leading term (lex, y first) has coefficient 1.
  static BiPoly gcd(const BiPoly& a, const BiPoly& b);
  /// Multiply by a nonzero scalar so the lex-leading coefficient is 1.
  BiPoly normalized() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rat& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rat& s) { return a *= s; }
  friend BiPoly operator*(const Rat& s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const { return *this * Rat(-1); }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string str(char xv = 'x', char yv = 'y') const;

 private:
  void add_term(const Exponent& e, const Rat& c);
  TermMap t_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);
std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace folbound
