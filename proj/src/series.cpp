#include "folbound/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "folbound/error.hpp"

namespace folbound {

TruncSeries::TruncSeries(int truncation) : c_(static_cast<size_t>(std::max(truncation, 0)) + 1), n_(truncation) {
  if (truncation < 0) throw Error(ErrorCode::InsufficientPrecision, "negative truncation order");
}

TruncSeries::TruncSeries(std::vector<Rat> coeffs, int truncation) : c_(std::move(coeffs)), n_(truncation) {
  if (truncation < 0) throw Error(ErrorCode::InsufficientPrecision, "negative truncation order");
  trim_to_truncation();
}

void TruncSeries::trim_to_truncation() { c_.resize(static_cast<size_t>(n_) + 1); }

TruncSeries TruncSeries::monomial(const Rat& c, int exponent, int truncation) {
  TruncSeries s(truncation);
  if (exponent >= 0 && exponent <= truncation) s.c_[static_cast<size_t>(exponent)] = c;
  return s;
}

Rat TruncSeries::coeff(int i) const {
  if (i < 0) return Rat(0);
  if (i > n_) throw Error(ErrorCode::InsufficientPrecision, "coefficient t^" + std::to_string(i) + " beyond truncation " + std::to_string(n_));
  return c_[static_cast<size_t>(i)];
}

std::optional<int> TruncSeries::known_order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return std::nullopt;
}

TruncSeries TruncSeries::truncated(int truncation) const {
  if (truncation > n_) throw Error(ErrorCode::InsufficientPrecision, "cannot extend a truncated series");
  return TruncSeries(std::vector<Rat>(c_.begin(), c_.begin() + truncation + 1), truncation);
}

TruncSeries TruncSeries::shift_up(int k) const {
  std::vector<Rat> v(static_cast<size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return TruncSeries(std::move(v), n_ + k);
}

TruncSeries TruncSeries::shift_down(int k) const {
  if (k > n_ + 1) throw Error(ErrorCode::InsufficientPrecision, "shift beyond truncation");
  for (int i = 0; i < k; ++i)
    if (!c_[static_cast<size_t>(i)].is_zero()) throw Error(ErrorCode::InvalidArgument, "shift_down of a series with a low-order term");
  if (n_ - k < 0) throw Error(ErrorCode::InsufficientPrecision, "series exhausted by shift_down");
  return TruncSeries(std::vector<Rat>(c_.begin() + k, c_.end()), n_ - k);
}

TruncSeries TruncSeries::derivative() const {
  if (n_ == 0) throw Error(ErrorCode::InsufficientPrecision, "derivative of a series known only through t^0");
  std::vector<Rat> v(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i) v[static_cast<size_t>(i - 1)] = c_[static_cast<size_t>(i)] * Rat(i);
  return TruncSeries(std::move(v), n_ - 1);
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0].is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-unit series");
  std::vector<Rat> inv(c_.size());
  const Rat a0inv = Rat(1) / c_[0];
  inv[0] = a0inv;
  for (size_t k = 1; k < c_.size(); ++k) {
    Rat acc(0);
    for (size_t i = 1; i <= k; ++i)
      if (!c_[i].is_zero()) acc += c_[i] * inv[k - i];
    inv[k] = -acc * a0inv;
  }
  return TruncSeries(std::move(inv), n_);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  n_ = std::min(n_, o.n_);
  trim_to_truncation();
  for (int i = 0; i <= n_; ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  n_ = std::min(n_, o.n_);
  trim_to_truncation();
  for (int i = 0; i <= n_; ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rat& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.n_, b.n_);
  std::vector<Rat> r(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Rat& ai = a.c_[static_cast<size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      const Rat& bj = b.c_[static_cast<size_t>(j)];
      if (!bj.is_zero()) r[static_cast<size_t>(i + j)] += ai * bj;
    }
  }
  return TruncSeries(std::move(r), n);
}

TruncSeries TruncSeries::divide(const TruncSeries& a, const TruncSeries& b) {
  auto m = b.known_order();
  if (!m) throw Error(ErrorCode::InsufficientPrecision, "divisor vanishes through its truncation order");
  const int n = std::min(a.n_, b.n_);
  if (*m > n) throw Error(ErrorCode::InsufficientPrecision, "divisor order exceeds known precision");
  TruncSeries num = a.truncated(n).shift_down(*m);
  TruncSeries den = b.truncated(n).shift_down(*m);
  return num * den.inverse();
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  UniPoly p(c_);
  os << p.str() << " + O(t^" << (n_ + 1) << ")";
  return os.str();
}

TruncSeries series_sqrt1p(int truncation) {
  if (truncation < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation order");
  // Binomial series: c_k = c_{k-1} * (1/2 - (k-1)) / k
  std::vector<Rat> c(static_cast<size_t>(truncation) + 1);
  c[0] = Rat(1);
  for (int k = 1; k <= truncation; ++k)
    c[static_cast<size_t>(k)] = c[static_cast<size_t>(k - 1)] * (Rat(1, 2) - Rat(k - 1)) / Rat(k);
  return TruncSeries(std::move(c), truncation);
}

TruncSeries substitute(const BiPoly& p, const TruncSeries& x, const TruncSeries& y) {
  const int n = std::min(x.truncation(), y.truncation());
  TruncSeries xs = x.truncated(n), ys = y.truncated(n);
  TruncSeries acc(n);
  if (p.is_zero()) return acc;
  std::vector<TruncSeries> xp{TruncSeries::constant(1, n)};
  std::vector<TruncSeries> yp{TruncSeries::constant(1, n)};
  for (int i = 1; i <= p.degree_x(); ++i) xp.push_back(xp.back() * xs);
  for (int j = 1; j <= p.degree_y(); ++j) yp.push_back(yp.back() * ys);
  std::map<int, TruncSeries> by_y;
  for (const auto& [e, c] : p.terms()) {
    auto [it, inserted] = by_y.try_emplace(e.second, n);
    it->second += xp[static_cast<size_t>(e.first)] * c;
  }
  for (const auto& [j, sx] : by_y) acc += sx * yp[static_cast<size_t>(j)];
  return acc;
}

}  // namespace folbound
