#include "folbound/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "folbound/error.hpp"

namespace folbound {

int Order::value() const {
  if (infinite_) throw Error(ErrorCode::InvalidArgument, "order is infinite");
  return value_;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat UniPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::taylor_shift(const Rat& shift) const {
  if (shift.is_zero() || c_.size() <= 1) return *this;
  // Horner: ((c_n) (t+s) + c_{n-1}) (t+s) + ...
  std::vector<Rat> acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::vector<Rat> next(acc.size() + 1);
    for (size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * shift;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return UniPoly(std::move(acc));
}

Order UniPoly::low_order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return Order::finite(static_cast<int>(i));
  return Order::infinite();
}

Order UniPoly::order_at(const Rat& t0) const { return taylor_shift(t0).low_order(); }

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rat(1) / leading());
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const Rat inv_lead = Rat(1) / b.leading();
  const int db = b.degree();
  for (int d = a.degree(); d >= db; --d) {
    const Rat& top = rem[static_cast<size_t>(d)];
    if (top.is_zero()) continue;
    Rat q = top * inv_lead;
    quo[static_cast<size_t>(d - db)] = q;
    for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(d - db + i)] -= q * b.c_[static_cast<size_t>(i)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << (c_[i].sign() > 0 ? " + " : " - ");
    else if (c_[i].sign() < 0) os << "-";
    Rat mag = c_[i].sign() < 0 ? -c_[i] : c_[i];
    if (i == 0 || mag != Rat(1)) os << mag;
    if (i > 0) {
      if (mag != Rat(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(const Rat& c) {
  if (!c.is_zero()) t_.emplace(Exponent{0, 0}, c);
}

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
  if (i < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  BiPoly p;
  if (!c.is_zero()) p.t_.emplace(Exponent{i, j}, c);
  return p;
}

BiPoly BiPoly::from_terms(const std::vector<std::tuple<int, int, Rat>>& terms) {
  BiPoly p;
  for (const auto& [i, j, c] : terms) {
    if (i < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    p.add_term({i, j}, c);
  }
  return p;
}

void BiPoly::add_term(const Exponent& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rat(0) : it->second;
}

Order BiPoly::order() const {
  if (t_.empty()) return Order::infinite();
  int best = t_.begin()->first.first + t_.begin()->first.second;
  for (const auto& [e, c] : t_) best = std::min(best, e.first + e.second);
  return Order::finite(best);
}

int BiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : t_) best = std::max(best, e.first + e.second);
  return best;
}

int BiPoly::degree_x() const {
  int best = -1;
  for (const auto& [e, c] : t_) best = std::max(best, e.first);
  return best;
}

int BiPoly::degree_y() const {
  int best = -1;
  for (const auto& [e, c] : t_) best = std::max(best, e.second);
  return best;
}

Order BiPoly::x_adic_order() const {
  if (t_.empty()) return Order::infinite();
  int best = t_.begin()->first.first;
  for (const auto& [e, c] : t_) best = std::min(best, e.first);
  return Order::finite(best);
}

Order BiPoly::y_adic_order() const {
  if (t_.empty()) return Order::infinite();
  int best = t_.begin()->first.second;
  for (const auto& [e, c] : t_) best = std::min(best, e.second);
  return Order::finite(best);
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [e, c] : t_)
    if (e.first > 0) r.add_term({e.first - 1, e.second}, c * Rat(e.first));
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [e, c] : t_)
    if (e.second > 0) r.add_term({e.first, e.second - 1}, c * Rat(e.second));
  return r;
}

BiPoly BiPoly::compose(const BiPoly& X, const BiPoly& Y) const {
  if (t_.empty()) return {};
  std::vector<BiPoly> xp{BiPoly(Rat(1))}, yp{BiPoly(Rat(1))};
  const int dxmax = degree_x(), dymax = degree_y();
  for (int i = 1; i <= dxmax; ++i) xp.push_back(xp.back() * X);
  for (int j = 1; j <= dymax; ++j) yp.push_back(yp.back() * Y);
  // Terms grouped by y-exponent.
  std::map<int, BiPoly> by_y;
  for (const auto& [e, c] : t_) by_y[e.second] += xp[static_cast<size_t>(e.first)] * c;
  BiPoly r;
  for (const auto& [j, px] : by_y) r += px * yp[static_cast<size_t>(j)];
  return r;
}

BiPoly BiPoly::divide_monomial(int a, int b) const {
  BiPoly r;
  for (const auto& [e, c] : t_) {
    if (e.first < a || e.second < b)
      throw Error(ErrorCode::InternalInconsistency, "monomial division is not exact");
    r.t_.emplace(Exponent{e.first - a, e.second - b}, c);
  }
  return r;
}

UniPoly BiPoly::restrict_x0() const {
  std::vector<Rat> v(static_cast<size_t>(std::max(degree_y(), 0)) + 1);
  for (const auto& [e, c] : t_)
    if (e.first == 0) v[static_cast<size_t>(e.second)] += c;
  return UniPoly(std::move(v));
}

UniPoly BiPoly::restrict_y0() const {
  std::vector<Rat> v(static_cast<size_t>(std::max(degree_x(), 0)) + 1);
  for (const auto& [e, c] : t_)
    if (e.second == 0) v[static_cast<size_t>(e.first)] += c;
  return UniPoly(std::move(v));
}

BiPoly BiPoly::shift_y(const Rat& shift) const {
  if (shift.is_zero()) return *this;
  return compose(x(), y() + BiPoly(shift));
}

BiPoly BiPoly::shift_x(const Rat& shift) const {
  if (shift.is_zero()) return *this;
  return compose(x() + BiPoly(shift), y());
}

Rat BiPoly::eval(const Rat& xv, const Rat& yv) const {
  Rat acc(0);
  for (const auto& [e, c] : t_)
    acc += c * pow(xv, static_cast<unsigned>(e.first)) * pow(yv, static_cast<unsigned>(e.second));
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result(Rat(1));
  BiPoly b = base;
  while (exponent) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1u;
    if (exponent) b = b * b;
  }
  return result;
}

namespace {

// Lex order with y dominant: (j, i).
BiPoly::TermMap::const_iterator lex_leading(const BiPoly::TermMap& t) {
  auto best = t.begin();
  for (auto it = t.begin(); it != t.end(); ++it) {
    if (it->first.second > best->first.second ||
        (it->first.second == best->first.second && it->first.first > best->first.first))
      best = it;
  }
  return best;
}

// Polynomial in y with coefficients in Q[x]; index = y-degree.
using YPoly = std::vector<UniPoly>;

YPoly to_ypoly(const BiPoly& p) {
  YPoly r(static_cast<size_t>(std::max(p.degree_y(), 0)) + 1);
  std::vector<std::vector<Rat>> dense(r.size());
  for (const auto& [e, c] : p.terms()) {
    auto& row = dense[static_cast<size_t>(e.second)];
    if (row.size() <= static_cast<size_t>(e.first)) row.resize(static_cast<size_t>(e.first) + 1);
    row[static_cast<size_t>(e.first)] = c;
  }
  for (size_t j = 0; j < r.size(); ++j) r[j] = UniPoly(std::move(dense[j]));
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

BiPoly from_ypoly(const YPoly& p) {
  std::vector<std::tuple<int, int, Rat>> terms;
  for (size_t j = 0; j < p.size(); ++j)
    for (int i = 0; i <= p[j].degree(); ++i)
      if (!p[j].coeff(i).is_zero()) terms.emplace_back(i, static_cast<int>(j), p[j].coeff(i));
  return BiPoly::from_terms(terms);
}

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly content(const YPoly& p) {
  UniPoly g;
  for (const auto& c : p) g = UniPoly::gcd(g, c);
  return g;
}

YPoly primitive(const YPoly& p) {
  UniPoly c = content(p);
  if (c.is_zero()) return p;
  YPoly r;
  r.reserve(p.size());
  for (const auto& q : p) r.push_back(UniPoly::divmod(q, c).first);
  // Scale so the leading coefficient of the leading x-polynomial is 1.
  Rat s = Rat(1) / r.back().leading();
  for (auto& q : r) q *= s;
  return r;
}

// Pseudo-remainder of a by b in Q[x][y].
YPoly prem(YPoly a, const YPoly& b) {
  const UniPoly& lc = b.back();
  const size_t db = b.size() - 1;
  while (a.size() >= b.size() && !a.empty()) {
    const size_t shift = a.size() - 1 - db;
    UniPoly la = a.back();
    for (auto& q : a) q = q * lc;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  BiPoly rem = a;
  BiPoly quo;
  const auto lb = lex_leading(b.t_);
  const Exponent eb = lb->first;
  const Rat inv = Rat(1) / lb->second;
  while (!rem.is_zero()) {
    const auto lr = lex_leading(rem.t_);
    const Exponent er = lr->first;
    if (er.first < eb.first || er.second < eb.second) return std::nullopt;
    BiPoly q = monomial(lr->second * inv, er.first - eb.first, er.second - eb.second);
    quo += q;
    rem -= q * b;
  }
  return quo;
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return {};
  return *this * (Rat(1) / lex_leading(t_)->second);
}

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  YPoly pa = to_ypoly(a), pb = to_ypoly(b);
  UniPoly cont = UniPoly::gcd(content(pa), content(pb));
  pa = primitive(pa);
  pb = primitive(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (pb.size() > 1) {
    YPoly r = prem(pa, pb);
    pa = std::move(pb);
    if (r.empty()) {
      pb.clear();
      break;
    }
    pb = primitive(r);
  }
  YPoly g;
  if (pb.empty()) {
    g = pa;  // pa divides the previous remainder exactly
  } else {
    g = YPoly{UniPoly::constant(1)};  // pb is a nonzero element of Q[x] and primitive, i.e. a unit
  }
  for (auto& q : g) q = q * cont;
  return from_ypoly(g).normalized();
}

std::string BiPoly::str(char xv, char yv) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat mag = c.sign() < 0 ? -c : c;
    bool unit = mag == Rat(1);
    bool constant = e.first == 0 && e.second == 0;
    if (!unit || constant) os << mag;
    bool need_star = !unit;
    auto var = [&](char v, int k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << v;
      if (k > 1) os << "^" << k;
      need_star = true;
    };
    var(xv, e.first);
    var(yv, e.second);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.str(); }

}  // namespace folbound
