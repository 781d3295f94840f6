#include "abtor/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace abtor {

QPoly::QPoly(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(Rational c, int degree) {
  QPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational());
  p.c_.back() = std::move(c);
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational QPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational();
  return c_[static_cast<std::size_t>(k)];
}

Rational QPoly::leading() const { return c_.empty() ? Rational() : c_.back(); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Rational& s) const {
  if (s.is_zero()) return {};
  QPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

Rational QPoly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> c;
  if (k > 0) {
    c.assign(static_cast<std::size_t>(k), Rational());
    c.insert(c.end(), c_.begin(), c_.end());
  } else {
    auto drop = static_cast<std::size_t>(-k);
    for (std::size_t i = 0; i < std::min(drop, c_.size()); ++i)
      if (!c_[i].is_zero())
        fail(Errc::NotDivisible, "negative shift drops nonzero terms");
    if (drop < c_.size()) c.assign(c_.begin() + static_cast<long>(drop), c_.end());
  }
  return QPoly(std::move(c));
}

int QPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return 0;
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational m = c.abs();
    if (k == 0) {
      os << m;
    } else {
      if (m != Rational(1)) os << m << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  QPoly q, r = a;
  Rational lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    QPoly term = QPoly::monomial(r.leading() * lead_inv, k);
    q += term;
    r -= term * b;
  }
  return {q, r};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace abtor
