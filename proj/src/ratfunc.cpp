#include "abtor/ratfunc.hpp"

namespace abtor {

RationalFunction::RationalFunction(QPoly num, QPoly den) {
  if (den.is_zero()) fail(Errc::DivisionByZero, "rational function over 0");
  if (num.is_zero()) {
    den_ = QPoly(Rational(1));
    return;
  }
  QPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  Rational lead = den.leading().inverse();
  num_ = num.scaled(lead);
  den_ = den.scaled(lead);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a,
                           const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a,
                           const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in Q(t)");
  return {den_, num_};
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.degree() == 0) return num_.str(var);
  std::string n = num_.str(var);
  if (num_.degree() > 0 && num_.coeffs().size() > 1) {
    int terms = 0;
    for (const auto& c : num_.coeffs()) terms += c.is_zero() ? 0 : 1;
    if (terms > 1) n = "(" + n + ")";
  }
  return n + "/(" + den_.str(var) + ")";
}

}  // namespace abtor
