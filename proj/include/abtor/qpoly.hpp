#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abtor/rational.hpp"

namespace abtor {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
class QPoly {
public:
  QPoly() = default;
  QPoly(Rational c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly monomial(Rational c, int degree);
  /// The polynomial x.
  static QPoly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  QPoly scaled(const Rational& s) const;
  QPoly monic() const;
  Rational eval(const Rational& at) const;

  /// Multiplies by x^k, or divides when k < 0 (low terms must vanish then).
  QPoly shifted(int k) const;
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

struct ExtendedGcd {
  QPoly g, s, t;  // s*a + t*b = g, g monic
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

}  // namespace abtor
