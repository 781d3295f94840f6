#pragma once

#include <string>

#include "abtor/qpoly.hpp"

namespace abtor {

/// Element of Q(t): numer/denom in lowest terms with a monic denominator.
class RationalFunction {
public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(QPoly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(QPoly num, QPoly den);

  static RationalFunction t() { return RationalFunction(QPoly::x()); }

  const QPoly& numer() const { return num_; }
  const QPoly& denom() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  friend bool operator==(const RationalFunction& a,
                         const RationalFunction& b) = default;

  RationalFunction inverse() const;
  std::string str(const std::string& var = "t") const;

private:
  QPoly num_, den_;
};

}  // namespace abtor
