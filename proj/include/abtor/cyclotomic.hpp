#pragma once

#include <memory>
#include <string>
#include <vector>

#include "abtor/qpoly.hpp"

namespace abtor {

/// n-th cyclotomic polynomial, built by dividing x^n - 1 by every
/// Phi_d with d a proper divisor of n.
QPoly cyclotomic_polynomial(int n);

int euler_phi(int n);
std::vector<int> divisors(int n);
int gcd_int(int a, int b);
/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
int mod_inverse(int a, int m);
int mod(long a, int m);

class CyclotomicField;

/// Element of Q(zeta_n), stored as a polynomial in zeta of degree < phi(n).
class CyclotomicElem {
public:
  CyclotomicElem() = default;

  int conductor() const;
  /// Exactly phi(n) coefficients, low degree first.
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  CyclotomicElem operator-() const;
  friend CyclotomicElem operator+(const CyclotomicElem& a,
                                  const CyclotomicElem& b);
  friend CyclotomicElem operator-(const CyclotomicElem& a,
                                  const CyclotomicElem& b);
  friend CyclotomicElem operator*(const CyclotomicElem& a,
                                  const CyclotomicElem& b);
  friend CyclotomicElem operator/(const CyclotomicElem& a,
                                  const CyclotomicElem& b);
  friend bool operator==(const CyclotomicElem& a, const CyclotomicElem& b);

  CyclotomicElem inverse() const;
  CyclotomicElem pow(long k) const;
  CyclotomicElem scaled(const Rational& s) const;

  std::string str(const std::string& var = "z") const;

private:
  friend class CyclotomicField;
  struct Context {
    int n;
    QPoly phi;
  };
  CyclotomicElem(std::shared_ptr<const Context> ctx, QPoly p);
  QPoly as_poly() const;
  const Context& ctx() const;

  std::shared_ptr<const Context> ctx_;
  std::vector<Rational> c_;
};

/// The field Q(zeta_n). Elements share the field's immutable context.
class CyclotomicField {
public:
  using value_type = CyclotomicElem;

  explicit CyclotomicField(int n);

  int conductor() const { return ctx_->n; }
  int dimension() const { return ctx_->phi.degree(); }
  const QPoly& modulus() const { return ctx_->phi; }

  CyclotomicElem zero() const { return from_poly(QPoly()); }
  CyclotomicElem one() const { return from_poly(QPoly(Rational(1))); }
  CyclotomicElem from_rational(const Rational& r) const {
    return from_poly(QPoly(r));
  }
  /// zeta_n^k for any integer k.
  CyclotomicElem zeta_pow(long k) const;
  CyclotomicElem from_poly(const QPoly& p) const;

private:
  std::shared_ptr<const CyclotomicElem::Context> ctx_;
};

}  // namespace abtor
