#pragma once

#include <string>
#include <vector>

#include "abtor/cyclotomic.hpp"

namespace abtor {

/// Element sum_i a_i T^i of Q[Z_p], i.e. a polynomial modulo T^p - 1.
class CyclicGroupAlgebraElem {
public:
  explicit CyclicGroupAlgebraElem(int p);
  CyclicGroupAlgebraElem(int p, std::vector<Rational> coeffs);

  /// T^k for any integer k.
  static CyclicGroupAlgebraElem group_element(int p, long k);
  static CyclicGroupAlgebraElem scalar(int p, const Rational& c);
  /// Sigma_H, the sum of all group elements.
  static CyclicGroupAlgebraElem norm_element(int p);

  int modulus() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  CyclicGroupAlgebraElem operator-() const;
  friend CyclicGroupAlgebraElem operator+(const CyclicGroupAlgebraElem& a,
                                          const CyclicGroupAlgebraElem& b);
  friend CyclicGroupAlgebraElem operator-(const CyclicGroupAlgebraElem& a,
                                          const CyclicGroupAlgebraElem& b);
  friend CyclicGroupAlgebraElem operator*(const CyclicGroupAlgebraElem& a,
                                          const CyclicGroupAlgebraElem& b);
  friend bool operator==(const CyclicGroupAlgebraElem& a,
                         const CyclicGroupAlgebraElem& b) = default;

  CyclicGroupAlgebraElem scaled(const Rational& s) const;
  /// Multiplication by T^k.
  CyclicGroupAlgebraElem rotated(long k) const;
  Rational augmentation() const;
  bool is_integral() const;

  std::string str(const std::string& var = "T") const;

private:
  std::vector<Rational> c_;
};

/// Projection Q[Z_p] -> Q(zeta_d), T -> zeta_d, for a divisor d of p.
class CyclotomicProjection {
public:
  CyclotomicProjection(int p, int d);
  int divisor() const { return field_.conductor(); }
  int dimension() const { return field_.dimension(); }
  const CyclotomicField& field() const { return field_; }
  CyclotomicElem operator()(const CyclicGroupAlgebraElem& x) const;

private:
  int p_;
  CyclotomicField field_;
};

/// Q[Z_p] = prod over d | p of Q(zeta_d), realised by T^p - 1 = prod Phi_d.
std::vector<CyclotomicProjection> split_cyclic_group_algebra(int p);

}  // namespace abtor
