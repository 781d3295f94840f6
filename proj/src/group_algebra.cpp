#include "abtor/group_algebra.hpp"

#include <sstream>

namespace abtor {

CyclicGroupAlgebraElem::CyclicGroupAlgebraElem(int p) {
  if (p < 1) fail(Errc::Unsupported, "group algebra of Z_p needs p >= 1");
  c_.assign(static_cast<std::size_t>(p), Rational());
}

CyclicGroupAlgebraElem::CyclicGroupAlgebraElem(int p, std::vector<Rational> coeffs)
    : c_(std::move(coeffs)) {
  if (p < 1 || c_.size() != static_cast<std::size_t>(p))
    fail(Errc::ArityMismatch, "group algebra element needs exactly p coefficients");
}

CyclicGroupAlgebraElem CyclicGroupAlgebraElem::group_element(int p, long k) {
  CyclicGroupAlgebraElem e(p);
  e.c_[static_cast<std::size_t>(mod(k, p))] = Rational(1);
  return e;
}

CyclicGroupAlgebraElem CyclicGroupAlgebraElem::scalar(int p, const Rational& c) {
  CyclicGroupAlgebraElem e(p);
  e.c_[0] = c;
  return e;
}

CyclicGroupAlgebraElem CyclicGroupAlgebraElem::norm_element(int p) {
  return CyclicGroupAlgebraElem(p, std::vector<Rational>(static_cast<std::size_t>(p), Rational(1)));
}

static void check_same(const CyclicGroupAlgebraElem& a, const CyclicGroupAlgebraElem& b) {
  if (a.modulus() != b.modulus()) fail(Errc::ArityMismatch, "group algebras differ");
}

CyclicGroupAlgebraElem CyclicGroupAlgebraElem::operator-() const {
  CyclicGroupAlgebraElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CyclicGroupAlgebraElem operator+(const CyclicGroupAlgebraElem& a,
                                 const CyclicGroupAlgebraElem& b) {
  check_same(a, b);
  CyclicGroupAlgebraElem r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CyclicGroupAlgebraElem operator-(const CyclicGroupAlgebraElem& a,
                                 const CyclicGroupAlgebraElem& b) {
  return a + (-b);
}

CyclicGroupAlgebraElem operator*(const CyclicGroupAlgebraElem& a,
                                 const CyclicGroupAlgebraElem& b) {
  check_same(a, b);
  const std::size_t p = a.c_.size();
  CyclicGroupAlgebraElem r(static_cast<int>(p));
  for (std::size_t i = 0; i < p; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[(i + j) % p] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

CyclicGroupAlgebraElem CyclicGroupAlgebraElem::scaled(const Rational& s) const {
  CyclicGroupAlgebraElem r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

CyclicGroupAlgebraElem CyclicGroupAlgebraElem::rotated(long k) const {
  const int p = modulus();
  CyclicGroupAlgebraElem r(p);
  for (int i = 0; i < p; ++i) r.c_[static_cast<std::size_t>(mod(i + k, p))] = c_[static_cast<std::size_t>(i)];
  return r;
}

Rational CyclicGroupAlgebraElem::augmentation() const {
  Rational s;
  for (const auto& c : c_) s += c;
  return s;
}

bool CyclicGroupAlgebraElem::is_integral() const {
  for (const auto& c : c_)
    if (!c.is_integer()) return false;
  return true;
}

std::string CyclicGroupAlgebraElem::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < modulus(); ++k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
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
  return first ? "0" : os.str();
}

CyclotomicProjection::CyclotomicProjection(int p, int d) : p_(p), field_(d) {
  if (d < 1 || p % d != 0) fail(Errc::ArityMismatch, "projection needs d | p");
}

CyclotomicElem CyclotomicProjection::operator()(const CyclicGroupAlgebraElem& x) const {
  if (x.modulus() != p_) fail(Errc::ArityMismatch, "element of the wrong group algebra");
  CyclotomicElem acc = field_.zero();
  for (int i = 0; i < p_; ++i)
    if (!x[i].is_zero()) acc = acc + field_.zeta_pow(i).scaled(x[i]);
  return acc;
}

std::vector<CyclotomicProjection> split_cyclic_group_algebra(int p) {
  if (p < 1) fail(Errc::Unsupported, "group algebra of Z_p needs p >= 1");
  std::vector<CyclotomicProjection> out;
  for (int d : divisors(p)) out.emplace_back(p, d);
  return out;
}

}  // namespace abtor
