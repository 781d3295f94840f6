#include "abtor/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace abtor {

int gcd_int(int a, int b) { return std::gcd(a, b); }

int mod(long a, int m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

int mod_inverse(int a, int m) {
  if (m == 1) return 0;
  int r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    int q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return r0 == 1 ? mod(s0, m) : 0;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return count;
}

QPoly cyclotomic_polynomial(int n) {
  if (n < 1) fail(Errc::Unsupported, "cyclotomic polynomial needs n >= 1");
  QPoly p = QPoly::monomial(Rational(1), n) - QPoly(Rational(1));
  for (int d : divisors(n)) {
    if (d == n) break;
    auto [q, r] = divmod(p, cyclotomic_polynomial(d));
    p = q;
  }
  return p;
}

CyclotomicElem::CyclotomicElem(std::shared_ptr<const Context> ctx, QPoly p)
    : ctx_(std::move(ctx)) {
  QPoly red = p % ctx_->phi;
  c_.assign(static_cast<std::size_t>(ctx_->phi.degree()), Rational());
  for (int k = 0; k <= red.degree(); ++k)
    c_[static_cast<std::size_t>(k)] = red.coeff(k);
}

const CyclotomicElem::Context& CyclotomicElem::ctx() const {
  if (!ctx_) fail(Errc::ArityMismatch, "uninitialised cyclotomic element");
  return *ctx_;
}

int CyclotomicElem::conductor() const { return ctx().n; }

QPoly CyclotomicElem::as_poly() const { return QPoly(c_); }

bool CyclotomicElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

static void check_same(const CyclotomicElem& a, const CyclotomicElem& b) {
  if (a.conductor() != b.conductor())
    fail(Errc::ArityMismatch, "cyclotomic conductors differ");
}

CyclotomicElem CyclotomicElem::operator-() const {
  CyclotomicElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CyclotomicElem operator+(const CyclotomicElem& a, const CyclotomicElem& b) {
  check_same(a, b);
  CyclotomicElem r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CyclotomicElem operator-(const CyclotomicElem& a, const CyclotomicElem& b) {
  return a + (-b);
}

CyclotomicElem operator*(const CyclotomicElem& a, const CyclotomicElem& b) {
  check_same(a, b);
  return CyclotomicElem(a.ctx_, a.as_poly() * b.as_poly());
}

CyclotomicElem operator/(const CyclotomicElem& a, const CyclotomicElem& b) {
  return a * b.inverse();
}

bool operator==(const CyclotomicElem& a, const CyclotomicElem& b) {
  return a.conductor() == b.conductor() && a.c_ == b.c_;
}

CyclotomicElem CyclotomicElem::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in Q(zeta)");
  // Phi_n is irreducible, so gcd(a, Phi_n) = 1 and s*a + t*Phi_n = 1.
  auto eg = extended_gcd(as_poly(), ctx().phi);
  return CyclotomicElem(ctx_, eg.s);
}

CyclotomicElem CyclotomicElem::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CyclotomicElem result(ctx_, QPoly(Rational(1)));
  CyclotomicElem base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

CyclotomicElem CyclotomicElem::scaled(const Rational& s) const {
  CyclotomicElem r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::string CyclotomicElem::str(const std::string& var) const {
  return as_poly().str(var);
}

CyclotomicField::CyclotomicField(int n) {
  if (n < 1) fail(Errc::Unsupported, "cyclotomic field needs conductor >= 1");
  ctx_ = std::make_shared<const CyclotomicElem::Context>(
      CyclotomicElem::Context{n, cyclotomic_polynomial(n)});
}

CyclotomicElem CyclotomicField::from_poly(const QPoly& p) const {
  return CyclotomicElem(ctx_, p);
}

CyclotomicElem CyclotomicField::zeta_pow(long k) const {
  return from_poly(QPoly::monomial(Rational(1), mod(k, ctx_->n)));
}

}  // namespace abtor
