#include "abtor/lens.hpp"

#include <algorithm>
#include <stdexcept>

#include "abtor/error.hpp"

namespace abtor {

LensSpace::LensSpace(int p, int q) : p_(p) {
  if (p < 2) fail(Errc::Unsupported, "lens spaces are handled for p >= 2 only");
  q_ = mod(q, p);
  if (gcd_int(q_, p) != 1)
    fail(Errc::InvalidArgument, "q = " + std::to_string(q) + " is not a unit mod " + std::to_string(p));
  r_ = mod_inverse(q_, p);
}

std::string LensSpace::str() const {
  return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

CyclotomicElem canonical_orbit_member(const CyclotomicElem& v, int step, bool with_sign) {
  CyclotomicField k(v.conductor());
  const int n = v.conductor();
  CyclotomicElem best = v;
  bool first = true;
  for (int u = 0; u < n; ++u) {
    CyclotomicElem w = k.zeta_pow(static_cast<long>(step) * u) * v;
    for (int s = 0; s < (with_sign ? 2 : 1); ++s) {
      if (s == 1) w = -w;
      if (first || lex_less(w.coeffs(), best.coeffs())) best = w;
      first = false;
    }
  }
  return best;
}

TorsionOrbit lens_torsion(const LensSpace& l, int j) {
  const int p = l.p();
  j = mod(j, p);
  if (j == 0) fail(Errc::InvalidArgument, "the trivial character has no torsion");
  CyclotomicField k(p);
  auto den = (k.zeta_pow(j) - k.one()) * (k.zeta_pow(static_cast<long>(j) * l.r()) - k.one());
  TorsionOrbit out;
  out.p = p;
  out.character = j;
  out.value = den.inverse();
  out.canonical = canonical_orbit_member(out.value, j, false);
  return out;
}

CyclicGroupAlgebraElem sawtooth(int p, long a) {
  CyclicGroupAlgebraElem s(p);
  for (int i = 0; i < p; ++i)
    s = s + CyclicGroupAlgebraElem::group_element(p, a * i).scaled(Rational(2 * i - p + 1, 2 * p));
  return s;
}

CyclicGroupAlgebraElem canonical_unit_multiple(const CyclicGroupAlgebraElem& x, bool with_sign) {
  CyclicGroupAlgebraElem best = x;
  for (int u = 0; u < x.modulus(); ++u) {
    auto w = x.rotated(u);
    if (lex_less(w.coeffs(), best.coeffs())) best = w;
    if (with_sign && lex_less((-w).coeffs(), best.coeffs())) best = -w;
  }
  return best;
}

MaximalTorsion maximal_torsion(const LensSpace& l) {
  auto v = sawtooth(l.p(), 1) * sawtooth(l.p(), l.r());
  return {v, canonical_unit_multiple(v, true)};
}

namespace {

// x(T) -> x(T^k).
CyclicGroupAlgebraElem substitute(const CyclicGroupAlgebraElem& x, int k) {
  const int p = x.modulus();
  std::vector<Rational> c(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) c[static_cast<std::size_t>(mod(static_cast<long>(k) * i, p))] += x[i];
  return CyclicGroupAlgebraElem(p, std::move(c));
}

}  // namespace

bool homeomorphic_by_torsion(const LensSpace& a, const LensSpace& b) {
  if (a.p() != b.p()) return false;
  const int p = a.p();
  auto ta = canonical_unit_multiple(maximal_torsion(a).value, false);
  auto tb = maximal_torsion(b).value;
  for (int k = 1; k < p; ++k) {
    if (gcd_int(k, p) != 1) continue;
    if (canonical_unit_multiple(substitute(tb, k), false) == ta) return true;
  }
  return false;
}

bool homeomorphic_by_arithmetic(const LensSpace& a, const LensSpace& b) {
  return a.p() == b.p() && (b.q() == a.q() || b.q() == a.r());
}

bool homeomorphic(const LensSpace& a, const LensSpace& b) {
  bool by_torsion = homeomorphic_by_torsion(a, b);
  if (by_torsion != homeomorphic_by_arithmetic(a, b))
    throw std::logic_error("torsion and arithmetic classification disagree for " + a.str() + ", " + b.str());
  return by_torsion;
}

bool homotopy_equivalent(const LensSpace& a, const LensSpace& b) {
  if (a.p() != b.p()) return false;
  const int p = a.p();
  const int target = mod(static_cast<long>(a.q()) * b.q(), p);
  for (int x = 1; x < p; ++x)
    if (gcd_int(x, p) == 1 && mod(static_cast<long>(x) * x, p) == target) return true;
  return false;
}

std::pair<Rational, Rational> linking_self(const LensSpace& l) {
  const int p = l.p();
  auto tm1 = CyclicGroupAlgebraElem::group_element(p, 1) - CyclicGroupAlgebraElem::scalar(p, Rational(1));
  auto x = maximal_torsion(l).value * tm1 * tm1;
  // Every coefficient of x is -lambda mod 1.
  Rational c = x[0].mod_one();
  for (int i = 1; i < p; ++i)
    if (x[i].mod_one() != c) throw std::logic_error("tau (T-1)^2 is not congruent to a multiple of Sigma_H");
  Rational lambda = (-c).mod_one();
  std::pair<Rational, Rational> out{lambda, (-lambda).mod_one()};
  Rational closed = Rational(l.q(), p).mod_one();
  if (closed != out.first && closed != out.second)
    throw std::logic_error("self-linking from the torsion differs from q/p");
  return out;
}

bool verify_turaev_linking(const LensSpace& l) {
  const int p = l.p();
  auto tau = maximal_torsion(l).value;
  auto one = CyclicGroupAlgebraElem::scalar(p, Rational(1));
  auto sigma = CyclicGroupAlgebraElem::norm_element(p);
  std::vector<CyclicGroupAlgebraElem> g;
  for (int a = 0; a < p; ++a) g.push_back(CyclicGroupAlgebraElem::group_element(p, a) - one);
  for (int s : {1, -1}) {
    bool ok = true;
    for (int a = 0; a < p && ok; ++a) {
      auto ta = tau * g[static_cast<std::size_t>(a)];
      for (int b = 0; b < p && ok; ++b) {
        Rational lambda(static_cast<long>(s) * a * b * l.q(), p);
        ok = (ta * g[static_cast<std::size_t>(b)] + sigma.scaled(lambda)).is_integral();
      }
    }
    if (ok) return true;
  }
  return false;
}

bool franz_zero_check(int p, int bound) {
  if (p < 3 || p > 13 || bound < 1 || bound > 3)
    fail(Errc::TooLarge, "the search is limited to 3 <= p <= 13 and 1 <= B <= 3");
  // a(j) = a(-j), so one value per pair {j, -j} of units.
  std::vector<int> reps;
  for (int j = 1; j < p; ++j)
    if (gcd_int(j, p) == 1 && j < p - j) reps.push_back(j);

  // (zeta^j - 1)(zeta^-j - 1) raised to 1..B, for each primitive d-th root.
  struct Root {
    CyclotomicField field;
    std::vector<std::vector<CyclotomicElem>> powers;  // [class][e-1]
  };
  std::vector<Root> roots;
  for (int d : divisors(p)) {
    if (d == 1) continue;
    CyclotomicField k(d);
    Root root{k, {}};
    for (int j : reps) {
      auto base = (k.zeta_pow(j) - k.one()) * (k.zeta_pow(-j) - k.one());
      std::vector<CyclotomicElem> pw{base};
      for (int e = 2; e <= bound; ++e) pw.push_back(pw.back() * base);
      root.powers.push_back(std::move(pw));
    }
    roots.push_back(std::move(root));
  }

  const std::size_t classes = reps.size();
  std::vector<int> a(classes, -bound);
  while (true) {
    long sum = 0;
    bool zero = true;
    for (int v : a) {
      sum += v;
      zero = zero && v == 0;
    }
    if (!zero && sum == 0) {
      bool all = true;
      for (const auto& root : roots) {
        auto pos = root.field.one(), neg = root.field.one();
        for (std::size_t c = 0; c < classes; ++c) {
          if (a[c] > 0) pos = pos * root.powers[c][static_cast<std::size_t>(a[c] - 1)];
          if (a[c] < 0) neg = neg * root.powers[c][static_cast<std::size_t>(-a[c] - 1)];
        }
        if (!(pos == neg)) {
          all = false;
          break;
        }
      }
      if (all) return false;
    }
    std::size_t i = 0;
    while (i < classes && a[i] == bound) a[i++] = -bound;
    if (i == classes) break;
    ++a[i];
  }
  return true;
}

}  // namespace abtor
