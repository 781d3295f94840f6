#include "abtor/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace abtor {

MultiLaurent MultiLaurent::constant(std::size_t vars, const BigInt& c) {
  MultiLaurent r(vars);
  r.add_term(Exponent(vars, 0), c);
  return r;
}

MultiLaurent MultiLaurent::monomial(std::size_t vars, Exponent e,
                                    const BigInt& c) {
  if (e.size() != vars) fail(Errc::ArityMismatch, "exponent length mismatch");
  MultiLaurent r(vars);
  r.add_term(e, c);
  return r;
}

MultiLaurent MultiLaurent::variable(std::size_t vars, std::size_t v,
                                    int power) {
  if (v >= vars) fail(Errc::ArityMismatch, "variable index out of range");
  Exponent e(vars, 0);
  e[v] = power;
  return monomial(vars, std::move(e));
}

bool MultiLaurent::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool MultiLaurent::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

BigInt MultiLaurent::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiLaurent::constant_coeff() const {
  return coeff(Exponent(vars_, 0));
}

void MultiLaurent::add_term(const Exponent& e, const BigInt& c) {
  if (e.size() != vars_) fail(Errc::ArityMismatch, "exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiLaurent::check_arity(const MultiLaurent& o) const {
  if (vars_ != o.vars_)
    fail(Errc::ArityMismatch, "Laurent polynomials in " +
                                  std::to_string(vars_) + " and " +
                                  std::to_string(o.vars_) + " variables");
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  a.check_arity(b);
  MultiLaurent r(a.vars_);
  Exponent e(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiLaurent MultiLaurent::scaled(const BigInt& s) const {
  MultiLaurent r(vars_);
  if (s == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

MultiLaurent MultiLaurent::shifted(const Exponent& shift) const {
  if (shift.size() != vars_) fail(Errc::ArityMismatch, "shift length mismatch");
  MultiLaurent r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < vars_; ++i) f[i] += shift[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

MultiLaurent MultiLaurent::pow(int k) const {
  if (k < 0) {
    if (!is_unit()) fail(Errc::NotDivisible, "negative power of a non-unit");
    const auto& [e, c] = *terms_.begin();
    Exponent f(vars_);
    for (std::size_t i = 0; i < vars_; ++i) f[i] = -e[i] * (-k);
    BigInt s = (c < 0 && (k % 2 != 0)) ? BigInt(-1) : BigInt(1);
    return monomial(vars_, f, s);
  }
  MultiLaurent result = constant(vars_, 1);
  MultiLaurent base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Exponent MultiLaurent::min_exponents() const {
  Exponent m(vars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < vars_; ++i)
      m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponent MultiLaurent::max_exponents() const {
  Exponent m(vars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < vars_; ++i)
      m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

int MultiLaurent::min_degree(std::size_t v) const { return min_exponents().at(v); }
int MultiLaurent::max_degree(std::size_t v) const { return max_exponents().at(v); }

bool MultiLaurent::involves(std::size_t v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const auto& t) { return t.first[v] != 0; });
}

MultiLaurent MultiLaurent::coeff_in(std::size_t v, int k) const {
  MultiLaurent r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exponent f = e;
    f[v] = 0;
    r.add_term(f, c);
  }
  return r;
}

MultiLaurent MultiLaurent::at_one(std::size_t v) const {
  MultiLaurent r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.at(v) = 0;
    r.add_term(f, c);
  }
  return r;
}

MultiLaurent MultiLaurent::bar() const {
  MultiLaurent r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (auto& x : f) x = -x;
    r.add_term(f, c);
  }
  return r;
}

MultiLaurent MultiLaurent::embedded(
    std::size_t new_vars, const std::vector<std::size_t>& target) const {
  if (target.size() != vars_)
    fail(Errc::ArityMismatch, "embedding map has wrong length");
  MultiLaurent r(new_vars);
  for (const auto& [e, c] : terms_) {
    Exponent f(new_vars, 0);
    for (std::size_t i = 0; i < vars_; ++i) f.at(target[i]) += e[i];
    r.add_term(f, c);
  }
  return r;
}

BigInt MultiLaurent::integer_content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt MultiLaurent::augmentation() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::vector<std::string> default_variable_names(std::size_t vars) {
  if (vars == 1) return {"t"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

bool graded_lex_less(const Exponent& a, const Exponent& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

std::string MultiLaurent::str() const { return str(default_variable_names(vars_)); }

std::string MultiLaurent::str(const std::vector<std::string>& names) const {
  if (names.size() != vars_) fail(Errc::ArityMismatch, "wrong number of names");
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    return graded_lex_less(y->first, x->first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigInt m = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << m;
    } else {
      if (m != 1) os << m << "*";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

std::optional<MultiLaurent> divide_exact(const MultiLaurent& a,
                                         const MultiLaurent& b) {
  if (a.var_count() != b.var_count())
    fail(Errc::ArityMismatch, "division of Laurent polynomials of different arity");
  if (b.is_zero()) fail(Errc::DivisionByZero, "Laurent division by zero");
  const std::size_t n = a.var_count();
  MultiLaurent q(n);
  if (a.is_zero()) return q;

  // In a domain the exponent range of a quotient in each variable is forced,
  // which bounds the (lex-decreasing) sequence of quotient terms.
  Exponent amin = a.min_exponents(), amax = a.max_exponents();
  Exponent bmin = b.min_exponents(), bmax = b.max_exponents();
  Exponent qmin(n), qmax(n);
  for (std::size_t i = 0; i < n; ++i) {
    qmin[i] = amin[i] - bmin[i];
    qmax[i] = amax[i] - bmax[i];
    if (qmin[i] > qmax[i]) return std::nullopt;
  }

  const auto& [blead_e, blead_c] = *b.terms().rbegin();
  MultiLaurent r = a;
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = re[i] - blead_e[i];
      if (e[i] < qmin[i] || e[i] > qmax[i]) return std::nullopt;
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), blead_c.get_mpz_t())) return std::nullopt;
    BigInt c = rc / blead_c;
    q.add_term(e, c);
    r -= b.shifted(e).scaled(c);
  }
  return q;
}

bool divides(const MultiLaurent& b, const MultiLaurent& a) {
  if (b.is_zero()) return a.is_zero();
  return divide_exact(a, b).has_value();
}

LaurentUnitClass::LaurentUnitClass(const MultiLaurent& f) : rep_(f.var_count()) {
  if (f.is_zero()) return;
  Exponent m = f.min_exponents();
  for (auto& x : m) x = -x;
  MultiLaurent g = f.shifted(m);
  const Exponent* smallest = nullptr;
  BigInt sc;
  for (const auto& [e, c] : g.terms()) {
    if (!smallest || graded_lex_less(e, *smallest)) {
      smallest = &e;
      sc = c;
    }
  }
  rep_ = sc < 0 ? -g : g;
}

bool LaurentUnitClass::is_one() const {
  return rep_.is_constant() && rep_.constant_coeff() == 1;
}

namespace {

MultiLaurent poly_gcd(const MultiLaurent& a, const MultiLaurent& b);

int highest_variable(const MultiLaurent& a, const MultiLaurent& b) {
  for (std::size_t v = a.var_count(); v-- > 0;)
    if (a.involves(v) || b.involves(v)) return static_cast<int>(v);
  return -1;
}

MultiLaurent exact(const MultiLaurent& a, const MultiLaurent& b) {
  auto q = divide_exact(a, b);
  if (!q) fail(Errc::NotDivisible, "internal: inexact division in gcd");
  return *q;
}

MultiLaurent content_in(const MultiLaurent& p, std::size_t v) {
  MultiLaurent g(p.var_count());
  for (int k = p.min_degree(v); k <= p.max_degree(v); ++k) {
    MultiLaurent c = p.coeff_in(v, k);
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_unit()) break;
  }
  return g;
}

MultiLaurent primitive_part(const MultiLaurent& p, std::size_t v) {
  if (p.is_zero()) return p;
  return exact(p, content_in(p, v));
}

MultiLaurent pseudo_remainder(const MultiLaurent& a, const MultiLaurent& b,
                              std::size_t v) {
  const std::size_t n = a.var_count();
  const int db = b.max_degree(v);
  MultiLaurent lb = b.coeff_in(v, db);
  MultiLaurent r = a;
  while (!r.is_zero() && r.max_degree(v) >= db) {
    int dr = r.max_degree(v);
    MultiLaurent lr = r.coeff_in(v, dr) * MultiLaurent::variable(n, v, dr - db);
    r = r * lb - lr * b;
  }
  return r;
}

// Inputs have nonnegative exponents; the result is a gcd up to sign.
MultiLaurent poly_gcd(const MultiLaurent& a, const MultiLaurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_unit() || b.is_unit()) return MultiLaurent::constant(a.var_count(), 1);
  int hv = highest_variable(a, b);
  if (hv < 0) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.constant_coeff().get_mpz_t(),
            b.constant_coeff().get_mpz_t());
    return MultiLaurent::constant(a.var_count(), g);
  }
  auto v = static_cast<std::size_t>(hv);
  if (!a.involves(v)) return poly_gcd(a, content_in(b, v));
  if (!b.involves(v)) return poly_gcd(content_in(a, v), b);

  MultiLaurent ca = content_in(a, v), cb = content_in(b, v);
  MultiLaurent c = poly_gcd(ca, cb);
  MultiLaurent x = exact(a, ca), y = exact(b, cb);
  if (x.max_degree(v) < y.max_degree(v)) std::swap(x, y);
  MultiLaurent g(a.var_count());
  while (true) {
    MultiLaurent r = pseudo_remainder(x, y, v);
    if (r.is_zero()) {
      g = y;
      break;
    }
    if (!r.involves(v)) {
      g = MultiLaurent::constant(a.var_count(), 1);
      break;
    }
    x = std::move(y);
    y = primitive_part(r, v);
  }
  return c * primitive_part(g, v);
}

MultiLaurent to_polynomial(const MultiLaurent& f) {
  Exponent m = f.min_exponents();
  for (auto& x : m) x = -x;
  return f.shifted(m);
}

}  // namespace

LaurentUnitClass gcd(const MultiLaurent& a, const MultiLaurent& b) {
  if (a.var_count() != b.var_count())
    fail(Errc::ArityMismatch, "gcd of Laurent polynomials of different arity");
  return LaurentUnitClass(poly_gcd(to_polynomial(a), to_polynomial(b)));
}

}  // namespace abtor
