#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abtor/rational.hpp"

namespace abtor {

using Exponent = std::vector<int>;

/// Sparse Laurent polynomial with integer coefficients in a fixed number of
/// commuting variables, i.e. an element of Z[Z^b]. No stored coefficient is
/// zero; every exponent vector has length `var_count()`.
class MultiLaurent {
public:
  using TermMap = std::map<Exponent, BigInt>;

  explicit MultiLaurent(std::size_t vars = 0) : vars_(vars) {}

  static MultiLaurent constant(std::size_t vars, const BigInt& c);
  static MultiLaurent monomial(std::size_t vars, Exponent e,
                               const BigInt& c = 1);
  /// The variable with index `v` (0-based), raised to `power`.
  static MultiLaurent variable(std::size_t vars, std::size_t v, int power = 1);

  std::size_t var_count() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Single term with coefficient +-1, i.e. a unit of Z[Z^b].
  bool is_unit() const;
  BigInt coeff(const Exponent& e) const;
  BigInt constant_coeff() const;

  void add_term(const Exponent& e, const BigInt& c);

  MultiLaurent operator-() const;
  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) {
    return a += b;
  }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) {
    return a -= b;
  }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
  MultiLaurent& operator*=(const MultiLaurent& o) { return *this = *this * o; }
  friend bool operator==(const MultiLaurent& a, const MultiLaurent& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiLaurent scaled(const BigInt& s) const;
  /// Multiplication by the monomial x^shift.
  MultiLaurent shifted(const Exponent& shift) const;
  /// Nonnegative powers for any element, negative powers only for units.
  MultiLaurent pow(int k) const;

  /// Componentwise min / max exponents over the support (zeros if empty).
  Exponent min_exponents() const;
  Exponent max_exponents() const;
  int min_degree(std::size_t v) const;
  int max_degree(std::size_t v) const;
  bool involves(std::size_t v) const;
  /// Coefficient of x_v^k, with the v-exponent cleared.
  MultiLaurent coeff_in(std::size_t v, int k) const;
  /// Substitutes x_v -> 1.
  MultiLaurent at_one(std::size_t v) const;
  /// The map x_i -> x_i^{-1} on every variable.
  MultiLaurent bar() const;
  /// Reindexes variables: variable i goes to position `target[i]` in a
  /// ring with `new_vars` variables.
  MultiLaurent embedded(std::size_t new_vars,
                        const std::vector<std::size_t>& target) const;
  BigInt integer_content() const;
  BigInt augmentation() const;

  /// Canonical text: graded-lex descending terms, variables `t` (one
  /// variable) or `t1..tb`, e.g. `t^2 - t + 1` or `2*t1*t2^-1 - 3`.
  std::string str() const;
  std::string str(const std::vector<std::string>& names) const;

private:
  void check_arity(const MultiLaurent& o) const;
  std::size_t vars_;
  TermMap terms_;
};

std::vector<std::string> default_variable_names(std::size_t vars);

/// Graded-lex comparison: total degree first, then lexicographic.
bool graded_lex_less(const Exponent& a, const Exponent& b);

/// Quotient a / b when it exists in Z[Z^b]; nullopt otherwise.
std::optional<MultiLaurent> divide_exact(const MultiLaurent& a,
                                         const MultiLaurent& b);

/// Element of Z[Z^b] modulo the units +-monomial, stored in normal form:
/// minimum exponent 0 in every variable and a positive coefficient on the
/// graded-lex smallest term. Zero is its own class.
class LaurentUnitClass {
public:
  LaurentUnitClass() = default;
  explicit LaurentUnitClass(const MultiLaurent& f);

  const MultiLaurent& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const;
  friend bool operator==(const LaurentUnitClass& a,
                         const LaurentUnitClass& b) = default;
  std::string str() const { return rep_.str(); }
  std::string str(const std::vector<std::string>& names) const {
    return rep_.str(names);
  }

private:
  MultiLaurent rep_;
};

/// gcd in the UFD Z[Z^b] (content / primitive-part recursion with a
/// primitive pseudo-remainder sequence). gcd(a, 0) is the class of a.
LaurentUnitClass gcd(const MultiLaurent& a, const MultiLaurent& b);

/// True iff b divides a in Z[Z^b].
bool divides(const MultiLaurent& b, const MultiLaurent& a);

}  // namespace abtor
