#pragma once

#include <concepts>
#include <string>

#include "abtor/cyclotomic.hpp"
#include "abtor/ratfunc.hpp"

namespace abtor {

/// An exact commutative field: a factory object for 0 and 1 plus an element
/// type closed under the field operations. Equality is exact.
template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { a + a } -> std::same_as<typename F::value_type>;
  { a - a } -> std::same_as<typename F::value_type>;
  { a * a } -> std::same_as<typename F::value_type>;
  { a / a } -> std::same_as<typename F::value_type>;
  { -a } -> std::same_as<typename F::value_type>;
  { a.inverse() } -> std::same_as<typename F::value_type>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

struct RationalField {
  using value_type = Rational;
  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
};

struct RationalFunctionField {
  using value_type = RationalFunction;
  RationalFunction zero() const { return RationalFunction(); }
  RationalFunction one() const { return RationalFunction(Rational(1)); }
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<RationalFunctionField>);
static_assert(ExactField<CyclotomicField>);

}  // namespace abtor
