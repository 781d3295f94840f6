#include "abtor/chain_complex.hpp"

namespace abtor {

namespace {

void check_one_variable(const LaurentChainComplex& d) {
  if (d.dims.empty() || d.boundaries.size() + 1 != d.dims.size())
    fail(Errc::ArityMismatch, "need exactly one boundary matrix per positive degree");
  for (std::size_t i = 0; i < d.boundaries.size(); ++i) {
    const auto& m = d.boundaries[i];
    if (m.rows() != d.dims[i] || m.cols() != d.dims[i + 1])
      fail(Errc::ArityMismatch, "boundary " + std::to_string(i + 1) + " has the wrong shape");
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c).var_count() != 1) fail(Errc::ArityMismatch, "entries must lie in Z[t^+-1]");
  }
}

// f * t^shift as a polynomial, where shift clears every negative exponent.
QPoly as_qpoly(const MultiLaurent& f, int shift) {
  QPoly p;
  for (const auto& [e, c] : f.terms()) p += QPoly::monomial(Rational(c), e[0] + shift);
  return p;
}

// The matrix scaled by a power of the unit t so that it lies in Q[t].
Matrix<QPoly> cleared(const Matrix<MultiLaurent>& m) {
  int low = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) low = std::min(low, m(r, c).min_degree(0));
  return m.map([&](const MultiLaurent& f) { return as_qpoly(f, -low); });
}

RationalFunction to_rational_function(const MultiLaurent& f) {
  if (f.is_zero()) return RationalFunction();
  int low = std::min(0, f.min_degree(0));
  return RationalFunction(as_qpoly(f, -low), QPoly::monomial(Rational(1), -low));
}

}  // namespace

LaurentUnitClass unit_class_of(const QPoly& p) {
  MultiLaurent f(1);
  if (p.is_zero()) return LaurentUnitClass(f);
  BigInt den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  for (int k = 0; k <= p.degree(); ++k) {
    Rational c = p.coeff(k) * Rational(den);
    if (!c.is_zero()) f.add_term({k}, c.numerator());
  }
  BigInt content = f.integer_content();
  MultiLaurent prim(1);
  for (const auto& [e, c] : f.terms()) prim.add_term(e, c / content);
  return LaurentUnitClass(prim);
}

TorsionFraction homological_torsion_oracle(const LaurentChainComplex& d) {
  check_one_variable(d);
  const std::size_t m = d.dims.size() - 1;
  // ranks[i] and the product of nonzero invariant factors of d_i.
  std::vector<std::size_t> ranks(m + 2, 0);
  std::vector<QPoly> orders(m + 2, QPoly(Rational(1)));
  for (std::size_t i = 1; i <= m; ++i) {
    for (const auto& f : invariant_factors(cleared(d.boundaries[i - 1]))) {
      if (f.is_zero()) continue;
      ++ranks[i];
      // t is a unit of Q[t^+-1]; drop it from the order.
      orders[i] *= f.shifted(-f.valuation());
    }
  }
  for (std::size_t i = 0; i <= m; ++i)
    if (ranks[i] + ranks[i + 1] != d.dims[i])
      fail(Errc::RankObstruction, "H_" + std::to_string(i) + " has positive rank over Q[t^+-1]");
  // ord H_i is the torsion of coker d_{i+1}.
  QPoly num(Rational(1)), den(Rational(1));
  for (std::size_t i = 0; i <= m; ++i) (i % 2 == 1 ? num : den) *= orders[i + 1];
  QPoly g = gcd(num, den);
  return {unit_class_of(divmod(num, g).first), unit_class_of(divmod(den, g).first)};
}

BasedChainComplex<RationalFunctionField> localize(const LaurentChainComplex& d) {
  check_one_variable(d);
  std::vector<Matrix<RationalFunction>> bs;
  for (const auto& b : d.boundaries) bs.push_back(b.map(to_rational_function));
  return BasedChainComplex<RationalFunctionField>(RationalFunctionField{}, d.dims, std::move(bs));
}

TorsionFraction fraction_class(const RationalFunction& f) {
  return {unit_class_of(f.numer()), unit_class_of(f.denom())};
}

}  // namespace abtor
