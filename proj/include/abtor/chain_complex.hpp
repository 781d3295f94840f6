#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "abtor/error.hpp"
#include "abtor/field.hpp"
#include "abtor/laurent.hpp"
#include "abtor/matrix.hpp"
#include "abtor/qpoly.hpp"
#include "abtor/smith.hpp"

namespace abtor {

/// 0 -> C_m -> ... -> C_0 -> 0 with standard bases c_i. boundary(i) is the
/// dim C_{i-1} x dim C_i matrix of d_i for 1 <= i <= m.
template <class Field>
class BasedChainComplex {
public:
  using Elem = typename Field::value_type;
  using Mat = Matrix<Elem>;
  using Vec = std::vector<Elem>;

  /// dims[i] = dim C_i; boundaries[i-1] = d_i. Checks shapes and d d = 0.
  BasedChainComplex(Field f, std::vector<std::size_t> dims, std::vector<Mat> boundaries)
      : field_(std::move(f)), dims_(std::move(dims)), d_(std::move(boundaries)) {
    if (dims_.empty()) fail(Errc::InvalidArgument, "a chain complex needs at least C_0");
    if (d_.size() + 1 != dims_.size())
      fail(Errc::ArityMismatch, "need exactly one boundary matrix per positive degree");
    for (std::size_t i = 1; i < dims_.size(); ++i)
      if (d_[i - 1].rows() != dims_[i - 1] || d_[i - 1].cols() != dims_[i])
        fail(Errc::ArityMismatch, "boundary " + std::to_string(i) + " has the wrong shape");
    for (std::size_t i = 2; i < dims_.size(); ++i) {
      auto dd = multiply(d_[i - 2], d_[i - 1], field_.zero());
      for (std::size_t r = 0; r < dd.rows(); ++r)
        for (std::size_t c = 0; c < dd.cols(); ++c)
          if (!dd(r, c).is_zero())
            fail(Errc::InvalidArgument, "boundary composition d_" + std::to_string(i - 1) + " d_" +
                                            std::to_string(i) + " is not zero");
    }
  }

  const Field& field() const { return field_; }
  /// m, the top degree.
  std::size_t length() const { return dims_.size() - 1; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t i) const { return i < dims_.size() ? dims_[i] : 0; }

  /// d_i for any i; zero matrices outside 1..m.
  Mat boundary(std::size_t i) const {
    if (i >= 1 && i < dims_.size()) return d_[i - 1];
    return Mat(i == 0 ? 0 : dim(i - 1), dim(i), field_.zero());
  }

  std::size_t boundary_rank(std::size_t i) const {
    if (i == 0 || i >= dims_.size()) return 0;
    return rank(field_, d_[i - 1]);
  }

  std::size_t homology_dim(std::size_t i) const {
    return dim(i) - boundary_rank(i) - boundary_rank(i + 1);
  }

  bool is_acyclic() const {
    for (std::size_t i = 0; i < dims_.size(); ++i)
      if (homology_dim(i) != 0) return false;
    return true;
  }

private:
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> d_;
};

/// For each degree i, vectors of C_i whose classes form a basis of H_i.
template <class Field>
struct HomologyData {
  std::vector<std::vector<std::vector<typename Field::value_type>>> bases;
};

/// Caller-chosen data for the torsion: b[i] is a basis of B_i = im d_{i+1}
/// (vectors in C_i) and lifts[i] holds vectors of C_i mapped by d_i onto
/// b[i-1] in order.
template <class Field>
struct ChainBases {
  std::vector<std::vector<std::vector<typename Field::value_type>>> b, lifts;
};

namespace detail {

template <class Field>
typename Field::value_type signed_power(const Field& f, const typename Field::value_type& x, bool invert) {
  return invert ? f.one() / x : x;
}

/// Deterministic choice: b_i = d_{i+1} applied to its first independent
/// columns; the lifts of b_{i-1} are the matching standard vectors.
template <class Field>
ChainBases<Field> canonical_bases(const BasedChainComplex<Field>& c) {
  using Elem = typename Field::value_type;
  const auto& f = c.field();
  const std::size_t m = c.length();
  ChainBases<Field> out;
  out.b.resize(m + 1);
  out.lifts.resize(m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    auto d = c.boundary(i);
    for (std::size_t k : independent_columns(f, d)) {
      out.b[i - 1].push_back(d.column(k));
      std::vector<Elem> e(c.dim(i), f.zero());
      e[k] = f.one();
      out.lifts[i].push_back(std::move(e));
    }
  }
  return out;
}

template <class Field>
std::vector<typename Field::value_type> apply(const Field& f, const Matrix<typename Field::value_type>& m,
                                              const std::vector<typename Field::value_type>& v) {
  std::vector<typename Field::value_type> out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!v[c].is_zero() && !m(r, c).is_zero()) out[r] = out[r] + m(r, c) * v[c];
  return out;
}

template <class Field>
typename Field::value_type transition_det(const Field& f, std::size_t dim,
                                          const std::vector<const std::vector<std::vector<typename Field::value_type>>*>& groups) {
  Matrix<typename Field::value_type> m(dim, dim, f.zero());
  std::size_t col = 0;
  for (const auto* g : groups)
    for (const auto& v : *g) {
      if (col >= dim || v.size() != dim) fail(Errc::ArityMismatch, "basis vectors do not fill C_i");
      for (std::size_t r = 0; r < dim; ++r) m(r, col) = v[r];
      ++col;
    }
  if (col != dim) fail(Errc::ArityMismatch, "basis vectors do not fill C_i");
  return determinant(f, std::move(m));
}

}  // namespace detail

/// prod_i [b_i h_i b_{i-1} / c_i]^{(-1)^{i+1}} for explicit choices;
/// `h` may be empty for an acyclic complex.
template <class Field>
typename Field::value_type torsion_from_bases(const BasedChainComplex<Field>& c, const ChainBases<Field>& bases,
                                              const std::vector<std::vector<std::vector<typename Field::value_type>>>& h) {
  using Elem = typename Field::value_type;
  const auto& f = c.field();
  const std::size_t m = c.length();
  if (bases.b.size() != m + 1 || bases.lifts.size() != m + 1)
    fail(Errc::ArityMismatch, "basis data must cover degrees 0..m");
  for (std::size_t i = 1; i <= m; ++i) {
    if (bases.lifts[i].size() != bases.b[i - 1].size())
      fail(Errc::ArityMismatch, "one lift is needed per vector of b_{i-1}");
    auto d = c.boundary(i);
    for (std::size_t k = 0; k < bases.lifts[i].size(); ++k)
      if (detail::apply(f, d, bases.lifts[i][k]) != bases.b[i - 1][k])
        fail(Errc::InvalidArgument, "a lift does not map onto its basis vector");
  }
  const std::vector<std::vector<Elem>> none;
  Elem tau = f.one();
  for (std::size_t i = 0; i <= m; ++i) {
    const auto* hi = i < h.size() ? &h[i] : &none;
    const auto* lifts = &bases.lifts[i];
    Elem det = detail::transition_det(f, c.dim(i), {&bases.b[i], hi, lifts});
    if (det.is_zero()) fail(Errc::BadHomologyBasis, "the chosen vectors are not a basis of C_" + std::to_string(i));
    tau = tau * detail::signed_power(f, det, i % 2 == 0);
  }
  return tau;
}

/// Torsion of an acyclic based complex; NotAcyclic otherwise.
template <class Field>
typename Field::value_type torsion_acyclic(const BasedChainComplex<Field>& c) {
  if (!c.is_acyclic()) fail(Errc::NotAcyclic, "the complex has nonzero homology");
  return torsion_from_bases(c, detail::canonical_bases(c), {});
}

/// N(C) = sum_i (sum_{j<=i} dim C_j)(sum_{j<=i} dim H_j) mod 2.
template <class Field>
int homology_sign_exponent(const BasedChainComplex<Field>& c) {
  std::size_t alpha = 0, beta = 0, n = 0;
  for (std::size_t i = 0; i <= c.length(); ++i) {
    alpha += c.dim(i);
    beta += c.homology_dim(i);
    n += alpha * beta;
  }
  return static_cast<int>(n % 2);
}

/// Sign-refined torsion (-1)^{N(C)} prod [b_i h_i b_{i-1}/c_i]^{(-1)^{i+1}}.
/// h.bases[i] must list dim H_i cycles of C_i whose classes are a basis.
template <class Field>
typename Field::value_type torsion_with_homology(const BasedChainComplex<Field>& c, const HomologyData<Field>& h) {
  const auto& f = c.field();
  const std::size_t m = c.length();
  if (h.bases.size() > m + 1) fail(Errc::BadHomologyBasis, "homology given in degrees above m");
  for (std::size_t i = 0; i <= m; ++i) {
    std::size_t given = i < h.bases.size() ? h.bases[i].size() : 0;
    if (given != c.homology_dim(i))
      fail(Errc::BadHomologyBasis, "H_" + std::to_string(i) + " has dimension " +
                                       std::to_string(c.homology_dim(i)) + ", got " + std::to_string(given));
    if (given == 0) continue;
    auto d = c.boundary(i);
    for (const auto& v : h.bases[i]) {
      if (v.size() != c.dim(i)) fail(Errc::BadHomologyBasis, "homology vector of the wrong length");
      for (const auto& x : detail::apply(f, d, v))
        if (!x.is_zero()) fail(Errc::BadHomologyBasis, "homology vector is not a cycle");
    }
  }
  auto tau = torsion_from_bases(c, detail::canonical_bases(c), h.bases);
  return homology_sign_exponent(c) ? -tau : tau;
}

/// C*_i = Hom(C_{m-i}, F) with d*_i = (-1)^i Hom(d_{m-i+1}, F).
template <class Field>
BasedChainComplex<Field> dual_complex(const BasedChainComplex<Field>& c) {
  const std::size_t m = c.length();
  std::vector<std::size_t> dims(m + 1);
  for (std::size_t i = 0; i <= m; ++i) dims[i] = c.dim(m - i);
  std::vector<Matrix<typename Field::value_type>> d;
  for (std::size_t i = 1; i <= m; ++i) {
    auto t = c.boundary(m - i + 1).transposed();
    if (i % 2 == 1) t = t.map([](const auto& x) { return -x; });
    d.push_back(std::move(t));
  }
  return BasedChainComplex<Field>(c.field(), std::move(dims), std::move(d));
}

/// Degreewise direct sum with concatenated bases (first summand first).
template <class Field>
BasedChainComplex<Field> direct_sum(const BasedChainComplex<Field>& a, const BasedChainComplex<Field>& b) {
  const auto& f = a.field();
  const std::size_t m = std::max(a.length(), b.length());
  std::vector<std::size_t> dims(m + 1);
  for (std::size_t i = 0; i <= m; ++i) dims[i] = a.dim(i) + b.dim(i);
  std::vector<Matrix<typename Field::value_type>> d;
  for (std::size_t i = 1; i <= m; ++i) {
    Matrix<typename Field::value_type> s(dims[i - 1], dims[i], f.zero());
    auto da = a.boundary(i), db = b.boundary(i);
    for (std::size_t r = 0; r < da.rows(); ++r)
      for (std::size_t c = 0; c < da.cols(); ++c) s(r, c) = da(r, c);
    for (std::size_t r = 0; r < db.rows(); ++r)
      for (std::size_t c = 0; c < db.cols(); ++c) s(a.dim(i - 1) + r, a.dim(i) + c) = db(r, c);
    d.push_back(std::move(s));
  }
  return BasedChainComplex<Field>(f, std::move(dims), std::move(d));
}

// ---------------------------------------------------------------------------
// Homological computation over the PID Q[t, t^-1].

/// numerator / denominator, both up to units of Q[t^+-1].
struct TorsionFraction {
  LaurentUnitClass numerator, denominator;
  friend bool operator==(const TorsionFraction&, const TorsionFraction&) = default;
};

/// Chain complex over Z[t^+-1] in one variable, read over Q[t^+-1].
struct LaurentChainComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix<MultiLaurent>> boundaries;  // boundaries[i-1] = d_i
};

/// Primitive integer representative of a rational polynomial, as a class.
LaurentUnitClass unit_class_of(const QPoly& p);

/// prod_i ord H_i(D)^{(-1)^{i+1}}, orders from the Smith form over Q[t].
/// Throws RankObstruction when some H_i has positive rank.
TorsionFraction homological_torsion_oracle(const LaurentChainComplex& d);

/// The same complex over Q(t).
BasedChainComplex<RationalFunctionField> localize(const LaurentChainComplex& d);

/// Unit classes of a reduced rational function's numerator and denominator.
TorsionFraction fraction_class(const RationalFunction& f);

}  // namespace abtor
