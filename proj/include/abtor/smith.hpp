#pragma once

#include <utility>
#include <vector>

#include "abtor/matrix.hpp"
#include "abtor/qpoly.hpp"
#include "abtor/rational.hpp"

namespace abtor {

/// Euclidean-domain operations used by the Smith reduction.
template <class T>
struct EuclideanTraits;

template <>
struct EuclideanTraits<BigInt> {
  static BigInt zero() { return 0; }
  static BigInt one() { return 1; }
  static bool is_zero(const BigInt& a) { return a == 0; }
  static bool smaller(const BigInt& a, const BigInt& b) { return abs(a) < abs(b); }
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
  }
  /// Unit u with u*a in normal form (nonnegative).
  static BigInt normalizing_unit(const BigInt& a) { return a < 0 ? -1 : 1; }
};

template <>
struct EuclideanTraits<QPoly> {
  static QPoly zero() { return {}; }
  static QPoly one() { return QPoly(Rational(1)); }
  static bool is_zero(const QPoly& a) { return a.is_zero(); }
  static bool smaller(const QPoly& a, const QPoly& b) { return a.degree() < b.degree(); }
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    return abtor::divmod(a, b);
  }
  /// Unit u with u*a monic.
  static QPoly normalizing_unit(const QPoly& a) {
    return QPoly(a.leading().inverse());
  }
};

template <class T>
struct SmithForm {
  Matrix<T> d;  // diagonal, d_1 | d_2 | ...
  Matrix<T> u;  // unimodular, rows x rows
  Matrix<T> v;  // unimodular, cols x cols; u * a * v == d
};

/// Smith normal form with smallest-entry pivoting; ties go to the first
/// entry in row-major order so U and V are reproducible.
template <class T>
SmithForm<T> smith_form(const Matrix<T>& input) {
  using Tr = EuclideanTraits<T>;
  Matrix<T> a = input;
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<T> u = Matrix<T>::identity(m, Tr::zero(), Tr::one());
  Matrix<T> v = Matrix<T>::identity(n, Tr::zero(), Tr::one());

  auto row_axpy = [&](std::size_t dst, std::size_t src, const T& q) {
    // row_dst -= q * row_src, on a and u
    for (std::size_t c = 0; c < n; ++c)
      if (!Tr::is_zero(a(src, c))) a(dst, c) = a(dst, c) - q * a(src, c);
    for (std::size_t c = 0; c < m; ++c)
      if (!Tr::is_zero(u(src, c))) u(dst, c) = u(dst, c) - q * u(src, c);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const T& q) {
    for (std::size_t r = 0; r < m; ++r)
      if (!Tr::is_zero(a(r, src))) a(r, dst) = a(r, dst) - q * a(r, src);
    for (std::size_t r = 0; r < n; ++r)
      if (!Tr::is_zero(v(r, src))) v(r, dst) = v(r, dst) - q * v(r, src);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool done = false;
    while (true) {
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!Tr::is_zero(a(i, j)) &&
              (pr == m || Tr::smaller(a(i, j), a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == m) {
        done = true;
        break;
      }
      a.swap_rows(t, pr);
      u.swap_rows(t, pr);
      a.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool leftover = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (Tr::is_zero(a(i, t))) continue;
        auto [q, r] = Tr::divmod(a(i, t), a(t, t));
        row_axpy(i, t, q);
        leftover = leftover || !Tr::is_zero(r);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (Tr::is_zero(a(t, j))) continue;
        auto [q, r] = Tr::divmod(a(t, j), a(t, t));
        col_axpy(j, t, q);
        leftover = leftover || !Tr::is_zero(r);
      }
      if (leftover) continue;

      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j) {
          if (Tr::is_zero(a(i, j))) continue;
          if (!Tr::is_zero(Tr::divmod(a(i, j), a(t, t)).second)) {
            row_axpy(t, i, -Tr::one());  // row_t += row_i
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (done) break;
    T unit = Tr::normalizing_unit(a(t, t));
    for (std::size_t c = 0; c < n; ++c) a(t, c) = a(t, c) * unit;
    for (std::size_t c = 0; c < m; ++c) u(t, c) = u(t, c) * unit;
  }
  return {std::move(a), std::move(u), std::move(v)};
}

/// Integer Smith normal form.
inline SmithForm<BigInt> smith_normal_form(const Matrix<BigInt>& a) {
  return smith_form(a);
}

/// Diagonal entries d_1 | d_2 | ... (length min(rows, cols), zeros included).
template <class T>
std::vector<T> invariant_factors(const Matrix<T>& a) {
  auto s = smith_form(a);
  std::vector<T> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) out.push_back(s.d(i, i));
  return out;
}

}  // namespace abtor
