#include "abtor/matrix.hpp"

namespace abtor {

namespace {

MultiLaurent cofactor_rec(const Matrix<MultiLaurent>& m,
                          std::vector<std::size_t>& cols, std::size_t row,
                          std::size_t vars) {
  const std::size_t k = cols.size();
  if (k == 0) return MultiLaurent::constant(vars, 1);
  if (k == 1) return m(row, cols[0]);
  MultiLaurent acc(vars);
  for (std::size_t i = 0; i < k; ++i) {
    const MultiLaurent& e = m(row, cols[i]);
    if (e.is_zero()) continue;
    std::size_t c = cols[i];
    cols.erase(cols.begin() + static_cast<long>(i));
    MultiLaurent minor = cofactor_rec(m, cols, row + 1, vars);
    cols.insert(cols.begin() + static_cast<long>(i), c);
    if (i % 2 == 0)
      acc += e * minor;
    else
      acc -= e * minor;
  }
  return acc;
}

}  // namespace

MultiLaurent determinant_cofactor(const Matrix<MultiLaurent>& m,
                                  std::size_t vars) {
  if (m.rows() != m.cols()) fail(Errc::ArityMismatch, "determinant of non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_rec(m, cols, 0, vars);
}

MultiLaurent determinant_bareiss(Matrix<MultiLaurent> m, std::size_t vars) {
  if (m.rows() != m.cols()) fail(Errc::ArityMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiLaurent::constant(vars, 1);
  bool negate = false;
  MultiLaurent prev = MultiLaurent::constant(vars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return MultiLaurent(vars);
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiLaurent num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = divide_exact(num, prev);
        if (!q) fail(Errc::NotDivisible, "internal: inexact Bareiss step");
        m(i, j) = std::move(*q);
      }
      m(i, k) = MultiLaurent(vars);
    }
    prev = m(k, k);
  }
  MultiLaurent d = m(n - 1, n - 1);
  return negate ? -d : d;
}

MultiLaurent det_over_domain(const Matrix<MultiLaurent>& m, std::size_t vars) {
  if (m.rows() > 5) return determinant_bareiss(m, vars);
  return determinant_cofactor(m, vars);
}

}  // namespace abtor
