#include "abtor/presentation.hpp"

#include <functional>
#include <set>

#include "abtor/smith.hpp"

namespace abtor {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_)
    if (!seen.insert(g).second) fail(Errc::InvalidArgument, "duplicate generator name " + g);
  for (const auto& r : relators_)
    if (r.rank() != generators_.size()) fail(Errc::ArityMismatch, "relator of the wrong rank");
}

AbelianStructure abelianize(const Presentation& p) {
  const std::size_t n = p.rank(), m = p.relators().size();
  // Columns are the abelianized relators; H_1 = Z^n / column span.
  Matrix<BigInt> a(n, m, BigInt(0));
  for (std::size_t j = 0; j < m; ++j) {
    auto v = p.relators()[j].abelianization();
    for (std::size_t i = 0; i < n; ++i) a(i, j) = v[i];
  }
  auto s = smith_normal_form(a);
  // With U a V = D, generator k lands on column k of U in the new basis.
  std::size_t nonzero = 0;
  while (nonzero < std::min(n, m) && s.d(nonzero, nonzero) != 0) ++nonzero;

  AbelianStructure out;
  out.betti = n - nonzero;
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < nonzero; ++i)
    if (s.d(i, i) != 1) {
      torsion_rows.push_back(i);
      out.torsion.push_back(s.d(i, i));
    }

  // Orient each free coordinate so that its first nonzero generator image
  // is positive.
  std::vector<int> flip(n, 1);
  for (std::size_t row = nonzero; row < n; ++row)
    for (std::size_t k = 0; k < n; ++k)
      if (s.u(row, k) != 0) {
        flip[row] = s.u(row, k) < 0 ? -1 : 1;
        break;
      }

  for (std::size_t k = 0; k < n; ++k) {
    std::vector<BigInt> img;
    for (std::size_t t = 0; t < torsion_rows.size(); ++t) {
      BigInt r = s.u(torsion_rows[t], k) % out.torsion[t];
      if (r < 0) r += out.torsion[t];
      img.push_back(r);
    }
    Exponent e;
    for (std::size_t row = nonzero; row < n; ++row) {
      BigInt c = s.u(row, k) * flip[row];
      if (!c.fits_sint_p()) fail(Errc::TooLarge, "abelianization exponent exceeds machine range");
      img.push_back(c);
      e.push_back(static_cast<int>(c.get_si()));
    }
    out.generator_images.push_back(std::move(img));
    out.free_images.push_back(std::move(e));
  }
  return out;
}

AlexanderMatrix alexander_matrix(const Presentation& p) {
  auto ab = abelianize(p);
  const std::size_t n = p.rank(), m = p.relators().size();
  AlexanderMatrix out{ab.betti, Matrix<MultiLaurent>(m, n, MultiLaurent(ab.betti))};
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      out.entries(j, i) = reduced_fox_derivative(p.relators()[j], i, ab.free_images, ab.betti);
  return out;
}

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void minor_count_guard(std::size_t m, std::size_t n, std::size_t size) {
  if (binomial(m, size) * binomial(n, size) > 1000000)
    fail(Errc::TooLarge, "more than 10^6 minors of size " + std::to_string(size));
}

// Calls `visit` on every size x size minor until it returns false.
void for_each_minor(const AlexanderMatrix& a, std::size_t size,
                    const std::function<bool(const MultiLaurent&)>& visit) {
  const std::size_t m = a.entries.rows(), n = a.entries.cols();
  std::vector<std::size_t> rows(size), cols(size);
  for (std::size_t i = 0; i < size; ++i) rows[i] = i;
  auto advance = [](std::vector<std::size_t>& c, std::size_t total) {
    std::size_t k = c.size();
    while (k > 0) {
      --k;
      if (c[k] < total - c.size() + k) {
        ++c[k];
        for (std::size_t l = k + 1; l < c.size(); ++l) c[l] = c[l - 1] + 1;
        return true;
      }
    }
    return false;
  };
  Matrix<MultiLaurent> sub(size, size, MultiLaurent(a.vars));
  do {
    for (std::size_t i = 0; i < size; ++i) cols[i] = i;
    do {
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) sub(r, c) = a.entries(rows[r], cols[c]);
      if (!visit(det_over_domain(sub, a.vars))) return;
    } while (advance(cols, n));
  } while (advance(rows, m));
}

}  // namespace

std::vector<MultiLaurent> elementary_ideal_generators(const AlexanderMatrix& a, std::size_t k) {
  const std::size_t m = a.entries.rows(), n = a.entries.cols();
  if (k >= n) return {MultiLaurent::constant(a.vars, 1)};
  const std::size_t size = n - k;
  if (size > std::min(m, n)) return {MultiLaurent(a.vars)};
  minor_count_guard(m, n, size);
  std::vector<MultiLaurent> out;
  for_each_minor(a, size, [&](const MultiLaurent& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

LaurentUnitClass order_delta(const AlexanderMatrix& a, std::size_t k) {
  const std::size_t m = a.entries.rows(), n = a.entries.cols();
  if (k >= n) return LaurentUnitClass(MultiLaurent::constant(a.vars, 1));
  const std::size_t size = n - k;
  if (size > std::min(m, n)) return LaurentUnitClass(MultiLaurent(a.vars));
  minor_count_guard(m, n, size);
  LaurentUnitClass g{MultiLaurent(a.vars)};
  for_each_minor(a, size, [&](const MultiLaurent& d) {
    if (d.is_zero()) return true;
    g = gcd(g.rep(), d);
    return !g.is_one();
  });
  return g;
}

LaurentUnitClass alexander_polynomial(const Presentation& p) {
  return order_delta(alexander_matrix(p), 1);
}

MilnorTorsion milnor_torsion_fraction(const Presentation& p) {
  auto ab = abelianize(p);
  if (ab.betti == 0) fail(Errc::Unsupported, "Milnor torsion needs b_1 >= 1");
  return {alexander_polynomial(p), ab.betti == 1 ? 2 : 0};
}

}  // namespace abtor
