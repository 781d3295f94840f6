#include "abtor/mapping_torus.hpp"

#include "abtor/matrix.hpp"
#include "abtor/norms.hpp"

namespace abtor {

SurfaceAutomorphism::SurfaceAutomorphism(std::size_t genus, std::vector<Word> images)
    : genus_(genus), map_(2 * genus, std::move(images)) {
  if (genus == 0) fail(Errc::InvalidArgument, "genus must be at least 1");
  if (map_.source_rank() != 2 * genus) fail(Errc::ArityMismatch, "need one image per generator");
}

SurfaceAutomorphism SurfaceAutomorphism::identity(std::size_t genus) {
  return SurfaceAutomorphism(genus, FreeEndomorphism::identity(2 * genus).images());
}

std::vector<std::string> SurfaceAutomorphism::generator_names(std::size_t genus) {
  std::vector<std::string> names;
  for (char c : {'a', 'b'})
    for (std::size_t i = 1; i <= genus; ++i) names.push_back(std::string(1, c) + std::to_string(i));
  return names;
}

Word SurfaceAutomorphism::boundary_word(std::size_t genus) {
  const std::size_t n = 2 * genus;
  Word w(n);
  for (std::size_t i = 0; i < genus; ++i)
    w = w * commutator(Word::generator(n, i), Word::generator(n, genus + i));
  return w;
}

Validation validate(const SurfaceAutomorphism& f) {
  auto c = SurfaceAutomorphism::boundary_word(f.genus());
  return {f.map().is_homology_trivial(), f.map()(c) == c};
}

std::optional<MultiLaurent> divide_by_var_minus_one(const MultiLaurent& f, std::size_t v) {
  if (f.is_zero()) return f;
  const int lo = f.min_degree(v), hi = f.max_degree(v);
  // Synthetic division from the top: q_{k-1} = c_k + q_k.
  MultiLaurent q(f.var_count()), carry(f.var_count());
  for (int k = hi; k > lo; --k) {
    carry += f.coeff_in(v, k);
    Exponent e(f.var_count(), 0);
    e[v] = k - 1;
    q += carry.shifted(e);
  }
  carry += f.coeff_in(v, lo);
  if (!carry.is_zero()) return std::nullopt;
  return q;
}

MultiLaurent mapping_torus_torsion(const SurfaceAutomorphism& f) {
  if (!f.map().is_homology_trivial())
    fail(Errc::NotHomologyTrivial, "the automorphism does not act trivially on homology");
  const std::size_t n = 2 * f.genus(), vars = n + 1;
  auto images = standard_abelian_images(n);
  std::vector<std::size_t> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = i;
  auto t = MultiLaurent::variable(vars, n);
  Matrix<MultiLaurent> m(n, n, MultiLaurent(vars));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      auto a = reduced_fox_derivative(f.map().image(j), i, images, n).embedded(vars, target);
      m(i, j) = (i == j ? t : MultiLaurent(vars)) - a;
    }
  auto det = det_over_domain(m, vars);
  auto once = divide_by_var_minus_one(det, n);
  auto twice = once ? divide_by_var_minus_one(*once, n) : std::nullopt;
  if (!twice) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
    names.push_back("t");
    fail(Errc::NotDivisible, "det(tI - A) = " + det.str(names) + " is not divisible by (t-1)^2");
  }
  return LaurentUnitClass(*twice).rep();
}

long fiber_norm(const SurfaceAutomorphism& f) {
  auto delta = mapping_torus_torsion(f);
  std::vector<long> s(delta.var_count(), 0);
  s.back() = 1;
  return alexander_norm(delta, s);
}

}  // namespace abtor
