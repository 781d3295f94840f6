#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abtor/free_group.hpp"
#include "abtor/laurent.hpp"

namespace abtor {

/// Endomorphism of pi_1 of the once-bordered genus-g surface, free on
/// a_1..a_g, b_1..b_g (generator indices 0..g-1, then g..2g-1).
class SurfaceAutomorphism {
public:
  SurfaceAutomorphism(std::size_t genus, std::vector<Word> images);

  static SurfaceAutomorphism identity(std::size_t genus);

  std::size_t genus() const { return genus_; }
  const FreeEndomorphism& map() const { return map_; }

  /// a1..ag b1..bg.
  static std::vector<std::string> generator_names(std::size_t genus);
  /// prod_i [a_i, b_i] with [a, b] = a b a^-1 b^-1.
  static Word boundary_word(std::size_t genus);

private:
  std::size_t genus_;
  FreeEndomorphism map_;
};

struct Validation {
  bool homology_trivial = false;
  bool boundary_fixed = false;
};

Validation validate(const SurfaceAutomorphism& f);

/// (t-1)^-2 det(t I - A) with A the Jacobian reduced to Z[s_1..s_2g].
/// Variables: s_1..s_2g, then t (index 2g). Returned in unit-class normal
/// form. Throws NotHomologyTrivial or NotDivisible.
MultiLaurent mapping_torus_torsion(const SurfaceAutomorphism& f);

/// t-span of the mapping torus torsion.
long fiber_norm(const SurfaceAutomorphism& f);

/// Exact quotient by (x_v - 1), or nullopt when the remainder is nonzero.
std::optional<MultiLaurent> divide_by_var_minus_one(const MultiLaurent& f, std::size_t v);

}  // namespace abtor
