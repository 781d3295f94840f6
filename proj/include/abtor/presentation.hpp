#pragma once

#include <string>
#include <vector>

#include "abtor/free_group.hpp"
#include "abtor/laurent.hpp"
#include "abtor/matrix.hpp"

namespace abtor {

/// <x_1..x_n | r_1..r_m>.
class Presentation {
public:
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// H_1 = Z^b + Z/d_1 + ... with d_1 | d_2 | ..., written in the Smith basis.
struct AbelianStructure {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;
  /// Image of each generator: torsion coordinates (mod d_i) then free ones.
  std::vector<std::vector<BigInt>> generator_images;
  /// Image of each generator in G = H_1 / Tors = Z^b.
  std::vector<Exponent> free_images;
};

AbelianStructure abelianize(const Presentation& p);

/// Fox matrix reduced to Z[G]: entry (j, i) is the image of d r_j / d x_i.
struct AlexanderMatrix {
  std::size_t vars = 0;
  Matrix<MultiLaurent> entries;
};

AlexanderMatrix alexander_matrix(const Presentation& p);

/// All (n-k)-minors. Returns [1] when n-k <= 0 and [0] when no minor of
/// that size exists; throws TooLarge past 10^6 minors.
std::vector<MultiLaurent> elementary_ideal_generators(const AlexanderMatrix& a, std::size_t k);

/// gcd of the k-th elementary ideal.
LaurentUnitClass order_delta(const AlexanderMatrix& a, std::size_t k);

LaurentUnitClass alexander_polynomial(const Presentation& p);

/// Delta / (t-1)^e with e = 2 for b_1 = 1 and e = 0 for b_1 >= 2.
struct MilnorTorsion {
  LaurentUnitClass numerator;
  int denominator_exponent = 0;
};

/// Throws Unsupported when b_1 = 0.
MilnorTorsion milnor_torsion_fraction(const Presentation& p);

}  // namespace abtor
