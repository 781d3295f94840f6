#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "abtor/laurent.hpp"
#include "abtor/matrix.hpp"

namespace abtor {

/// Reduced word in the free group on `rank` generators. A letter is
/// +(i+1) for x_i and -(i+1) for its inverse (generators are 0-based).
class Word {
public:
  explicit Word(std::size_t rank = 0) : rank_(rank) {}
  /// Freely reduces `letters`.
  Word(std::size_t rank, const std::vector<int>& letters);

  static Word generator(std::size_t rank, std::size_t i, int power = 1);

  std::size_t rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  Word pow(int k) const;

  /// Exponent sum of each generator.
  std::vector<long> abelianization() const;

  friend bool operator==(const Word& a, const Word& b) = default;
  /// Shortlex: shorter words first, then letters compared generator-major
  /// with x_i before x_i^-1.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  /// Tokens `x`, `x^-1`, `x^3`, separated by spaces; the identity is `1`.
  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;

private:
  std::size_t rank_;
  std::vector<int> letters_;
};

std::vector<std::string> default_generator_names(std::size_t rank);

/// Element of Z[F(x)] as a finite map from reduced words to coefficients.
class GroupRingElem {
public:
  explicit GroupRingElem(std::size_t rank = 0) : rank_(rank) {}
  GroupRingElem(const Word& w, const BigInt& c = 1);  // NOLINT

  static GroupRingElem constant(std::size_t rank, const BigInt& c);

  std::size_t rank() const { return rank_; }
  const std::map<Word, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, const BigInt& c);

  GroupRingElem operator-() const;
  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b);
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) = default;

  GroupRingElem scaled(const BigInt& s) const;
  /// a(1): the sum of the coefficients.
  BigInt augmentation() const;
  /// The involution g -> g^-1 extended additively.
  GroupRingElem bar() const;

  /// Terms in shortlex order, e.g. `1 + x + x^2` or `-x^-1`.
  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;

private:
  void check_rank(const GroupRingElem& o) const;
  std::size_t rank_;
  std::map<Word, BigInt> terms_;
};

/// Fox free derivative d/dx_i via the closed formula on reduced words.
GroupRingElem fox_derivative(const Word& w, std::size_t i);
GroupRingElem fox_derivative(const GroupRingElem& a, std::size_t i);

/// Iterated derivative; indices[0] is applied first, the last index is
/// the outermost derivative.
GroupRingElem higher_fox_derivative(const GroupRingElem& a,
                                    const std::vector<std::size_t>& indices);

/// Pushes a group-ring element through F(x) -> Z^vars, generator i mapping
/// to the monomial with exponent `images[i]`.
MultiLaurent reduce_to_abelian(const GroupRingElem& a,
                               const std::vector<Exponent>& images,
                               std::size_t vars);
/// Same as fox_derivative followed by reduce_to_abelian, without building
/// the intermediate words.
MultiLaurent reduced_fox_derivative(const Word& w, std::size_t i,
                                    const std::vector<Exponent>& images,
                                    std::size_t vars);
/// The standard map F(x) -> Z^n, x_i -> s_i.
std::vector<Exponent> standard_abelian_images(std::size_t rank);

/// Homomorphism F(x_1..x_n) -> F(y_1..y_m) given by the images of the x_i.
class FreeEndomorphism {
public:
  FreeEndomorphism(std::size_t target_rank, std::vector<Word> images);

  static FreeEndomorphism identity(std::size_t rank);

  std::size_t source_rank() const { return images_.size(); }
  std::size_t target_rank() const { return target_rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::size_t i) const { return images_.at(i); }

  Word operator()(const Word& w) const;
  GroupRingElem operator()(const GroupRingElem& a) const;
  Matrix<GroupRingElem> operator()(const Matrix<GroupRingElem>& m) const;

  /// Acts as the identity on the abelianization.
  bool is_homology_trivial() const;

  friend bool operator==(const FreeEndomorphism& a, const FreeEndomorphism& b) = default;

private:
  std::size_t target_rank_;
  std::vector<Word> images_;
};

/// (psi o phi)(x) = psi(phi(x)).
FreeEndomorphism compose(const FreeEndomorphism& psi, const FreeEndomorphism& phi);

// Nielsen generators of Aut(F_n).
FreeEndomorphism nielsen_transposition(std::size_t rank, std::size_t i, std::size_t j);
FreeEndomorphism nielsen_inversion(std::size_t rank, std::size_t i);
/// x_i -> x_j x_i.
FreeEndomorphism nielsen_left_multiplication(std::size_t rank, std::size_t i, std::size_t j);
/// x -> w x w^-1 on every generator.
FreeEndomorphism inner_automorphism(const Word& w);

/// Entry (i, j) is d phi(x_j) / d x_i: rows index the derivative variable,
/// columns the image.
Matrix<GroupRingElem> jacobian(const FreeEndomorphism& phi);
/// Entrywise bar of the Jacobian; M(psi phi) = M(psi) psi(M(phi)).
Matrix<GroupRingElem> magnus(const FreeEndomorphism& phi);
/// Magnus matrix reduced to Z[Z^n] (variables s_1..s_n). Requires phi to be
/// homologically trivial; throws NotHomologyTrivial otherwise.
Matrix<MultiLaurent> magnus_abelianized(const FreeEndomorphism& phi);

Matrix<GroupRingElem> multiply(const Matrix<GroupRingElem>& a,
                               const Matrix<GroupRingElem>& b);

/// w lies in F'' iff every Fox derivative vanishes in Z[F/F'].
bool in_second_derived(const Word& w);

Word commutator(const Word& a, const Word& b);

}  // namespace abtor
