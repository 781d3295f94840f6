#include "abtor/free_group.hpp"

#include <cstdlib>
#include <sstream>

namespace abtor {

namespace {

int letter_key(int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

void check_letter(std::size_t rank, int l) {
  if (l == 0 || static_cast<std::size_t>(std::abs(l)) > rank)
    fail(Errc::ArityMismatch, "letter outside the free group of rank " + std::to_string(rank));
}

}  // namespace

Word::Word(std::size_t rank, const std::vector<int>& letters) : rank_(rank) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    check_letter(rank, l);
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::generator(std::size_t rank, std::size_t i, int power) {
  if (i >= rank) fail(Errc::ArityMismatch, "generator index out of range");
  int l = static_cast<int>(i) + 1;
  return Word(rank, std::vector<int>(static_cast<std::size_t>(std::abs(power)), power < 0 ? -l : l));
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (auto& l : w.letters_) l = -l;
  return w;
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_) fail(Errc::ArityMismatch, "words of different rank");
  Word w = a;
  std::size_t k = 0;
  while (k < b.letters_.size() && !w.letters_.empty() && w.letters_.back() == -b.letters_[k]) {
    w.letters_.pop_back();
    ++k;
  }
  w.letters_.insert(w.letters_.end(), b.letters_.begin() + static_cast<long>(k), b.letters_.end());
  return w;
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word r(rank_);
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

std::vector<long> Word::abelianization() const {
  std::vector<long> v(rank_, 0);
  for (int l : letters_) v[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  return v;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    int ka = letter_key(a.letters_[i]), kb = letter_key(b.letters_[i]);
    if (ka != kb) return ka <=> kb;
  }
  return std::strong_ordering::equal;
}

std::vector<std::string> default_generator_names(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string Word::str(const std::vector<std::string>& names) const {
  if (names.size() < rank_) fail(Errc::ArityMismatch, "too few generator names");
  if (letters_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long power = static_cast<long>(j - i) * (letters_[i] > 0 ? 1 : -1);
    if (!first) os << ' ';
    os << names[static_cast<std::size_t>(std::abs(letters_[i]) - 1)];
    if (power != 1) os << '^' << power;
    first = false;
    i = j;
  }
  return os.str();
}

std::string Word::str() const { return str(default_generator_names(rank_)); }

GroupRingElem::GroupRingElem(const Word& w, const BigInt& c) : rank_(w.rank()) { add(w, c); }

GroupRingElem GroupRingElem::constant(std::size_t rank, const BigInt& c) {
  return GroupRingElem(Word(rank), c);
}

void GroupRingElem::add(const Word& w, const BigInt& c) {
  if (w.rank() != rank_) fail(Errc::ArityMismatch, "word of the wrong rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GroupRingElem::check_rank(const GroupRingElem& o) const {
  if (rank_ != o.rank_) fail(Errc::ArityMismatch, "group ring elements of different rank");
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  check_rank(o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  check_rank(o);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
  a.check_rank(b);
  GroupRingElem r(a.rank_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add(wa * wb, ca * cb);
  return r;
}

GroupRingElem GroupRingElem::scaled(const BigInt& s) const {
  GroupRingElem r(rank_);
  if (s == 0) return r;
  r.terms_ = terms_;
  for (auto& [w, c] : r.terms_) c *= s;
  return r;
}

BigInt GroupRingElem::augmentation() const {
  BigInt s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

GroupRingElem GroupRingElem::bar() const {
  GroupRingElem r(rank_);
  for (const auto& [w, c] : terms_) r.add(w.inverse(), c);
  return r;
}

std::string GroupRingElem::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigInt m = abs(c);
    if (w.is_identity()) {
      os << m;
    } else {
      if (m != 1) os << m << '*';
      os << w.str(names);
    }
    first = false;
  }
  return os.str();
}

std::string GroupRingElem::str() const { return str(default_generator_names(rank_)); }

GroupRingElem fox_derivative(const Word& w, std::size_t i) {
  if (i >= w.rank()) fail(Errc::ArityMismatch, "derivative index out of range");
  const int target = static_cast<int>(i) + 1;
  const auto& ls = w.letters();
  GroupRingElem out(w.rank());
  for (std::size_t j = 0; j < ls.size(); ++j) {
    if (std::abs(ls[j]) != target) continue;
    // x^{+1} contributes the prefix before it, x^{-1} minus the prefix through it.
    std::size_t len = ls[j] > 0 ? j : j + 1;
    std::vector<int> prefix(ls.begin(), ls.begin() + static_cast<long>(len));
    out.add(Word(w.rank(), prefix), ls[j] > 0 ? 1 : -1);
  }
  return out;
}

GroupRingElem fox_derivative(const GroupRingElem& a, std::size_t i) {
  if (i >= a.rank()) fail(Errc::ArityMismatch, "derivative index out of range");
  GroupRingElem out(a.rank());
  for (const auto& [w, c] : a.terms()) out += fox_derivative(w, i).scaled(c);
  return out;
}

GroupRingElem higher_fox_derivative(const GroupRingElem& a,
                                    const std::vector<std::size_t>& indices) {
  if (indices.empty()) fail(Errc::ArityMismatch, "empty derivative index sequence");
  GroupRingElem r = a;
  for (std::size_t i : indices) r = fox_derivative(r, i);
  return r;
}

std::vector<Exponent> standard_abelian_images(std::size_t rank) {
  std::vector<Exponent> images(rank, Exponent(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) images[i][i] = 1;
  return images;
}

static Exponent word_image(const Word& w, const std::vector<Exponent>& images,
                           std::size_t vars) {
  Exponent e(vars, 0);
  for (int l : w.letters()) {
    const Exponent& g = images.at(static_cast<std::size_t>(std::abs(l) - 1));
    for (std::size_t k = 0; k < vars; ++k) e[k] += l > 0 ? g[k] : -g[k];
  }
  return e;
}

MultiLaurent reduce_to_abelian(const GroupRingElem& a,
                               const std::vector<Exponent>& images,
                               std::size_t vars) {
  if (images.size() != a.rank()) fail(Errc::ArityMismatch, "abelian image list has wrong length");
  MultiLaurent r(vars);
  for (const auto& [w, c] : a.terms()) r.add_term(word_image(w, images, vars), c);
  return r;
}

MultiLaurent reduced_fox_derivative(const Word& w, std::size_t i,
                                    const std::vector<Exponent>& images,
                                    std::size_t vars) {
  if (i >= w.rank()) fail(Errc::ArityMismatch, "derivative index out of range");
  if (images.size() != w.rank()) fail(Errc::ArityMismatch, "abelian image list has wrong length");
  const int target = static_cast<int>(i) + 1;
  MultiLaurent r(vars);
  Exponent cur(vars, 0);
  for (int l : w.letters()) {
    const Exponent& g = images[static_cast<std::size_t>(std::abs(l) - 1)];
    if (l > 0) {
      if (l == target) r.add_term(cur, 1);
      for (std::size_t k = 0; k < vars; ++k) cur[k] += g[k];
    } else {
      for (std::size_t k = 0; k < vars; ++k) cur[k] -= g[k];
      if (-l == target) r.add_term(cur, -1);
    }
  }
  return r;
}

FreeEndomorphism::FreeEndomorphism(std::size_t target_rank, std::vector<Word> images)
    : target_rank_(target_rank), images_(std::move(images)) {
  for (const auto& w : images_)
    if (w.rank() != target_rank_) fail(Errc::ArityMismatch, "image word of the wrong rank");
}

FreeEndomorphism FreeEndomorphism::identity(std::size_t rank) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < rank; ++i) images.push_back(Word::generator(rank, i));
  return FreeEndomorphism(rank, std::move(images));
}

Word FreeEndomorphism::operator()(const Word& w) const {
  if (w.rank() != source_rank()) fail(Errc::ArityMismatch, "word of the wrong rank for this map");
  Word r(target_rank_);
  for (int l : w.letters()) {
    const Word& img = images_[static_cast<std::size_t>(std::abs(l) - 1)];
    r = r * (l > 0 ? img : img.inverse());
  }
  return r;
}

GroupRingElem FreeEndomorphism::operator()(const GroupRingElem& a) const {
  if (a.rank() != source_rank()) fail(Errc::ArityMismatch, "element of the wrong rank for this map");
  GroupRingElem r(target_rank_);
  for (const auto& [w, c] : a.terms()) r.add((*this)(w), c);
  return r;
}

Matrix<GroupRingElem> FreeEndomorphism::operator()(const Matrix<GroupRingElem>& m) const {
  return m.map([this](const GroupRingElem& e) { return (*this)(e); });
}

bool FreeEndomorphism::is_homology_trivial() const {
  if (source_rank() != target_rank_) return false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    auto v = images_[i].abelianization();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != (k == i ? 1 : 0)) return false;
  }
  return true;
}

FreeEndomorphism compose(const FreeEndomorphism& psi, const FreeEndomorphism& phi) {
  if (phi.target_rank() != psi.source_rank()) fail(Errc::ArityMismatch, "maps do not compose");
  std::vector<Word> images;
  for (const auto& w : phi.images()) images.push_back(psi(w));
  return FreeEndomorphism(psi.target_rank(), std::move(images));
}

FreeEndomorphism nielsen_transposition(std::size_t rank, std::size_t i, std::size_t j) {
  auto phi = FreeEndomorphism::identity(rank);
  std::vector<Word> images = phi.images();
  std::swap(images.at(i), images.at(j));
  return FreeEndomorphism(rank, std::move(images));
}

FreeEndomorphism nielsen_inversion(std::size_t rank, std::size_t i) {
  std::vector<Word> images = FreeEndomorphism::identity(rank).images();
  images.at(i) = images[i].inverse();
  return FreeEndomorphism(rank, std::move(images));
}

FreeEndomorphism nielsen_left_multiplication(std::size_t rank, std::size_t i, std::size_t j) {
  if (i == j) fail(Errc::ArityMismatch, "left multiplication needs distinct generators");
  std::vector<Word> images = FreeEndomorphism::identity(rank).images();
  images.at(i) = Word::generator(rank, j) * images[i];
  return FreeEndomorphism(rank, std::move(images));
}

FreeEndomorphism inner_automorphism(const Word& w) {
  std::vector<Word> images;
  for (std::size_t i = 0; i < w.rank(); ++i)
    images.push_back(w * Word::generator(w.rank(), i) * w.inverse());
  return FreeEndomorphism(w.rank(), std::move(images));
}

Matrix<GroupRingElem> jacobian(const FreeEndomorphism& phi) {
  const std::size_t rows = phi.target_rank(), cols = phi.source_rank();
  Matrix<GroupRingElem> j(rows, cols, GroupRingElem(rows));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) j(r, c) = fox_derivative(phi.image(c), r);
  return j;
}

Matrix<GroupRingElem> magnus(const FreeEndomorphism& phi) {
  return jacobian(phi).map([](const GroupRingElem& e) { return e.bar(); });
}

Matrix<MultiLaurent> magnus_abelianized(const FreeEndomorphism& phi) {
  if (!phi.is_homology_trivial())
    fail(Errc::NotHomologyTrivial, "endomorphism does not act trivially on the abelianization");
  const std::size_t n = phi.source_rank();
  auto images = standard_abelian_images(n);
  return magnus(phi).map([&](const GroupRingElem& e) { return reduce_to_abelian(e, images, n); });
}

Matrix<GroupRingElem> multiply(const Matrix<GroupRingElem>& a, const Matrix<GroupRingElem>& b) {
  std::size_t rank = a.rows() * a.cols() > 0 ? a(0, 0).rank() : 0;
  return multiply(a, b, GroupRingElem(rank));
}

bool in_second_derived(const Word& w) {
  const std::size_t n = w.rank();
  auto images = standard_abelian_images(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!reduced_fox_derivative(w, i, images, n).is_zero()) return false;
  return true;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace abtor
