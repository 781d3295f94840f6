#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abtor/cyclotomic.hpp"
#include "abtor/group_algebra.hpp"

namespace abtor {

/// L_{p,q} with p >= 2, q a unit mod p (stored in 1..p-1), r = q^-1 mod p.
class LensSpace {
public:
  LensSpace(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return r_; }

  std::string str() const;

private:
  int p_, q_, r_;
};

/// The class of a torsion value modulo multiplication by phi(H) = <zeta^j>,
/// stored as its lexicographically least member. The sign is not quotiented
/// out: it is the same for every lens space with a given p.
struct TorsionOrbit {
  int p = 0;
  int character = 0;
  CyclotomicElem value;      // (zeta^j - 1)^-1 (zeta^{jr} - 1)^-1
  CyclotomicElem canonical;  // least of zeta^{ju} * value
  friend bool operator==(const TorsionOrbit& a, const TorsionOrbit& b) {
    return a.p == b.p && a.canonical == b.canonical;
  }
};

/// Lexicographic order on coefficient vectors of equal length.
bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Torsion at the character T -> zeta_p^j (1 <= j <= p-1).
TorsionOrbit lens_torsion(const LensSpace& l, int j);

/// Least coefficient vector among zeta^{step*u} * v, and with `signed` also
/// among their negatives.
CyclotomicElem canonical_orbit_member(const CyclotomicElem& v, int step, bool with_sign);

/// Orientation-preserving homeomorphism from torsion alone: some unit k and
/// shift u with T^u tau(L) = tau(L2)(T -> T^k) in Q[Z_p], which matches the
/// characters j <-> kj with one common ambiguity.
bool homeomorphic_by_torsion(const LensSpace& a, const LensSpace& b);
/// The arithmetic criterion q' = q^{+-1} mod p.
bool homeomorphic_by_arithmetic(const LensSpace& a, const LensSpace& b);
/// Both branches; throws std::logic_error if they ever disagree.
bool homeomorphic(const LensSpace& a, const LensSpace& b);

/// p = p' and q q' a square in Z_p^x.
bool homotopy_equivalent(const LensSpace& a, const LensSpace& b);

/// S(h) = sum_{i<p} (2i-p+1)/(2p) h^i with h = T^a.
CyclicGroupAlgebraElem sawtooth(int p, long a);

/// S(T) S(T^r) in Q[Z_p] (the representative with sign +1) and its least
/// member up to +-T^u.
struct MaximalTorsion {
  CyclicGroupAlgebraElem value;
  CyclicGroupAlgebraElem canonical;
};
MaximalTorsion maximal_torsion(const LensSpace& l);

/// Least coefficient vector among +-T^u x.
CyclicGroupAlgebraElem canonical_unit_multiple(const CyclicGroupAlgebraElem& x, bool with_sign = true);

/// lambda(T, T) read off tau (T-1)^2 = -lambda Sigma_H mod Z[H]; returns
/// {lambda, -lambda} reduced to [0, 1). Cross-checked against q/p.
std::pair<Rational, Rational> linking_self(const LensSpace& l);

/// tau (T^a-1)(T^b-1) + s ab q/p Sigma_H is integral for all a, b with one
/// sign s.
bool verify_turaev_linking(const LensSpace& l);

/// Exhaustive check that only a = 0 satisfies the three conditions of Franz's
/// lemma for maps Z_p^x -> [-B, B]. Requires 3 <= p <= 13 and 1 <= B <= 3.
bool franz_zero_check(int p, int bound);

}  // namespace abtor
