#include "abtor/rational.hpp"

#include <cctype>

namespace abtor {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotHomologyTrivial: return "NotHomologyTrivial";
    case Errc::NotAcyclic: return "NotAcyclic";
    case Errc::BadHomologyBasis: return "BadHomologyBasis";
    case Errc::RankObstruction: return "RankObstruction";
    case Errc::Unsupported: return "Unsupported";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::Parse: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const BigInt& n) { return n.get_str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) fail(Errc::Parse, "bad rational '" + text + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        fail(Errc::Parse, "bad rational '" + text + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  return Rational(q_.get_den(), q_.get_num());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::mod_one() const {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return *this - Rational(fl);
}

std::string Rational::str() const { return q_.get_str(); }

}  // namespace abtor
