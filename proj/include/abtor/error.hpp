#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abtor {

enum class Errc {
  DivisionByZero,
  ArityMismatch,
  NotHomologyTrivial,
  NotAcyclic,
  BadHomologyBasis,
  RankObstruction,
  Unsupported,
  TooLarge,
  NotDivisible,
  ZeroPolynomial,
  Parse,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this type; `code()` is what
/// callers (and the CLI exit-code mapping) branch on.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace abtor
