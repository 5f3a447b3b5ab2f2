#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dix {

// Arbitrary-precision rationals, always kept canonical (reduced, positive
// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

enum class Errc {
  IllegalParams,
  RankCapExceeded,
  EnumerationCapExceeded,
  DimensionMismatch,
  ZeroForm,
  CapExceeded,
  NotDominantIntegral,
  SingularDirection,
  SingularParameter,
  OffLattice,
  IndexOutOfRange,
  NotInC,
  InvalidPartition,
  UnsupportedFamily,
  UnknownSuite,
  UnsupportedFormat,
  ParseError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// "a/b" for non-integers, "a" otherwise.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace dix
