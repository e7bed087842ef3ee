#ifndef SYMGRASS_RATIONAL_HPP
#define SYMGRASS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "symgrass/errors.hpp"

namespace symgrass {

// mpq_class keeps itself canonical (lowest terms, positive denominator) as
// long as every value is built through its arithmetic or canonicalize().
using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw UsageError("not a rational literal: '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// unreduced values compare unequal to their reduced forms.
inline Rational fraction(long num, long den) {
  if (den == 0) throw UsageError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_one(const Rational& r) { return r == 1; }

}  // namespace symgrass

#endif  // SYMGRASS_RATIONAL_HPP
