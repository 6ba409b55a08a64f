#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace luk {

// Exact arbitrary-precision rational. mpq_class keeps values in lowest
// terms with a positive denominator as long as every value is built
// through the helpers below (raw num/den constructors do not canonicalize).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Strict [0-9]+(/[0-9]+)? parse; no sign, no whitespace.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace luk
