#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bvs {

using Integer = mpz_class;
using Rational = mpq_class;  // gmpxx keeps it canonical after every operation
using Sign = int;            // always one of -1, 0, +1

inline int sgn(const Integer& a) {
  int s = mpz_sgn(a.get_mpz_t());
  return (s > 0) - (s < 0);
}
inline int sgn(const Rational& a) {
  int s = mpq_sgn(a.get_mpq_t());
  return (s > 0) - (s < 0);
}

Integer floor_q(const Rational& a);
Integer ceil_q(const Rational& a);
bool is_dyadic(const Rational& a);
Rational pow2(long e);  // 2^e, e may be negative

// "3/2", "-7", "0" ... whitespace around is ignored; throws std::invalid_argument
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& a);
std::string to_string(const Rational& a);
// fixed-point decimal rounded to `digits` places, e.g. for graph export
std::string to_decimal(const Rational& a, int digits);

}  // namespace bvs
