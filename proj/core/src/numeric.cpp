#include "bvs/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace bvs {

Integer floor_q(const Rational& a) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& a) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return r;
}

bool is_dyadic(const Rational& a) {
  const mpz_srcptr d = a.get_den_mpz_t();
  return mpz_popcount(d) == 1;
}

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = s.find('/');
  auto check_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false)) throw std::invalid_argument("bad rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  Integer n(num), d(den);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& a) { return a.get_str(); }

std::string to_decimal(const Rational& a, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  Rational scaled = abs(a) * scale;
  Integer r = floor_q(scaled + Rational(1, 2));
  std::string s = r.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sgn(a) < 0 && sgn(r) != 0) s.insert(0, "-");
  return s;
}

}  // namespace bvs
