#include "twin/rational.hpp"

#include <stdexcept>

namespace twin {

mpz_class floor_int(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) { return q - Rational(floor_int(q)); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      mpz_class den = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      Rational r(mpz_class(digits), den);
      r.canonicalize();
      return r;
    }
    Rational r(s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi) || lo < 0) throw std::invalid_argument("simplest_between: empty interval");
  Rational fl(floor_int(lo));
  if (fl + 1 < hi) return fl + 1;
  Rational a = lo - fl;
  Rational b = hi - fl;
  if (a == 0) {
    Rational inv = 1 / b;
    Rational q(floor_int(inv) + 1);
    return fl + 1 / q;
  }
  // Both ends inside (0, 1]: recurse on the reciprocal interval.
  return fl + 1 / simplest_between(1 / b, 1 / a);
}

}  // namespace twin
