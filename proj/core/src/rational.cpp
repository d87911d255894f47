#include "iwagraph/rational.hpp"

#include "iwagraph/errors.hpp"

namespace iwagraph {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  for (char c : text) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw input_error("malformed rational literal: '" + text + "'");
  }
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw input_error("malformed rational literal: '" + text + "'");
  if (q.get_den() == 0) throw input_error("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long val_p_integer(const Integer& n, std::uint32_t p) {
  if (n == 0) throw std::domain_error("val_p_integer: zero argument");
  Integer reduced;
  Integer prime(static_cast<unsigned long>(p));
  return static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation val_p_rational(const Rational& q, std::uint32_t p) {
  if (!is_prime(p)) throw input_error("val_p_rational: p must be prime");
  if (q == 0) return Valuation::infinity();
  long v = val_p_integer(q.get_num(), p) - val_p_integer(q.get_den(), p);
  return Valuation::of(Rational(v));
}

long val_p_nonzero(const Rational& q, std::uint32_t p) {
  if (q == 0) throw std::domain_error("val_p_nonzero: zero argument");
  return val_p_integer(q.get_num(), p) - val_p_integer(q.get_den(), p);
}

Rational rational_pow(std::uint32_t p, long e) {
  Integer base(static_cast<unsigned long>(p));
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(power);
  Rational q(1);
  q /= Rational(power);
  return q;
}

}  // namespace iwagraph
