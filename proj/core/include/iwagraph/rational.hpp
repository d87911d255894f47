#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iwagraph {

// Exact arithmetic throughout: GMP rationals, always canonical (lowest terms,
// positive denominator). No floating point anywhere in the library.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n" or "n/d" with optional leading '-'. Throws input_error on
// malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

// Prints as "n" or "n/d", the same grammar parse_rational accepts.
std::string rational_str(const Rational& q);

bool is_prime(std::uint32_t n);

// Element of the value group of v_p: a rational or +infinity (the valuation
// of zero). Infinity is absorbing under addition and maximal in the order.
class Valuation {
 public:
  Valuation() : infinite_(true) {}
  static Valuation infinity() { return Valuation(); }
  static Valuation of(Rational v) { return Valuation(std::move(v)); }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw std::domain_error("Valuation: value() of infinity");
    return value_;
  }

  Valuation operator+(const Valuation& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return of(value_ + o.value_);
  }
  bool operator==(const Valuation& o) const {
    if (infinite_ != o.infinite_) return false;
    return infinite_ || value_ == o.value_;
  }
  bool operator<(const Valuation& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
  }

  std::string str() const { return infinite_ ? "inf" : rational_str(value_); }

 private:
  explicit Valuation(Rational v) : infinite_(false), value_(std::move(v)) {}
  bool infinite_;
  Rational value_;
};

// v_p of an integer; n must be nonzero.
long val_p_integer(const Integer& n, std::uint32_t p);

// v_p(q) = v_p(num) - v_p(den), infinity for q = 0.
Valuation val_p_rational(const Rational& q, std::uint32_t p);

// Finite v_p of a nonzero rational, as a plain integer exponent.
long val_p_nonzero(const Rational& q, std::uint32_t p);

// p^e for a (possibly negative) integer exponent.
Rational rational_pow(std::uint32_t p, long e);

}  // namespace iwagraph
