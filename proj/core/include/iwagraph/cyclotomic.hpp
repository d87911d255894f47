#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwagraph/poly.hpp"
#include "iwagraph/rational.hpp"

namespace iwagraph {

// phi(p^n): 1 for n = 0, otherwise p^{n-1}(p-1).
std::size_t prime_power_totient(std::uint32_t p, std::uint32_t level);

// The p^level-th cyclotomic polynomial Phi_{p^N}(x) = Phi_p(x^{p^{N-1}});
// Phi_1 = x - 1 for level 0.
Poly<Rational> cyclotomic_modulus(std::uint32_t p, std::uint32_t level);

// Element of Q(zeta_{p^N}) represented by its coordinate vector in the power
// basis 1, x, ..., x^{phi(p^N)-1} of Q[x]/(Phi_{p^N}).  Level 0 is Q itself.
// Mixed-level operands require the same p and are lifted to the larger level;
// the lift maps basis index k to k * p^{M-N}, which stays inside the power
// basis, so lift followed by lower_to_level is the identity.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : prime_(2), level_(0), coeffs_{Rational(0)} {}

  static CyclotomicNumber from_rational(std::uint32_t p, Rational value,
                                        std::uint32_t level = 0);
  // The canonical generator zeta_{p^level}.
  static CyclotomicNumber zeta(std::uint32_t p, std::uint32_t level);
  // The class of sum raw[k] x^k, reduced mod Phi_{p^level}; raw may have any
  // length.  This is the cheap way to evaluate at powers of one generator.
  static CyclotomicNumber from_polynomial(std::uint32_t p, std::uint32_t level,
                                          std::vector<Rational> raw);

  std::uint32_t prime() const { return prime_; }
  std::uint32_t level() const { return level_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()

  CyclotomicNumber lift_to_level(std::uint32_t level) const;
  // Rewrites the value at a smaller level; throws input_error if the value
  // does not lie in the subfield.
  CyclotomicNumber lower_to_level(std::uint32_t level) const;

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
  bool operator==(const CyclotomicNumber& o) const;

  CyclotomicNumber scaled(const Rational& s) const;
  CyclotomicNumber inverse() const;  // throws std::domain_error on zero
  CyclotomicNumber pow(long e) const;

  // Field norm down to Q, via res(Phi_{p^N}, representative).  A level-0
  // value is returned unchanged.
  Rational norm() const;

  // The unique extension of v_p: v_p(norm) / phi(p^N).  Infinity for zero.
  Valuation valuation() const;

  std::string str() const;

  // Arithmetic helpers used by generic code (Matrix, Poly).
  explicit CyclotomicNumber(int v)
      : prime_(2), level_(0), coeffs_{Rational(v)} {}

 private:
  CyclotomicNumber(std::uint32_t p, std::uint32_t level, std::vector<Rational> c)
      : prime_(p), level_(level), coeffs_(std::move(c)) {}
  void reduce(std::vector<Rational>& raw) const;  // mod Phi_{p^level}
  static void align(CyclotomicNumber& a, CyclotomicNumber& b);

  std::uint32_t prime_;
  std::uint32_t level_;
  std::vector<Rational> coeffs_;
};

}  // namespace iwagraph
