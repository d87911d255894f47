#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "iwagraph/cyclotomic.hpp"
#include "iwagraph/rational.hpp"

namespace iwagraph {

using Exponents = std::vector<std::int32_t>;

// Finitely supported map Z^d -> Q in the variables u_1, ..., u_d (u_i = 1 + T_i).
// Terms are kept in lexicographic exponent order with no zero coefficients, so
// operator== is structural equality.
class LaurentPolynomial {
 public:
  LaurentPolynomial() : dims_(1) {}
  explicit LaurentPolynomial(int dims) : dims_(dims) {}

  static LaurentPolynomial zero(int dims) { return LaurentPolynomial(dims); }
  static LaurentPolynomial constant(int dims, Rational c);
  static LaurentPolynomial monomial(int dims, Exponents e, Rational c);
  // u^a - 1, the building block for voltage exponents.
  static LaurentPolynomial u_pow_minus_one(int dims, const Exponents& a);

  int dims() const { return dims_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;

  bool operator==(const LaurentPolynomial& o) const {
    if (is_zero() && o.is_zero()) return true;
    return dims_ == o.dims_ && terms_ == o.terms_;
  }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  LaurentPolynomial scaled(const Rational& s) const;
  LaurentPolynomial shifted(const Exponents& by) const;  // multiply by u^by
  LaurentPolynomial pow(unsigned long e) const;

  void add_term(const Exponents& e, const Rational& c);

  // Generic-ring hooks (Matrix<T>, Poly<T> require these).
  explicit LaurentPolynomial(int dims, std::map<Exponents, Rational> terms)
      : dims_(dims), terms_(std::move(terms)) {}
  explicit LaurentPolynomial(long v) : dims_(1) {
    if (v != 0) terms_[Exponents(1, 0)] = Rational(v);
  }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int dims_;
  std::map<Exponents, Rational> terms_;
};

// Exact value of F at u_i := zeta_i; every zeta_i must be nonzero (they are
// roots of unity in practice, so negative exponents are fine).
CyclotomicNumber laurent_eval(const LaurentPolynomial& f,
                              const std::vector<CyclotomicNumber>& zeta);

struct NormalizedLaurent {
  long mu;                 // minimum coefficient valuation
  LaurentPolynomial unit;  // p^{-mu} * F; some coefficient is a p-adic unit
};

// Content extraction at p; rejects the zero polynomial.
NormalizedLaurent laurent_normalize(const LaurentPolynomial& f, std::uint32_t p);

// Evaluates a polynomial with non-negative exponents in 2N variables at
// Laurent-polynomial arguments (the substitution step of the orientation
// route for characteristic elements).
LaurentPolynomial substitute_laurent(const LaurentPolynomial& f,
                                     const std::vector<LaurentPolynomial>& args);

}  // namespace iwagraph
