#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "iwagraph/laurent.hpp"

namespace iwagraph {

// Finitely supported map Z^d -> F_p, the image of a normalized Laurent
// polynomial under coefficient-wise reduction.  Monomials are units, so
// divisibility questions are settled up to monomial shifts.
class ModpLaurent {
 public:
  ModpLaurent() : dims_(1), p_(2) {}
  ModpLaurent(int dims, std::uint32_t p) : dims_(dims), p_(p) {}

  int dims() const { return dims_; }
  std::uint32_t p() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, std::uint32_t>& terms() const { return terms_; }

  bool operator==(const ModpLaurent& o) const {
    return dims_ == o.dims_ && p_ == o.p_ && terms_ == o.terms_;
  }

  ModpLaurent operator+(const ModpLaurent& o) const;
  ModpLaurent operator-(const ModpLaurent& o) const;
  ModpLaurent operator*(const ModpLaurent& o) const;

  ModpLaurent shifted(const Exponents& by) const;
  // Divides out the largest common monomial: every variable then has minimum
  // exponent zero over the support.
  ModpLaurent monomial_primitive_part() const;
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Exponents& e, std::uint32_t c);

  std::string str() const;

 private:
  int dims_;
  std::uint32_t p_;
  std::map<Exponents, std::uint32_t> terms_;
};

// Coefficient-wise reduction of a normalized Laurent polynomial; rejects any
// coefficient with negative p-valuation.
ModpLaurent mod_p_reduce(const LaurentPolynomial& f, std::uint32_t p);

// Exact division in F_p[u_1..u_d] for operands with non-negative exponents;
// nullopt when the division leaves a remainder.
std::optional<ModpLaurent> divide_exact(const ModpLaurent& f, const ModpLaurent& g);

// d = 1 only: the order of vanishing at T = 0 after rewriting in T = u - 1,
// i.e. the multiplicity of the root u = 1.  Rejects the zero element.
long ord_T_d1(const ModpLaurent& g);

// Largest k with (u^a - 1)^k dividing g in the Laurent ring; a must represent
// an element of Gamma \ Gamma^p (not componentwise divisible by p).
int trial_divide_sigma(const ModpLaurent& g, const Exponents& a);

}  // namespace iwagraph
