#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "iwagraph/rational.hpp"

namespace iwagraph {

// Dense univariate polynomial over a commutative ring R. Coefficients are
// stored lowest degree first with no trailing zeros, so equality is
// structural and degree() is size-1 (-1 for the zero polynomial).
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  // Constant polynomial; lets Poly serve as a ring element in generic code.
  explicit Poly(int v) {
    if (v != 0) c_.push_back(R(v));
  }
  static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
  static Poly x() { return Poly(std::vector<R>{R(0), R(1)}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](std::size_t i) const { return c_[i]; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("Poly: leading() of zero");
    return c_.back();
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly operator+(const Poly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()), R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()), R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<R> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<R> r(c_.size() + o.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  Poly operator*(const R& s) const {
    std::vector<R> r(c_);
    for (auto& v : r) v = v * s;
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned long e) const {
    Poly result = constant(R(1));
    Poly base = *this;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  R eval(const R& x) const {
    R acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Euclidean division; requires an invertible leading coefficient in R
  // (used over fields only).
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly rem = *this;
    std::vector<R> q;
    long dd = d.degree();
    if (rem.degree() >= dd) q.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, R(0));
    R lc_inv = R(1) / d.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
      long shift = rem.degree() - dd;
      R factor = rem.leading() * lc_inv;
      q[static_cast<std::size_t>(shift)] = factor;
      std::vector<R> sub(rem.c_);
      for (long i = 0; i <= dd; ++i)
        sub[static_cast<std::size_t>(i + shift)] -= factor * d.c_[static_cast<std::size_t>(i)];
      sub.pop_back();  // leading term cancels exactly
      rem = Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
  }
  std::vector<R> c_;
};

// res(A, B) with the Sylvester convention: for monic A it equals the product
// of B over the roots of A. Computed by the subresultant pseudo-remainder
// sequence over Z; the rational overload clears denominators first.
Integer resultant(const Poly<Integer>& a, const Poly<Integer>& b);
Rational resultant(const Poly<Rational>& a, const Poly<Rational>& b);

}  // namespace iwagraph
