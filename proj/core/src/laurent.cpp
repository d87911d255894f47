#include "iwagraph/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "iwagraph/errors.hpp"

namespace iwagraph {

LaurentPolynomial LaurentPolynomial::constant(int dims, Rational c) {
  LaurentPolynomial f(dims);
  if (c != 0) f.terms_[Exponents(static_cast<std::size_t>(dims), 0)] = std::move(c);
  return f;
}

LaurentPolynomial LaurentPolynomial::monomial(int dims, Exponents e, Rational c) {
  if (static_cast<int>(e.size()) != dims)
    throw std::invalid_argument("LaurentPolynomial: exponent arity mismatch");
  LaurentPolynomial f(dims);
  if (c != 0) f.terms_[std::move(e)] = std::move(c);
  return f;
}

LaurentPolynomial LaurentPolynomial::u_pow_minus_one(int dims, const Exponents& a) {
  LaurentPolynomial f = monomial(dims, a, Rational(1));
  f.add_term(Exponents(static_cast<std::size_t>(dims), 0), Rational(-1));
  return f;
}

Rational LaurentPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  // The zero polynomial is arity-agnostic (generic ring code builds T(0)
  // without knowing the variable count).
  if (dims_ != o.dims_ && !is_zero() && !o.is_zero())
    throw std::invalid_argument("LaurentPolynomial: arity mismatch");
  LaurentPolynomial r = is_zero() ? LaurentPolynomial(o.dims_) : *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  if (dims_ != o.dims_ && !is_zero() && !o.is_zero())
    throw std::invalid_argument("LaurentPolynomial: arity mismatch");
  LaurentPolynomial r = is_zero() ? LaurentPolynomial(o.dims_) : *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(dims_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (dims_ != o.dims_) {
    if (is_zero() || o.is_zero()) return LaurentPolynomial(std::max(dims_, o.dims_));
    throw std::invalid_argument("LaurentPolynomial: arity mismatch");
  }
  LaurentPolynomial r(dims_);
  Exponents sum(static_cast<std::size_t>(dims_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      r.add_term(sum, ca * cb);
    }
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& s) const {
  LaurentPolynomial r(dims_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponents& by) const {
  if (static_cast<int>(by.size()) != dims_)
    throw std::invalid_argument("LaurentPolynomial: shift arity mismatch");
  LaurentPolynomial r(dims_);
  Exponents e2(static_cast<std::size_t>(dims_));
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e2.size(); ++i) e2[i] = e[i] + by[i];
    r.terms_[e2] = c;
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned long e) const {
  LaurentPolynomial acc = constant(dims_, Rational(1));
  LaurentPolynomial base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string LaurentPolynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << rational_str(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*";
      if (i < names.size())
        out << names[i];
      else if (dims_ == 1)
        out << "u";
      else
        out << "u" << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  return out.str();
}

CyclotomicNumber laurent_eval(const LaurentPolynomial& f,
                              const std::vector<CyclotomicNumber>& zeta) {
  if (static_cast<int>(zeta.size()) != f.dims())
    throw std::invalid_argument("laurent_eval: argument arity mismatch");
  for (const auto& z : zeta)
    if (z.is_zero()) throw std::domain_error("laurent_eval: zero evaluation point");
  std::uint32_t p = zeta.empty() ? 2 : zeta[0].prime();
  // Per-variable power cache; supports are small in practice.
  std::vector<std::map<std::int32_t, CyclotomicNumber>> powers(zeta.size());
  auto power = [&](std::size_t i, std::int32_t e) {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    CyclotomicNumber v = zeta[i].pow(e);
    powers[i].emplace(e, v);
    return v;
  };
  CyclotomicNumber acc = CyclotomicNumber::from_rational(p, Rational(0));
  for (const auto& [e, c] : f.terms()) {
    CyclotomicNumber term = CyclotomicNumber::from_rational(p, c);
    for (std::size_t i = 0; i < zeta.size(); ++i) {
      if (e[i] == 0) continue;
      term *= power(i, e[i]);
    }
    acc += term;
  }
  return acc;
}

NormalizedLaurent laurent_normalize(const LaurentPolynomial& f, std::uint32_t p) {
  if (f.is_zero())
    throw std::domain_error("laurent_normalize: mu undefined for the zero element");
  if (!is_prime(p)) throw input_error("laurent_normalize: p must be prime");
  bool have = false;
  long mu = 0;
  for (const auto& [e, c] : f.terms()) {
    long v = val_p_nonzero(c, p);
    if (!have || v < mu) mu = v;
    have = true;
  }
  return {mu, f.scaled(rational_pow(p, -mu))};
}

LaurentPolynomial substitute_laurent(const LaurentPolynomial& f,
                                     const std::vector<LaurentPolynomial>& args) {
  if (static_cast<int>(args.size()) != f.dims())
    throw std::invalid_argument("substitute_laurent: arity mismatch");
  int out_dims = args.empty() ? 1 : args[0].dims();
  // Power caches keyed by exponent, one per substituted variable.
  std::vector<std::map<std::int32_t, LaurentPolynomial>> powers(args.size());
  auto power = [&](std::size_t i, std::int32_t e) {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    if (e < 0) throw std::domain_error("substitute_laurent: negative exponent");
    LaurentPolynomial v = args[i].pow(static_cast<unsigned long>(e));
    powers[i].emplace(e, v);
    return v;
  };
  LaurentPolynomial acc = LaurentPolynomial::zero(out_dims);
  for (const auto& [e, c] : f.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(out_dims, c);
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (e[i] == 0) continue;
      term *= power(i, e[i]);
      if (term.is_zero()) break;
    }
    acc += term;
  }
  return acc;
}

}  // namespace iwagraph
