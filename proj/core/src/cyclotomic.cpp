#include "iwagraph/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "iwagraph/errors.hpp"

namespace iwagraph {

std::size_t prime_power_totient(std::uint32_t p, std::uint32_t level) {
  if (level == 0) return 1;
  std::size_t t = p - 1;
  for (std::uint32_t i = 1; i < level; ++i) t *= p;
  return t;
}

Poly<Rational> cyclotomic_modulus(std::uint32_t p, std::uint32_t level) {
  if (level == 0) return Poly<Rational>({Rational(-1), Rational(1)});  // x - 1
  std::size_t step = 1;
  for (std::uint32_t i = 1; i < level; ++i) step *= p;
  std::vector<Rational> c(step * (p - 1) + 1, Rational(0));
  for (std::uint32_t j = 0; j < p; ++j) c[step * j] = Rational(1);
  return Poly<Rational>(std::move(c));
}

namespace {
constexpr std::size_t kMaxDegree = 1u << 20;

void check_params(std::uint32_t p, std::uint32_t level) {
  if (!is_prime(p)) throw input_error("cyclotomic: p must be prime");
  if (prime_power_totient(p, level) > kMaxDegree)
    throw input_error("cyclotomic: level too large");
}
}  // namespace

CyclotomicNumber CyclotomicNumber::from_rational(std::uint32_t p, Rational value,
                                                 std::uint32_t level) {
  check_params(p, level);
  std::vector<Rational> c(prime_power_totient(p, level), Rational(0));
  c[0] = std::move(value);
  return CyclotomicNumber(p, level, std::move(c));
}

CyclotomicNumber CyclotomicNumber::zeta(std::uint32_t p, std::uint32_t level) {
  check_params(p, level);
  std::size_t phi = prime_power_totient(p, level);
  if (level == 0) return from_rational(p, Rational(1));
  if (phi == 1) return CyclotomicNumber(p, level, {Rational(-1)});  // zeta_2
  std::vector<Rational> c(phi, Rational(0));
  c[1] = Rational(1);
  return CyclotomicNumber(p, level, std::move(c));
}

CyclotomicNumber CyclotomicNumber::from_polynomial(std::uint32_t p,
                                                   std::uint32_t level,
                                                   std::vector<Rational> raw) {
  check_params(p, level);
  std::size_t phi = prime_power_totient(p, level);
  if (level == 0) {
    // x = zeta_1 = 1: the value is the coefficient sum.
    Rational sum(0);
    for (const auto& c : raw) sum += c;
    return from_rational(p, sum);
  }
  CyclotomicNumber out(p, level, std::vector<Rational>(phi, Rational(0)));
  if (raw.size() < phi) raw.resize(phi, Rational(0));
  out.reduce(raw);
  out.coeffs_ = std::move(raw);
  return out;
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("CyclotomicNumber: not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lift_to_level(std::uint32_t level) const {
  if (level < level_) throw std::invalid_argument("lift_to_level: level decreases");
  if (level == level_) return *this;
  check_params(prime_, level);
  std::size_t stride = 1;
  for (std::uint32_t i = level_ == 0 ? 1 : level_; i < level; ++i) stride *= prime_;
  // zeta_{p^N} = zeta_{p^M}^{p^{M-N}}: basis index k maps to k * stride, which
  // stays below phi(p^M), so no modular reduction is needed.
  std::vector<Rational> c(prime_power_totient(prime_, level), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * stride] = coeffs_[k];
  return CyclotomicNumber(prime_, level, std::move(c));
}

CyclotomicNumber CyclotomicNumber::lower_to_level(std::uint32_t level) const {
  if (level > level_) throw std::invalid_argument("lower_to_level: level increases");
  if (level == level_) return *this;
  std::size_t stride = 1;
  for (std::uint32_t i = level == 0 ? 1 : level; i < level_; ++i) stride *= prime_;
  std::vector<Rational> c(prime_power_totient(prime_, level), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (k % stride != 0 || k / stride >= c.size())
      throw input_error("lower_to_level: value not in the subfield");
    c[k / stride] = coeffs_[k];
  }
  return CyclotomicNumber(prime_, level, std::move(c));
}

void CyclotomicNumber::align(CyclotomicNumber& a, CyclotomicNumber& b) {
  if (a.prime_ != b.prime_) {
    // A rational value is independent of the ambient cyclotomic field.
    if (a.is_rational() && a.level_ == 0)
      a = CyclotomicNumber(b.prime_, 0, {a.coeffs_[0]});
    else if (b.is_rational() && b.level_ == 0)
      b = CyclotomicNumber(a.prime_, 0, {b.coeffs_[0]});
    else
      throw std::invalid_argument("CyclotomicNumber: mixed primes");
  }
  std::uint32_t level = std::max(a.level_, b.level_);
  a = a.lift_to_level(level);
  b = b.lift_to_level(level);
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
  CyclotomicNumber a = *this, b = o;
  align(a, b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
  CyclotomicNumber a = *this, b = o;
  align(a, b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
  return a;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber a = *this;
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

void CyclotomicNumber::reduce(std::vector<Rational>& raw) const {
  std::size_t phi = prime_power_totient(prime_, level_);
  if (level_ == 0) return;
  std::size_t step = phi / (prime_ - 1);  // p^{N-1}
  // x^phi = -(1 + x^step + ... + x^{(p-2) step}); cascade from the top down.
  for (std::size_t k = raw.size(); k-- > phi;) {
    if (raw[k] == 0) continue;
    Rational c = raw[k];
    raw[k] = 0;
    for (std::uint32_t j = 0; j + 1 < prime_; ++j) raw[k - phi + j * step] -= c;
  }
  raw.resize(phi);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
  CyclotomicNumber a = *this, b = o;
  align(a, b);
  std::size_t n = a.coeffs_.size();
  if (n == 1)
    return CyclotomicNumber(a.prime_, a.level_, {a.coeffs_[0] * b.coeffs_[0]});
  std::vector<Rational> raw(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  a.reduce(raw);
  return CyclotomicNumber(a.prime_, a.level_, std::move(raw));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  if (prime_ != o.prime_)
    return is_rational() && o.is_rational() && rational_value() == o.rational_value();
  CyclotomicNumber a = *this, b = o;
  align(a, b);
  return a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& s) const {
  CyclotomicNumber a = *this;
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
  if (coeffs_.size() == 1) {
    Rational inv(1);
    inv /= coeffs_[0];
    return CyclotomicNumber(prime_, level_, {inv});
  }
  // Extended Euclid in Q[x] against the (irreducible) modulus.
  Poly<Rational> r0 = cyclotomic_modulus(prime_, level_);
  Poly<Rational> r1(coeffs_);
  Poly<Rational> s0 = Poly<Rational>::constant(Rational(0));
  Poly<Rational> s1 = Poly<Rational>::constant(Rational(1));
  while (r1.degree() > 0) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    Poly<Rational> s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  // r1 is a nonzero constant: s1 * this == r1 (mod Phi).
  Rational unit(1);
  unit /= r1.coeff(0);
  std::vector<Rational> c(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < s1.coeffs().size(); ++i) c[i] = s1.coeffs()[i] * unit;
  return CyclotomicNumber(prime_, level_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber base = *this;
  CyclotomicNumber acc = from_rational(prime_, Rational(1), level_);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Rational CyclotomicNumber::norm() const {
  if (level_ == 0) return coeffs_[0];
  if (is_zero()) return Rational(0);
  return resultant(cyclotomic_modulus(prime_, level_), Poly<Rational>(coeffs_));
}

Valuation CyclotomicNumber::valuation() const {
  if (is_zero()) return Valuation::infinity();
  Rational v(val_p_nonzero(norm(), prime_));
  v /= Rational(static_cast<unsigned long>(prime_power_totient(prime_, level_)));
  return Valuation::of(v);
}

std::string CyclotomicNumber::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    out << rational_str(coeffs_[i]);
    if (i > 0) out << "*z^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace iwagraph
