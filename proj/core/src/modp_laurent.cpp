#include "iwagraph/modp_laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "iwagraph/errors.hpp"

namespace iwagraph {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and a != 0 mod p.
  std::uint64_t acc = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

void ModpLaurent::add_term(const Exponents& e, std::uint32_t c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

ModpLaurent ModpLaurent::operator+(const ModpLaurent& o) const {
  if (dims_ != o.dims_ || p_ != o.p_)
    throw std::invalid_argument("ModpLaurent: incompatible operands");
  ModpLaurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ModpLaurent ModpLaurent::operator-(const ModpLaurent& o) const {
  if (dims_ != o.dims_ || p_ != o.p_)
    throw std::invalid_argument("ModpLaurent: incompatible operands");
  ModpLaurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, p_ - c);
  return r;
}

ModpLaurent ModpLaurent::operator*(const ModpLaurent& o) const {
  if (dims_ != o.dims_ || p_ != o.p_)
    throw std::invalid_argument("ModpLaurent: incompatible operands");
  ModpLaurent r(dims_, p_);
  Exponents sum(static_cast<std::size_t>(dims_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      r.add_term(sum, static_cast<std::uint32_t>(
                          static_cast<std::uint64_t>(ca) * cb % p_));
    }
  }
  return r;
}

ModpLaurent ModpLaurent::shifted(const Exponents& by) const {
  ModpLaurent r(dims_, p_);
  Exponents e2(static_cast<std::size_t>(dims_));
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e2.size(); ++i) e2[i] = e[i] + by[i];
    r.terms_[e2] = c;
  }
  return r;
}

ModpLaurent ModpLaurent::monomial_primitive_part() const {
  if (terms_.empty()) return *this;
  Exponents mins = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], e[i]);
  for (auto& m : mins) m = -m;
  return shifted(mins);
}

std::string ModpLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*u" << (dims_ == 1 ? std::string() : std::to_string(i + 1));
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  return out.str();
}

ModpLaurent mod_p_reduce(const LaurentPolynomial& f, std::uint32_t p) {
  if (!is_prime(p)) throw input_error("mod_p_reduce: p must be prime");
  ModpLaurent r(f.dims(), p);
  for (const auto& [e, c] : f.terms()) {
    const Integer& num = c.get_num();
    const Integer& den = c.get_den();
    std::uint32_t dm = static_cast<std::uint32_t>(
        mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p)));
    if (dm == 0)
      throw std::domain_error("mod_p_reduce: coefficient with negative valuation");
    std::uint32_t nm = static_cast<std::uint32_t>(
        mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p)));
    r.add_term(e, static_cast<std::uint32_t>(
                      static_cast<std::uint64_t>(nm) * mod_inverse(dm, p) % p));
  }
  return r;
}

std::optional<ModpLaurent> divide_exact(const ModpLaurent& f, const ModpLaurent& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  ModpLaurent rem = f;
  ModpLaurent quot(f.dims(), f.p());
  const auto lead_g = *g.terms().rbegin();
  std::uint32_t p = f.p();
  std::uint32_t lg_inv = mod_inverse(lead_g.second, p);
  Exponents shift(static_cast<std::size_t>(f.dims()));
  while (!rem.is_zero()) {
    const auto lead_r = *rem.terms().rbegin();
    // Monomial divisibility; with both operands shifted to non-negative
    // exponents this is exactly componentwise <=.
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = lead_r.first[i] - lead_g.first[i];
      if (shift[i] < 0) return std::nullopt;
    }
    std::uint32_t coef = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(lead_r.second) * lg_inv % p);
    ModpLaurent t(f.dims(), p);
    t.add_term(shift, coef);
    quot = quot + t;
    rem = rem - t * g;
  }
  return quot;
}

long ord_T_d1(const ModpLaurent& g) {
  if (g.dims() != 1) throw std::invalid_argument("ord_T_d1: needs d = 1");
  if (g.is_zero()) throw std::domain_error("ord_T_d1: zero element");
  ModpLaurent poly = g.monomial_primitive_part();
  std::uint32_t p = g.p();
  // Dense coefficients of a genuine polynomial in u; the order at T = 0 is
  // the multiplicity of the root u = 1.
  std::size_t deg = static_cast<std::size_t>(poly.terms().rbegin()->first[0]);
  std::vector<std::uint32_t> c(deg + 1, 0);
  for (const auto& [e, v] : poly.terms()) c[static_cast<std::size_t>(e[0])] = v;
  long order = 0;
  while (true) {
    std::uint64_t at_one = 0;
    for (std::uint32_t v : c) at_one += v;
    if (at_one % p != 0) return order;
    // Synthetic division by (u - 1).
    std::vector<std::uint32_t> q(c.size() - 1, 0);
    std::uint32_t carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = (carry + c[i]) % p;
      q[i - 1] = carry;
    }
    c = std::move(q);
    ++order;
    if (c.empty()) throw std::domain_error("ord_T_d1: zero element");
  }
}

int trial_divide_sigma(const ModpLaurent& g, const Exponents& a) {
  if (static_cast<int>(a.size()) != g.dims())
    throw std::invalid_argument("trial_divide_sigma: arity mismatch");
  if (g.is_zero()) throw std::domain_error("trial_divide_sigma: zero element");
  std::uint32_t p = g.p();
  bool unit_direction = false;
  for (auto e : a)
    if (e % static_cast<std::int32_t>(p) != 0) unit_direction = true;
  if (!unit_direction)
    throw std::domain_error("trial_divide_sigma: a is trivial mod p");
  ModpLaurent divisor(g.dims(), p);
  divisor.add_term(a, 1);
  divisor.add_term(Exponents(a.size(), 0), p - 1);
  divisor = divisor.monomial_primitive_part();
  ModpLaurent rem = g.monomial_primitive_part();
  int count = 0;
  while (true) {
    auto q = divide_exact(rem, divisor);
    if (!q) return count;
    rem = *q;
    ++count;
  }
}

}  // namespace iwagraph
