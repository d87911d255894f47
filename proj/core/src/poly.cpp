#include "iwagraph/poly.hpp"

#include <cstdlib>

namespace iwagraph {

namespace {

Integer content(const Poly<Integer>& a) {
  Integer g(0);
  for (const auto& c : a.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g == 0 ? Integer(1) : g;
}

Poly<Integer> divide_exact(const Poly<Integer>& a, const Integer& d) {
  std::vector<Integer> r(a.coeffs());
  for (auto& c : r) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    c = q;
  }
  return Poly<Integer>(std::move(r));
}

Integer int_pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// prem(A, B): the pseudo-remainder R with lc(B)^{deg A - deg B + 1} A = BQ + R.
Poly<Integer> prem(const Poly<Integer>& a, const Poly<Integer>& b) {
  const Integer d = b.leading();
  long e = a.degree() - b.degree() + 1;
  Poly<Integer> r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    long shift = r.degree() - b.degree();
    std::vector<Integer> s(static_cast<std::size_t>(shift), Integer(0));
    for (const auto& c : b.coeffs()) s.push_back(c * r.leading());
    r = r * d - Poly<Integer>(std::move(s));
    --e;
  }
  if (e > 0) r = r * int_pow(d, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Integer resultant(const Poly<Integer>& a_in, const Poly<Integer>& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return Integer(0);
  Poly<Integer> a = a_in, b = b_in;
  Integer ca = content(a), cb = content(b);
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);
  Integer g(1), h(1);
  int s = 1;
  Integer t = int_pow(ca, static_cast<unsigned long>(b.degree())) *
              int_pow(cb, static_cast<unsigned long>(a.degree()));
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
  }
  while (b.degree() > 0) {
    long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    Poly<Integer> r = prem(a, b);
    a = b;
    b = divide_exact(r, g * int_pow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta > 0) {
      Integer num = int_pow(g, static_cast<unsigned long>(delta));
      Integer den = int_pow(h, static_cast<unsigned long>(delta - 1));
      Integer q;
      mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      h = q;
    }
    if (b.is_zero()) return Integer(0);
  }
  // deg(b) == 0, b nonzero
  long da = a.degree();
  Integer num = int_pow(b.leading(), static_cast<unsigned long>(da));
  Integer den = da > 0 ? int_pow(h, static_cast<unsigned long>(da - 1)) : Integer(1);
  Integer hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return (s < 0 ? Integer(-1) : Integer(1)) * t * hh;
}

Rational resultant(const Poly<Rational>& a, const Poly<Rational>& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  auto clear = [](const Poly<Rational>& p, Integer& scale) {
    scale = 1;
    for (const auto& c : p.coeffs())
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
      Rational scaled = c * Rational(scale);
      r.push_back(scaled.get_num());
    }
    return Poly<Integer>(std::move(r));
  };
  Integer la, lb;
  Poly<Integer> ai = clear(a, la), bi = clear(b, lb);
  Rational res(resultant(ai, bi));
  // res(A/la, B/lb) = la^{-deg B} lb^{-deg A} res(A, B)
  Integer da, db;
  mpz_pow_ui(da.get_mpz_t(), la.get_mpz_t(), static_cast<unsigned long>(b.degree()));
  mpz_pow_ui(db.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
  res /= Rational(da * db);
  return res;
}

}  // namespace iwagraph
