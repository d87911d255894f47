#include "iwagraph/matrix.hpp"

namespace iwagraph {

Rational bareiss_determinant(const Matrix<Rational>& in) {
  std::size_t n = in.rows();
  if (n != in.cols()) throw std::invalid_argument("bareiss_determinant: not square");
  if (n == 0) return Rational(1);

  // Scale each row to integers; det picks up the product of scales.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
              in.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = in.at(i, j) * Rational(row_lcm);
      m[i][j] = scaled.get_num();
    }
    scale *= row_lcm;
  }

  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return Rational(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational det(m[n - 1][n - 1]);
  det /= Rational(scale);
  if (sign < 0) det = -det;
  return det;
}

std::optional<std::vector<Rational>> solve_linear(Matrix<Rational> a,
                                                  std::vector<Rational> b) {
  std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw std::invalid_argument("solve_linear: shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a.at(pivot, k) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      std::swap(b[k], b[pivot]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rational f = a.at(i, k) / a.at(k, k);
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / a.at(k, k);
  return x;
}

}  // namespace iwagraph
