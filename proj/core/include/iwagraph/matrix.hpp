#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "iwagraph/poly.hpp"
#include "iwagraph/rational.hpp"

namespace iwagraph {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // Submatrix with row r and column c deleted.
  Matrix minor_matrix(std::size_t r, std::size_t c) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m.at(mi, mj) = at(i, j);
        ++mj;
      }
      ++mi;
    }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

// Exact determinant of a rational matrix: rows are scaled to integers, then
// Bareiss fraction-free elimination runs over Z.
Rational bareiss_determinant(const Matrix<Rational>& m);

// Exact solve of a square rational system; nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(Matrix<Rational> a,
                                                  std::vector<Rational> b);

// Determinant over an arbitrary commutative ring by cofactor expansion with
// minors memoized on column subsets. O(2^n) ring elements; meant for n <= ~10.
template <class T>
T cofactor_determinant(const Matrix<T>& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("cofactor_determinant: not square");
  if (n == 0) return T(1);
  if (n > 20) throw std::invalid_argument("cofactor_determinant: matrix too large");
  std::vector<T> memo(std::size_t(1) << n, T(0));
  // Subsets ordered by popcount; minor over columns S uses rows 0..|S|-1.
  std::vector<std::vector<std::uint32_t>> by_count(n + 1);
  for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s)
    by_count[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
  for (std::uint32_t s : by_count[1]) {
    std::size_t j = static_cast<std::size_t>(__builtin_ctz(s));
    memo[s] = m.at(0, j);
  }
  for (std::size_t c = 2; c <= n; ++c) {
    for (std::uint32_t s : by_count[c]) {
      T acc(0);
      int pos = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(s & (std::uint32_t(1) << j))) continue;
        // Expansion along row c-1; sign is (-1)^{(c-1)+pos}.
        bool sign_plus = ((static_cast<std::size_t>(pos) + (c - 1)) % 2) == 0;
        const T& entry = m.at(c - 1, j);
        if (!(entry == T(0))) {
          T term = entry * memo[s ^ (std::uint32_t(1) << j)];
          if (sign_plus)
            acc += term;
          else
            acc -= term;
        }
        ++pos;
      }
      memo[s] = acc;
    }
  }
  return memo[(std::uint32_t(1) << n) - 1];
}

// Berkowitz characteristic polynomial det(xI - A); division-free, so it works
// over any commutative ring.
template <class T>
Poly<T> berkowitz_charpoly(const Matrix<T>& a) {
  std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("berkowitz_charpoly: not square");
  if (n == 0) return Poly<T>::constant(T(1));
  // v holds coefficients highest degree first.
  std::vector<T> v{T(1), T(0) - a.at(0, 0)};
  for (std::size_t r = 2; r <= n; ++r) {
    // q[k] = R M^k C over the leading (r-1)x(r-1) block.
    std::vector<T> col(r - 1);
    for (std::size_t i = 0; i < r - 1; ++i) col[i] = a.at(i, r - 1);
    std::vector<T> q(r - 1, T(0));
    for (std::size_t i = 0; i < r - 1; ++i) q[0] += a.at(r - 1, i) * col[i];
    for (std::size_t k = 1; k < r - 1; ++k) {
      std::vector<T> next(r - 1, T(0));
      for (std::size_t i = 0; i < r - 1; ++i)
        for (std::size_t j = 0; j < r - 1; ++j) next[i] += a.at(i, j) * col[j];
      col = next;
      for (std::size_t i = 0; i < r - 1; ++i) q[k] += a.at(r - 1, i) * col[i];
    }
    // First column of the (r+1) x r Toeplitz factor.
    std::vector<T> head(r + 1, T(0));
    head[0] = T(1);
    head[1] = T(0) - a.at(r - 1, r - 1);
    for (std::size_t k = 0; k < r - 1; ++k) head[k + 2] = T(0) - q[k];
    std::vector<T> next(r + 1, T(0));
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < r && j <= i; ++j) next[i] += head[i - j] * v[j];
    v = next;
  }
  // Poly stores lowest degree first.
  std::vector<T> coeffs(v.rbegin(), v.rend());
  return Poly<T>(std::move(coeffs));
}

// Ring determinant: cofactor expansion for small sizes, Berkowitz beyond.
template <class T>
T ring_determinant(const Matrix<T>& m) {
  if (m.rows() <= 8) return cofactor_determinant(m);
  Poly<T> cp = berkowitz_charpoly(m);
  T d = cp.coeff(0);  // det(xI - A) at x = 0 is (-1)^n det(A)
  return (m.rows() % 2 == 0) ? d : T(0) - d;
}

}  // namespace iwagraph
