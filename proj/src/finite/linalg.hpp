#pragma once

#include <optional>
#include <vector>

#include "poly/poly.hpp"

namespace secant {

// Dense matrix over a BaseRing, entries canonical.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Coeff(0)) {}
  static Matrix identity(const BaseRing& R, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Coeff& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  bool is_zero() const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Coeff> a_;
};

Matrix mat_mul(const BaseRing& R, const Matrix& A, const Matrix& B);
Matrix mat_add(const BaseRing& R, const Matrix& A, const Matrix& B);
Matrix mat_scale(const BaseRing& R, const Matrix& A, const Coeff& c);
Matrix mat_map(const Matrix& A, const BaseRing& from, const BaseRing& to);  // canonical lift, then reduce
std::vector<Coeff> mat_vec(const BaseRing& R, const Matrix& A, const std::vector<Coeff>& v);

// Generic Berkowitz: coefficients of det(t*I - A), highest degree first.
// Division free, valid over any commutative ring.
template <class T, class Ops>
std::vector<T> berkowitz(const std::vector<std::vector<T>>& A, const Ops& ops) {
  const std::size_t n = A.size();
  std::vector<T> prev{ops.one()};
  for (std::size_t k = 0; k < n; ++k) {
    // Leading (k+1) x (k+1) block: M = A[0..k)[0..k), R = A[k][0..k), C = A[0..k)[k].
    std::vector<T> t{ops.one(), ops.neg(A[k][k])};
    std::vector<T> col(k, ops.zero());
    for (std::size_t i = 0; i < k; ++i) col[i] = A[i][k];
    for (std::size_t m = 0; m < k; ++m) {
      T rc = ops.zero();
      for (std::size_t i = 0; i < k; ++i) rc = ops.add(rc, ops.mul(A[k][i], col[i]));
      t.push_back(ops.neg(rc));
      std::vector<T> next(k, ops.zero());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] = ops.add(next[i], ops.mul(A[i][j], col[j]));
      col = std::move(next);
    }
    // new = T * prev, T the (k+2) x (k+1) lower triangular Toeplitz matrix of t
    std::vector<T> cur(k + 2, ops.zero());
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= k && j <= i; ++j) cur[i] = ops.add(cur[i], ops.mul(t[i - j], prev[j]));
    prev = std::move(cur);
  }
  return prev;
}

// Characteristic polynomial coefficients, highest degree first.
std::vector<Coeff> charpoly(const BaseRing& R, const Matrix& A);
Coeff determinant(const BaseRing& R, const Matrix& A);
MultiPoly determinant(const PolyRingPtr& ring, const std::vector<PolyVector>& A);

// Evaluate sum c_i A^(deg-i) for coefficients given highest first.
Matrix mat_poly_eval(const BaseRing& R, const std::vector<Coeff>& coeffs, const Matrix& A);

// Field-only helpers.
std::size_t rank_over_field(const BaseRing& R, Matrix A);
std::optional<Matrix> inverse_over_field(const BaseRing& R, const Matrix& A);

struct SmithForm {
  Matrix D, U, V;  // U * A * V = D
  std::vector<Coeff> diagonal;  // nonzero elementary divisors, d_1 | d_2 | ...
};

// Over ZZ, fields, and local rings ZZ/p^e.
SmithForm smith_normal_form(const BaseRing& R, const Matrix& A);

// Basis of the integer kernel {x in ZZ^cols : A x = 0}.
std::vector<std::vector<mpz_class>> integer_kernel(const std::vector<std::vector<mpz_class>>& A, std::size_t cols);

// Prime power factorization by trial division and primality testing.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n);

}  // namespace secant
