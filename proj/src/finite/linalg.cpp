#include "finite/linalg.hpp"

#include <utility>

namespace secant {

namespace {

struct CoeffOps {
  const BaseRing& R;
  Coeff zero() const { return R.zero(); }
  Coeff one() const { return R.one(); }
  Coeff add(const Coeff& a, const Coeff& b) const { return R.add(a, b); }
  Coeff mul(const Coeff& a, const Coeff& b) const { return R.mul(a, b); }
  Coeff neg(const Coeff& a) const { return R.neg(a); }
};

struct PolyOps {
  const PolyRingPtr& ring;
  MultiPoly zero() const { return MultiPoly(ring); }
  MultiPoly one() const { return MultiPoly::constant(ring, ring->base.one()); }
  MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
  MultiPoly neg(const MultiPoly& a) const { return -a; }
};

std::vector<std::vector<Coeff>> to_rows(const Matrix& A) {
  std::vector<std::vector<Coeff>> rows(A.rows(), std::vector<Coeff>(A.cols()));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) rows[i][j] = A.at(i, j);
  return rows;
}

void swap_rows(Matrix& A, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
}

void swap_cols(Matrix& A, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
}

// row_i <- a*row_i + b*row_j, row_j <- c*row_i + d*row_j (simultaneously)
void mix_rows(const BaseRing& R, Matrix& A, std::size_t i, std::size_t j, const Coeff& a, const Coeff& b,
              const Coeff& c, const Coeff& d) {
  for (std::size_t k = 0; k < A.cols(); ++k) {
    Coeff x = A.at(i, k), y = A.at(j, k);
    A.at(i, k) = R.add(R.mul(a, x), R.mul(b, y));
    A.at(j, k) = R.add(R.mul(c, x), R.mul(d, y));
  }
}

void mix_cols(const BaseRing& R, Matrix& A, std::size_t i, std::size_t j, const Coeff& a, const Coeff& b,
              const Coeff& c, const Coeff& d) {
  for (std::size_t k = 0; k < A.rows(); ++k) {
    Coeff x = A.at(k, i), y = A.at(k, j);
    A.at(k, i) = R.add(R.mul(a, x), R.mul(b, y));
    A.at(k, j) = R.add(R.mul(c, x), R.mul(d, y));
  }
}

// row_i -= q * row_j
void sub_row(const BaseRing& R, Matrix& A, std::size_t i, std::size_t j, const Coeff& q) {
  for (std::size_t k = 0; k < A.cols(); ++k) A.at(i, k) = R.sub(A.at(i, k), R.mul(q, A.at(j, k)));
}

void sub_col(const BaseRing& R, Matrix& A, std::size_t i, std::size_t j, const Coeff& q) {
  for (std::size_t k = 0; k < A.rows(); ++k) A.at(k, i) = R.sub(A.at(k, i), R.mul(q, A.at(k, j)));
}

void scale_row(const BaseRing& R, Matrix& A, std::size_t i, const Coeff& u) {
  for (std::size_t k = 0; k < A.cols(); ++k) A.at(i, k) = R.mul(u, A.at(i, k));
}

bool is_local_or_field(const BaseRing& R) {
  if (R.kind() != BaseRing::Kind::IntegersMod) return R.kind() != BaseRing::Kind::Integers;
  auto f = factor_integer(R.modulus());
  return f.size() <= 1;
}

// Smith form over ZZ using gcd transforms.
void smith_integers(const BaseRing& R, Matrix& D, Matrix& U, Matrix& V) {
  const std::size_t r = D.rows(), c = D.cols();
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // pivot: smallest nonzero absolute value
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (!R.is_zero(D.at(i, j)) && (!best || abs(D.at(i, j)) < abs(D.at(best->first, best->second))))
          best = {{i, j}};
    if (!best) break;
    swap_rows(D, t, best->first);
    swap_rows(U, t, best->first);
    swap_cols(D, t, best->second);
    swap_cols(V, t, best->second);
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (R.is_zero(D.at(i, t))) continue;
        Coeff a = D.at(t, t), b = D.at(i, t);
        if (R.divides(a, b)) {
          Coeff q = R.exact_div(b, a);
          sub_row(R, D, i, t, q);
          sub_row(R, U, i, t, q);
        } else {
          auto g = R.gcdext(a, b);
          Coeff ag = R.exact_div(a, g.g), bg = R.exact_div(b, g.g);
          mix_rows(R, D, t, i, g.s, g.t, R.neg(bg), ag);
          mix_rows(R, U, t, i, g.s, g.t, R.neg(bg), ag);
        }
        changed = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (R.is_zero(D.at(t, j))) continue;
        Coeff a = D.at(t, t), b = D.at(t, j);
        if (R.divides(a, b)) {
          Coeff q = R.exact_div(b, a);
          sub_col(R, D, j, t, q);
          sub_col(R, V, j, t, q);
        } else {
          auto g = R.gcdext(a, b);
          Coeff ag = R.exact_div(a, g.g), bg = R.exact_div(b, g.g);
          mix_cols(R, D, t, j, g.s, g.t, R.neg(bg), ag);
          mix_cols(R, V, t, j, g.s, g.t, R.neg(bg), ag);
        }
        changed = true;
      }
      if (changed) continue;
      // divisibility of the remaining block
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < r && !bad; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!R.divides(D.at(t, t), D.at(i, j))) {
            bad = i;
            break;
          }
      if (!bad) break;
      sub_row(R, D, t, *bad, Coeff(-1));
      sub_row(R, U, t, *bad, Coeff(-1));
    }
    if (D.at(t, t) < 0) {
      scale_row(R, D, t, Coeff(-1));
      scale_row(R, U, t, Coeff(-1));
    }
  }
}

// Smith form over a field or a local ring ZZ/p^e: an entry of minimal
// valuation divides every other entry.
void smith_local(const BaseRing& R, Matrix& D, Matrix& U, Matrix& V) {
  const std::size_t r = D.rows(), c = D.cols();
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (!R.is_zero(D.at(i, j)) &&
            (!best || R.ideal_size(D.at(i, j)) < R.ideal_size(D.at(best->first, best->second))))
          best = {{i, j}};
    if (!best) break;
    swap_rows(D, t, best->first);
    swap_rows(U, t, best->first);
    swap_cols(D, t, best->second);
    swap_cols(V, t, best->second);
    auto un = R.unit_normal(D.at(t, t));
    scale_row(R, D, t, un.unit);
    scale_row(R, U, t, un.unit);
    const Coeff p = D.at(t, t);
    for (std::size_t i = t + 1; i < r; ++i) {
      if (R.is_zero(D.at(i, t))) continue;
      Coeff q = R.exact_div(D.at(i, t), p);
      sub_row(R, D, i, t, q);
      sub_row(R, U, i, t, q);
    }
    for (std::size_t j = t + 1; j < c; ++j) {
      if (R.is_zero(D.at(t, j))) continue;
      Coeff q = R.exact_div(D.at(t, j), p);
      sub_col(R, D, j, t, q);
      sub_col(R, V, j, t, q);
    }
  }
}

}  // namespace

Matrix Matrix::identity(const BaseRing& R, std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = R.one();
  return I;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix mat_mul(const BaseRing& R, const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw Error(ErrorCode::InvalidArgument, "matrix dimensions do not match");
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      if (R.is_zero(A.at(i, k))) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) C.at(i, j) = R.add(C.at(i, j), R.mul(A.at(i, k), B.at(k, j)));
    }
  return C;
}

Matrix mat_add(const BaseRing& R, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw Error(ErrorCode::InvalidArgument, "matrix dimensions do not match");
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = R.add(A.at(i, j), B.at(i, j));
  return C;
}

Matrix mat_scale(const BaseRing& R, const Matrix& A, const Coeff& c) {
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = R.mul(c, A.at(i, j));
  return C;
}

Matrix mat_map(const Matrix& A, const BaseRing& from, const BaseRing& to) {
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      Coeff lifted = from.kind() == BaseRing::Kind::Integers ? A.at(i, j) : canonical_lift(A.at(i, j), from, BaseRing::integers());
      C.at(i, j) = to.from_rational(lifted);
    }
  return C;
}

std::vector<Coeff> mat_vec(const BaseRing& R, const Matrix& A, const std::vector<Coeff>& v) {
  std::vector<Coeff> out(A.rows(), R.zero());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out[i] = R.add(out[i], R.mul(A.at(i, j), v[j]));
  return out;
}

std::vector<Coeff> charpoly(const BaseRing& R, const Matrix& A) {
  if (A.rows() != A.cols()) throw Error(ErrorCode::InvalidArgument, "charpoly needs a square matrix");
  return berkowitz(to_rows(A), CoeffOps{R});
}

Coeff determinant(const BaseRing& R, const Matrix& A) {
  auto cp = charpoly(R, A);
  Coeff d = cp.back();
  return A.rows() % 2 == 0 ? d : R.neg(d);
}

MultiPoly determinant(const PolyRingPtr& ring, const std::vector<PolyVector>& A) {
  for (const auto& row : A)
    if (row.size() != A.size()) throw Error(ErrorCode::InvalidArgument, "determinant needs a square matrix");
  auto cp = berkowitz(A, PolyOps{ring});
  MultiPoly d = cp.back();
  return A.size() % 2 == 0 ? d : -d;
}

Matrix mat_poly_eval(const BaseRing& R, const std::vector<Coeff>& coeffs, const Matrix& A) {
  Matrix acc(A.rows(), A.cols());
  for (const auto& c : coeffs) acc = mat_add(R, mat_mul(R, acc, A), mat_scale(R, Matrix::identity(R, A.rows()), c));
  return acc;
}

std::size_t rank_over_field(const BaseRing& R, Matrix A) {
  if (!R.is_field()) throw Error(ErrorCode::UnsupportedBase, "rank over a non-field");
  std::size_t rank = 0;
  for (std::size_t c = 0; c < A.cols() && rank < A.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < A.rows() && R.is_zero(A.at(piv, c))) ++piv;
    if (piv == A.rows()) continue;
    swap_rows(A, rank, piv);
    Coeff inv = R.inverse(A.at(rank, c));
    scale_row(R, A, rank, inv);
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (i != rank && !R.is_zero(A.at(i, c))) sub_row(R, A, i, rank, A.at(i, c));
    ++rank;
  }
  return rank;
}

std::optional<Matrix> inverse_over_field(const BaseRing& R, const Matrix& A) {
  if (!R.is_field()) throw Error(ErrorCode::UnsupportedBase, "inverse over a non-field");
  const std::size_t n = A.rows();
  if (A.cols() != n) throw Error(ErrorCode::InvalidArgument, "inverse needs a square matrix");
  Matrix M = A, I = Matrix::identity(R, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && R.is_zero(M.at(piv, c))) ++piv;
    if (piv == n) return std::nullopt;
    swap_rows(M, c, piv);
    swap_rows(I, c, piv);
    Coeff inv = R.inverse(M.at(c, c));
    scale_row(R, M, c, inv);
    scale_row(R, I, c, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || R.is_zero(M.at(i, c))) continue;
      Coeff q = M.at(i, c);
      sub_row(R, M, i, c, q);
      sub_row(R, I, i, c, q);
    }
  }
  return I;
}

SmithForm smith_normal_form(const BaseRing& R, const Matrix& A) {
  SmithForm s{A, Matrix::identity(R, A.rows()), Matrix::identity(R, A.cols()), {}};
  if (R.kind() == BaseRing::Kind::Integers) {
    smith_integers(R, s.D, s.U, s.V);
  } else if (is_local_or_field(R)) {
    smith_local(R, s.D, s.U, s.V);
  } else {
    throw Error(ErrorCode::UnsupportedBase, "Smith normal form over " + R.name() + " needs a CRT split first");
  }
  for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i)
    if (!R.is_zero(s.D.at(i, i))) s.diagonal.push_back(s.D.at(i, i));
  return s;
}

std::vector<std::vector<mpz_class>> integer_kernel(const std::vector<std::vector<mpz_class>>& A, std::size_t cols) {
  const BaseRing Z = BaseRing::integers();
  Matrix M(A.size(), cols);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = Coeff(A[i][j]);
  SmithForm s = smith_normal_form(Z, M);
  const std::size_t rank = s.diagonal.size();
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t j = rank; j < cols; ++j) {
    std::vector<mpz_class> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = s.V.at(i, j).get_num();
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (mpz_class p = 2; p * p <= n && p < 1000000; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) {
    if (!is_probable_prime(n)) throw Error(ErrorCode::UnsupportedBase, "cannot factor modulus " + n.get_str());
    out.push_back({n, 1});
  }
  return out;
}

}  // namespace secant
