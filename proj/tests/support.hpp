#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "groebner/groebner.hpp"

namespace testsupport {

using namespace secant;

inline MultiPoly P(const PolyRingPtr& R, const std::string& s) { return parse_poly(s, R); }

inline PolyVector Ps(const PolyRingPtr& R, std::initializer_list<const char*> xs) {
  PolyVector out;
  for (const char* s : xs) out.push_back(parse_poly(s, R));
  return out;
}

// All exponent vectors of total degree <= d in n variables.
inline std::vector<Exponents> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
  return out;
}

// Dense linear algebra over GF(p), p small.
struct ModMatrix {
  std::uint64_t p;
  std::size_t rows, cols;
  std::vector<std::vector<std::uint64_t>> a;
  ModMatrix(std::uint64_t p_, std::size_t r, std::size_t c)
      : p(p_), rows(r), cols(c), a(r, std::vector<std::uint64_t>(c, 0)) {}
};

inline std::uint64_t mod_inv(std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  x %= p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return r;
}

// Basis of { x : A x = 0 }.
inline std::vector<std::vector<std::uint64_t>> nullspace(ModMatrix m) {
  const std::uint64_t p = m.p;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.a[piv][c] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(m.a[piv], m.a[r]);
    std::uint64_t inv = mod_inv(m.a[r][c], p);
    for (auto& v : m.a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.a[i][c] == 0) continue;
      std::uint64_t f = m.a[i][c];
      for (std::size_t j = 0; j < m.cols; ++j) m.a[i][j] = (m.a[i][j] + (p - f) * m.a[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> x(m.cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = (p - m.a[i][free]) % p;
    out.push_back(std::move(x));
  }
  return out;
}

// Solvability of A x = b.
inline bool solvable(const ModMatrix& A, const std::vector<std::uint64_t>& b) {
  ModMatrix aug(A.p, A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.a[i][j] = A.a[i][j];
    aug.a[i][A.cols] = b[i] % A.p;
  }
  // b is in the column space iff the nullspace has a vector with last entry nonzero
  for (const auto& v : nullspace(aug))
    if (v[A.cols] != 0) return true;
  return false;
}

inline std::uint64_t coeff_mod(const Coeff& c, std::uint64_t p) {
  mpz_class z = c.get_num() % mpz_class(p);
  if (z < 0) z += p;
  return z.get_ui();
}

// Bounded-degree membership: is h = Sum g_i f_i with deg g_i <= d solvable?
inline bool bounded_member(const MultiPoly& h, const PolyVector& F, std::uint32_t d, std::uint64_t p) {
  const std::size_t n = h.ring()->nvars();
  auto mons = monomials_up_to(n, d);
  std::map<Exponents, std::size_t> rows;
  auto row_of = [&](const Exponents& e) {
    auto it = rows.find(e);
    if (it != rows.end()) return it->second;
    std::size_t k = rows.size();
    rows.emplace(e, k);
    return k;
  };
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> cols;
  for (const auto& f : F) {
    for (const auto& m : mons) {
      std::vector<std::pair<std::size_t, std::uint64_t>> col;
      MultiPoly shifted = f.times_monomial(m, f.base().one());
      for (const auto& [e, c] : shifted.terms())
        col.push_back({row_of(e), coeff_mod(c, p)});
      cols.push_back(std::move(col));
    }
  }
  std::vector<std::pair<std::size_t, std::uint64_t>> rhs;
  for (const auto& [e, c] : h.terms()) rhs.push_back({row_of(e), coeff_mod(c, p)});
  ModMatrix A(p, rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto [i, v] : cols[j]) A.a[i][j] = (A.a[i][j] + v) % p;
  std::vector<std::uint64_t> b(rows.size(), 0);
  for (auto [i, v] : rhs) b[i] = v;
  if (A.cols == 0) {
    for (auto v : b)
      if (v) return false;
    return true;
  }
  return solvable(A, b);
}

// Basis over GF(p) of relations (u_1..u_s) with deg u_i <= d.
inline std::vector<SyzygyVector> bounded_relations(const PolyVector& F, std::uint32_t d, std::uint64_t p) {
  const PolyRingPtr& R = F.front().ring();
  auto mons = monomials_up_to(R->nvars(), d);
  std::map<Exponents, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> cols;
  for (const auto& f : F) {
    for (const auto& m : mons) {
      std::vector<std::pair<std::size_t, std::uint64_t>> col;
      MultiPoly shifted = f.times_monomial(m, f.base().one());
      for (const auto& [e, c] : shifted.terms()) {
        auto it = rows.emplace(e, rows.size()).first;
        col.push_back({it->second, coeff_mod(c, p)});
      }
      cols.push_back(std::move(col));
    }
  }
  ModMatrix A(p, std::max<std::size_t>(rows.size(), 1), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto [i, v] : cols[j]) A.a[i][j] = (A.a[i][j] + v) % p;
  std::vector<SyzygyVector> out;
  for (const auto& x : nullspace(A)) {
    SyzygyVector u(F.size(), MultiPoly(R));
    for (std::size_t i = 0; i < F.size(); ++i)
      for (std::size_t k = 0; k < mons.size(); ++k)
        if (x[i * mons.size() + k]) u[i].add_term(mons[k], Coeff(x[i * mons.size() + k]));
    out.push_back(std::move(u));
  }
  return out;
}

inline MultiPoly random_poly(std::mt19937_64& rng, const PolyRingPtr& R, std::uint32_t deg, int terms,
                             int coeff_range) {
  MultiPoly f(R);
  auto mons = monomials_up_to(R->nvars(), deg);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<int> cd(-coeff_range, coeff_range);
  for (int i = 0; i < terms; ++i) f.add_term(mons[pick(rng)], R->base.from_integer(cd(rng)));
  return f;
}

inline MultiPoly relation_value(const SyzygyVector& u, const PolyVector& F) {
  MultiPoly s(F.front().ring());
  for (std::size_t i = 0; i < F.size(); ++i) s += u[i] * F[i];
  return s;
}

}  // namespace testsupport
