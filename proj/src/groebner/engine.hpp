#pragma once

// Strong Groebner basis engine for submodules of A^r, A = k[X], over the
// supported principal ideal rings. Vectors are sparse term lists sorted in
// descending position-over-term order (component 0 is the largest position).
// Every element carries a tag: its expression in the input generators.

#include <cstdint>
#include <vector>

#include "groebner/order.hpp"

namespace secant::detail {

struct Term {
  std::uint32_t comp = 0;
  Exponents exp;
  Coeff coeff;
};

using Vec = std::vector<Term>;

struct Element {
  Vec vec;
  Vec tag;
};

class Arith {
 public:
  Arith(BaseRing ring, MonomialOrder order, std::size_t nvars)
      : ring_(std::move(ring)), order_(order), nvars_(nvars) {}

  const BaseRing& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return nvars_; }

  int cmp(const Term& a, const Term& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return order_.compare(a.exp, b.exp);
  }

  // a[from..] + c * X^shift * b
  Vec axpy(const Vec& a, std::size_t from, const Coeff& c, const Exponents* shift, const Vec& b) const;
  Vec add(const Vec& a, const Vec& b) const { return axpy(a, 0, ring_.one(), nullptr, b); }
  Vec sub(const Vec& a, const Vec& b) const { return axpy(a, 0, ring_.neg(ring_.one()), nullptr, b); }
  Vec scale(const Vec& a, const Coeff& c, const Exponents* shift = nullptr) const;
  // q (a scalar polynomial, all terms in component 0) times v.
  Vec mul_scalar(const Vec& q, const Vec& v) const;
  // Sorts and merges an unordered term list.
  Vec normalize_terms(std::vector<Term> terms) const;

 private:
  BaseRing ring_;
  MonomialOrder order_;
  std::size_t nvars_;
};

bool divides_monomial(const Exponents& a, const Exponents& b);
Exponents monomial_quotient(const Exponents& b, const Exponents& a);
Exponents monomial_lcm(const Exponents& a, const Exponents& b);

struct Reduction {
  Vec remainder;
  // quotients[k]: scalar polynomial multiplying basis element k.
  std::vector<Vec> quotients;
};

// Full reduction of h. Terms before index `skip` are left untouched.
Reduction reduce(const Arith& ar, const Vec& h, const std::vector<Element>& basis, bool track_quotients,
                 std::size_t skip = 0);

// Sum_k quotients[k] * basis[k].tag
Vec combine_tags(const Arith& ar, const std::vector<Vec>& quotients, const std::vector<Element>& basis);

struct BuchbergerOptions {
  bool product_criterion = true;  // only honoured for rank-1 inputs over fields
  bool track_tags = true;
};

// Returns a minimal, tail-reduced strong Groebner basis. Input i gets tag e_i.
std::vector<Element> buchberger(const Arith& ar, const std::vector<Vec>& inputs,
                                const BuchbergerOptions& opts = {});

// Relations among the basis elements: S-pair, annihilator and (over fields)
// coprime-pair syzygies, each of length basis.size() in scalar polynomials.
std::vector<std::vector<Vec>> schreyer_syzygies(const Arith& ar, const std::vector<Element>& basis);

// Pair polynomials used by the audit: every S-, G- and annihilator polynomial.
std::vector<Vec> critical_polynomials(const Arith& ar, const std::vector<Element>& basis);

}  // namespace secant::detail
