#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "ring/error.hpp"

namespace secant {

// Ring elements are stored as rationals in canonical form for their ring:
// reduced fractions over QQ, integers over ZZ, residues in [0, m) over ZZ/m
// and GF(p).
using Coeff = mpq_class;

class BaseRing {
 public:
  enum class Kind { Rationals, PrimeField, Integers, IntegersMod };

  static BaseRing rationals();
  static BaseRing integers();
  static BaseRing prime_field(const mpz_class& p);  // throws on composite p
  static BaseRing integers_mod(const mpz_class& m); // m >= 1

  Kind kind() const { return kind_; }
  // p for GF(p), m for ZZ/m, 0 otherwise.
  const mpz_class& modulus() const { return modulus_; }

  bool is_field() const;
  bool is_zero_ring() const { return kind_ == Kind::IntegersMod && modulus_ == 1; }
  bool has_finite_characteristic() const {
    return kind_ == Kind::PrimeField || kind_ == Kind::IntegersMod;
  }

  // Parsing-level conversion: throws CoefficientNotInRing when the value has
  // no image (1/2 over ZZ, 1/2 over ZZ/4).
  Coeff from_rational(const mpq_class& q) const;
  Coeff from_integer(const mpz_class& z) const;
  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return from_integer(1); }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  bool is_zero(const Coeff& a) const { return sgn(a) == 0; }
  bool is_unit(const Coeff& a) const;
  Coeff inverse(const Coeff& a) const;  // requires is_unit

  // a | b
  bool divides(const Coeff& a, const Coeff& b) const;
  // q with a*q = b; requires divides(a, b)
  Coeff exact_div(const Coeff& b, const Coeff& a) const;

  struct Gcd {
    Coeff g, s, t;  // g = s*a + t*b
  };
  Gcd gcdext(const Coeff& a, const Coeff& b) const;

  struct DivRem {
    Coeff q, r;  // b = q*a + r, r the canonical representative of b mod (a)
  };
  DivRem divrem(const Coeff& b, const Coeff& a) const;

  // Generator of Ann(a).
  Coeff annihilator(const Coeff& a) const;

  struct UnitNormal {
    Coeff normal, unit;  // unit * a = normal, unit invertible
  };
  UnitNormal unit_normal(const Coeff& a) const;

  // Coarse size used to prefer small leading coefficients; only meaningful
  // for comparisons between associates-classes.
  mpz_class ideal_size(const Coeff& a) const;

  std::string name() const;
  std::string to_string(const Coeff& c) const;

  bool operator==(const BaseRing& o) const { return kind_ == o.kind_ && modulus_ == o.modulus_; }
  bool operator!=(const BaseRing& o) const { return !(*this == o); }

 private:
  BaseRing(Kind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {}
  Coeff reduce_int(const mpz_class& z) const;

  Kind kind_;
  mpz_class modulus_;
};

// Principal ideal of the base ring, stored by its canonical generator.
struct BaseIdeal {
  Coeff generator;
  std::vector<Coeff> original_generators;
};

bool is_unit(const Coeff& r, const BaseRing& ring);
BaseIdeal ideal_normalize(const std::vector<Coeff>& gens, const BaseRing& ring);
bool ideal_contains(const BaseIdeal& ideal, const Coeff& r, const BaseRing& ring);
BaseRing quotient_ring(const BaseRing& ring, const BaseIdeal& ideal);
// Image of r in ring/ideal.
Coeff reduce_to_quotient(const Coeff& r, const BaseRing& ring, const BaseIdeal& ideal);
// Canonical representative in `ring` of an element of `quotient`.
Coeff canonical_lift(const Coeff& r, const BaseRing& quotient, const BaseRing& ring);

bool is_probable_prime(const mpz_class& n);

// QQ, ZZ, GF(p), ZZ/m. Throws UnknownRing.
BaseRing parse_base_ring(std::string_view text);

}  // namespace secant
