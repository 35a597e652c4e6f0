#include "ring/base_ring.hpp"

namespace secant {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::UnknownRing: return "UnknownRing";
    case ErrorCode::CoefficientNotInRing: return "CoefficientNotInRing";
    case ErrorCode::NameCollision: return "NameCollision";
    case ErrorCode::UnsupportedBase: return "UnsupportedBase";
    case ErrorCode::NotDetectedFinite: return "NotDetectedFinite";
    case ErrorCode::NotTriviallyGenerated: return "NotTriviallyGenerated";
    case ErrorCode::NotARelation: return "NotARelation";
    case ErrorCode::NotARelationModA: return "NotARelationModA";
    case ErrorCode::NonUnitDivisor: return "NonUnitDivisor";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Unknown";
}

namespace {

mpz_class integer_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class floor_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool is_probable_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

BaseRing BaseRing::rationals() { return BaseRing(Kind::Rationals, 0); }
BaseRing BaseRing::integers() { return BaseRing(Kind::Integers, 0); }

BaseRing BaseRing::prime_field(const mpz_class& p) {
  if (!is_probable_prime(p))
    throw Error(ErrorCode::UnknownRing, "GF(" + p.get_str() + "): modulus is not prime");
  return BaseRing(Kind::PrimeField, p);
}

BaseRing BaseRing::integers_mod(const mpz_class& m) {
  if (m < 1) throw Error(ErrorCode::UnknownRing, "ZZ/" + m.get_str() + ": modulus must be >= 1");
  return BaseRing(Kind::IntegersMod, m);
}

bool BaseRing::is_field() const {
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField: return true;
    case Kind::Integers: return false;
    case Kind::IntegersMod: return is_probable_prime(modulus_);
  }
  return false;
}

Coeff BaseRing::reduce_int(const mpz_class& z) const {
  if (has_finite_characteristic()) return Coeff(floor_mod(z, modulus_));
  return Coeff(z);
}

Coeff BaseRing::from_integer(const mpz_class& z) const { return reduce_int(z); }

Coeff BaseRing::from_rational(const mpq_class& q) const {
  mpq_class c = q;
  c.canonicalize();
  switch (kind_) {
    case Kind::Rationals: return c;
    case Kind::Integers:
      if (c.get_den() != 1)
        throw Error(ErrorCode::CoefficientNotInRing, c.get_str() + " is not an integer");
      return c;
    case Kind::PrimeField:
    case Kind::IntegersMod: {
      if (modulus_ == 1) return Coeff(0);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), c.get_den_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw Error(ErrorCode::CoefficientNotInRing,
                    c.get_str() + " has a denominator that is not invertible in " + name());
      return reduce_int(c.get_num() * inv);
    }
  }
  return c;
}

Coeff BaseRing::add(const Coeff& a, const Coeff& b) const {
  if (has_finite_characteristic()) return reduce_int(a.get_num() + b.get_num());
  return a + b;
}

Coeff BaseRing::sub(const Coeff& a, const Coeff& b) const {
  if (has_finite_characteristic()) return reduce_int(a.get_num() - b.get_num());
  return a - b;
}

Coeff BaseRing::mul(const Coeff& a, const Coeff& b) const {
  if (has_finite_characteristic()) return reduce_int(a.get_num() * b.get_num());
  return a * b;
}

Coeff BaseRing::neg(const Coeff& a) const {
  if (has_finite_characteristic()) return reduce_int(-a.get_num());
  return -a;
}

bool BaseRing::is_unit(const Coeff& a) const {
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField: return !is_zero(a) || is_zero_ring();
    case Kind::Integers: return abs(a) == 1;
    case Kind::IntegersMod: return integer_gcd(a.get_num(), modulus_) == 1;
  }
  return false;
}

Coeff BaseRing::inverse(const Coeff& a) const {
  if (!is_unit(a)) throw Error(ErrorCode::InvalidArgument, to_string(a) + " is not a unit in " + name());
  switch (kind_) {
    case Kind::Rationals: return Coeff(1) / a;
    case Kind::Integers: return a;
    case Kind::PrimeField:
    case Kind::IntegersMod: {
      if (modulus_ == 1) return Coeff(0);
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
      return reduce_int(inv);
    }
  }
  return a;
}

bool BaseRing::divides(const Coeff& a, const Coeff& b) const {
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField: return !is_zero(a) || is_zero(b);
    case Kind::Integers:
      if (is_zero(a)) return is_zero(b);
      return mpz_divisible_p(b.get_num_mpz_t(), a.get_num_mpz_t()) != 0;
    case Kind::IntegersMod: {
      mpz_class d = integer_gcd(a.get_num(), modulus_);
      return mpz_divisible_p(b.get_num_mpz_t(), d.get_mpz_t()) != 0;
    }
  }
  return false;
}

Coeff BaseRing::exact_div(const Coeff& b, const Coeff& a) const {
  if (!divides(a, b))
    throw Error(ErrorCode::InvalidArgument, to_string(a) + " does not divide " + to_string(b));
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField:
      if (is_zero(a)) return zero();
      return mul(b, inverse(a));
    case Kind::Integers:
      if (is_zero(a)) return zero();
      return Coeff(mpz_class(b.get_num() / a.get_num()));
    case Kind::IntegersMod: return divrem(b, a).q;
  }
  return zero();
}

BaseRing::Gcd BaseRing::gcdext(const Coeff& a, const Coeff& b) const {
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField:
      if (!is_zero(a)) return {one(), inverse(a), zero()};
      if (!is_zero(b)) return {one(), zero(), inverse(b)};
      return {zero(), one(), zero()};
    case Kind::Integers:
    case Kind::IntegersMod: {
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
      return {reduce_int(g), reduce_int(s), reduce_int(t)};
    }
  }
  return {};
}

BaseRing::DivRem BaseRing::divrem(const Coeff& b, const Coeff& a) const {
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField:
      if (is_zero(a)) return {zero(), b};
      return {mul(b, inverse(a)), zero()};
    case Kind::Integers: {
      if (is_zero(a)) return {zero(), b};
      mpz_class r = floor_mod(b.get_num(), abs(a.get_num()));
      return {Coeff(mpz_class((b.get_num() - r) / a.get_num())), Coeff(r)};
    }
    case Kind::IntegersMod: {
      if (is_zero(a)) return {zero(), b};
      mpz_class d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
      mpz_class r = floor_mod(b.get_num(), d);
      mpz_class q = (b.get_num() - r) / d * s;
      return {reduce_int(q), reduce_int(r)};
    }
  }
  return {};
}

Coeff BaseRing::annihilator(const Coeff& a) const {
  if (is_zero(a)) return one();
  if (kind_ != Kind::IntegersMod) return zero();
  mpz_class d = integer_gcd(a.get_num(), modulus_);
  return reduce_int(modulus_ / d);
}

BaseRing::UnitNormal BaseRing::unit_normal(const Coeff& a) const {
  if (is_zero(a)) return {zero(), one()};
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField: return {one(), inverse(a)};
    case Kind::Integers:
      if (a < 0) return {-a, Coeff(-1)};
      return {a, Coeff(1)};
    case Kind::IntegersMod: {
      mpz_class d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
      mpz_class step = modulus_ / d;
      mpz_class u = floor_mod(s, step);
      // Units of ZZ/m surject onto units of ZZ/(m/d), so a lift coprime to m exists.
      while (integer_gcd(u, modulus_) != 1) u += step;
      return {reduce_int(d), reduce_int(u)};
    }
  }
  return {a, one()};
}

mpz_class BaseRing::ideal_size(const Coeff& a) const {
  switch (kind_) {
    case Kind::Rationals:
    case Kind::PrimeField: return is_zero(a) ? mpz_class(0) : mpz_class(1);
    case Kind::Integers: return abs(a.get_num());
    case Kind::IntegersMod: return integer_gcd(a.get_num(), modulus_);
  }
  return 0;
}

std::string BaseRing::name() const {
  switch (kind_) {
    case Kind::Rationals: return "QQ";
    case Kind::Integers: return "ZZ";
    case Kind::PrimeField: return "GF(" + modulus_.get_str() + ")";
    case Kind::IntegersMod: return "ZZ/" + modulus_.get_str();
  }
  return "?";
}

std::string BaseRing::to_string(const Coeff& c) const { return c.get_str(); }

bool is_unit(const Coeff& r, const BaseRing& ring) { return ring.is_unit(r); }

BaseIdeal ideal_normalize(const std::vector<Coeff>& gens, const BaseRing& ring) {
  BaseIdeal out;
  out.original_generators = gens;
  if (ring.is_field()) {
    out.generator = ring.zero();
    for (const auto& g : gens)
      if (!ring.is_zero(g)) out.generator = ring.one();
    return out;
  }
  mpz_class g = 0;
  for (const auto& c : gens) g = integer_gcd(g, c.get_num());
  if (ring.kind() == BaseRing::Kind::IntegersMod) {
    g = integer_gcd(g, ring.modulus());
    if (g == ring.modulus()) g = 0;
  }
  out.generator = ring.from_integer(g);
  return out;
}

bool ideal_contains(const BaseIdeal& ideal, const Coeff& r, const BaseRing& ring) {
  return ring.divides(ideal.generator, r);
}

BaseRing quotient_ring(const BaseRing& ring, const BaseIdeal& ideal) {
  const Coeff& g = ideal.generator;
  switch (ring.kind()) {
    case BaseRing::Kind::Rationals:
    case BaseRing::Kind::PrimeField:
      if (ring.is_zero(g)) return ring;
      return BaseRing::integers_mod(1);
    case BaseRing::Kind::Integers:
      if (ring.is_zero(g)) return ring;
      return BaseRing::integers_mod(abs(g.get_num()));
    case BaseRing::Kind::IntegersMod: {
      if (ring.is_zero(g)) return ring;
      return BaseRing::integers_mod(integer_gcd(ring.modulus(), g.get_num()));
    }
  }
  return ring;
}

Coeff reduce_to_quotient(const Coeff& r, const BaseRing& ring, const BaseIdeal& ideal) {
  return quotient_ring(ring, ideal).from_rational(r);
}

Coeff canonical_lift(const Coeff& r, const BaseRing& /*quotient*/, const BaseRing& ring) {
  // Canonical residues of a quotient are already canonical in the parent.
  return ring.from_rational(r);
}

BaseRing parse_base_ring(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  auto number = [&](const std::string& digits) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::UnknownRing, "unknown ring '" + std::string(text) + "'");
    return mpz_class(digits);
  };
  if (t == "QQ") return BaseRing::rationals();
  if (t == "ZZ") return BaseRing::integers();
  if (t.size() > 4 && t.rfind("GF(", 0) == 0 && t.back() == ')')
    return BaseRing::prime_field(number(t.substr(3, t.size() - 4)));
  if (t.rfind("ZZ/", 0) == 0) return BaseRing::integers_mod(number(t.substr(3)));
  throw Error(ErrorCode::UnknownRing, "unknown ring '" + std::string(text) + "'");
}

}  // namespace secant
