#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ring/base_ring.hpp"

namespace secant {

using Exponents = std::vector<std::uint32_t>;

struct PolyRing {
  BaseRing base;
  std::vector<std::string> vars;

  std::size_t nvars() const { return vars.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool operator==(const PolyRing& o) const { return base == o.base && vars == o.vars; }
  std::string describe() const;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

// Validates identifiers and uniqueness.
PolyRingPtr make_poly_ring(BaseRing base, std::vector<std::string> vars);

// Appends `count` variables prefix1..prefixN. Throws NameCollision.
PolyRingPtr extend_ring(const PolyRingPtr& ring, std::size_t count, const std::string& prefix);

// Same variables over a different base ring.
PolyRingPtr with_base(const PolyRingPtr& ring, BaseRing base);

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

// Total degree; nullopt stands for the degree of the zero polynomial.
using Degree = std::optional<std::uint32_t>;

class MultiPoly {
 public:
  using Terms = std::map<Exponents, Coeff>;

  explicit MultiPoly(PolyRingPtr ring);
  static MultiPoly constant(PolyRingPtr ring, const Coeff& c);
  static MultiPoly variable(PolyRingPtr ring, std::size_t index);
  static MultiPoly monomial(PolyRingPtr ring, Exponents exps, const Coeff& c);

  const PolyRingPtr& ring() const { return ring_; }
  const BaseRing& base() const { return ring_->base; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Coeff coefficient(const Exponents& exps) const;
  Degree total_degree() const;
  Degree degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  // Adds c * X^exps, canonicalizing and dropping zeros.
  void add_term(const Exponents& exps, const Coeff& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Coeff& c) const;
  MultiPoly times_monomial(const Exponents& exps, const Coeff& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly pow(std::uint32_t e) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly derivative(std::size_t var) const;
  // Coefficient of var^k viewing the polynomial in (k[others])[var].
  MultiPoly coefficient_in(std::size_t var, std::uint32_t k) const;

  // Re-expresses the polynomial in a ring whose variable list extends this
  // one's (same base).
  MultiPoly embed(const PolyRingPtr& larger) const;
  // Maps coefficients into the base of `target` (same variables).
  MultiPoly map_base(const PolyRingPtr& target) const;

  // Canonical printing: terms by descending total degree, then reverse lex.
  std::string to_string() const;

 private:
  PolyRingPtr ring_;
  Terms terms_;
};

using PolyVector = std::vector<MultiPoly>;

MultiPoly zero_poly(const PolyRingPtr& ring);
// Sum_i a_i * b_i
MultiPoly dot(const PolyVector& a, const PolyVector& b);

BaseIdeal content(const MultiPoly& f);
bool is_monic_in(const MultiPoly& f, std::size_t var);
MultiPoly reduce_coefficients(const MultiPoly& f, const BaseIdeal& c);
PolyRingPtr reduce_ring(const PolyRingPtr& ring, const BaseIdeal& c);

// Parses the shared text syntax (integers, a/b literals, ^, optional *).
MultiPoly parse_poly(std::string_view text, const PolyRingPtr& ring);

// Descending grevlex comparison used for printing and deterministic output.
bool grevlex_greater(const Exponents& a, const Exponents& b);

}  // namespace secant
