#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "groebner/engine.hpp"
#include "groebner/order.hpp"
#include "poly/poly.hpp"

namespace secant {

// Relation vector (u_1, ..., u_s) with Sum u_i f_i = 0; also used for general
// elements of A^s.
using SyzygyVector = PolyVector;

struct GroebnerBasis {
  PolyRingPtr ring;
  MonomialOrder order;
  PolyVector input;
  PolyVector generators;
  // generators[i] = Sum_j transform[i][j] * input[j]
  std::vector<PolyVector> transform;

  std::vector<detail::Element> elements;  // engine form, same order as generators
};

GroebnerBasis groebner_basis(const PolyRingPtr& ring, const PolyVector& F,
                             MonomialOrder order = MonomialOrder::grevlex());
GroebnerBasis groebner_basis(const PolyVector& F, MonomialOrder order = MonomialOrder::grevlex());

struct NormalForm {
  MultiPoly remainder;
  PolyVector cofactors;  // with respect to GroebnerBasis::generators
};

NormalForm normal_form(const MultiPoly& h, const GroebnerBasis& G);
bool reduces_to_zero(const MultiPoly& h, const GroebnerBasis& G);

// Cofactors with respect to G.input, when h lies in the ideal.
std::optional<PolyVector> ideal_member(const MultiPoly& h, const GroebnerBasis& G);
std::optional<PolyVector> ideal_member(const MultiPoly& h, const PolyVector& F,
                                       MonomialOrder order = MonomialOrder::grevlex());

// Post-hoc audit: every S-, gcd- and annihilator polynomial reduces to zero
// and the transform identity holds.
bool audit_groebner_basis(const GroebnerBasis& G);

// Generators of the full relation module of F (Schreyer construction).
std::vector<SyzygyVector> syzygies(const PolyRingPtr& ring, const PolyVector& F,
                                   MonomialOrder order = MonomialOrder::grevlex());

// Strong Groebner basis of a submodule of A^rank (position over term).
class ModuleBasis {
 public:
  ModuleBasis(const PolyRingPtr& ring, std::size_t rank, const std::vector<SyzygyVector>& gens,
              MonomialOrder order = MonomialOrder::grevlex());

  // Coefficients c with v = Sum c_i gens_i, when v lies in the submodule.
  std::optional<PolyVector> member(const SyzygyVector& v) const;
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return elements_.size(); }

 private:
  PolyRingPtr ring_;
  std::size_t rank_;
  std::size_t ngens_;
  detail::Arith arith_;
  std::vector<detail::Element> elements_;
};

std::optional<PolyVector> module_member(const SyzygyVector& v, const std::vector<SyzygyVector>& gens,
                                        MonomialOrder order = MonomialOrder::grevlex());

// Basis of (I : a) = { g : g*a in I }.
GroebnerBasis ideal_quotient(const PolyRingPtr& ring, const PolyVector& I, const MultiPoly& a,
                             MonomialOrder order = MonomialOrder::grevlex());

// Conversions between polynomials and engine vectors.
namespace detail {
Vec to_vec(const MultiPoly& p, const Arith& ar, std::uint32_t comp = 0);
Vec to_module_vec(const SyzygyVector& v, const Arith& ar);
MultiPoly from_vec(const Vec& v, const PolyRingPtr& ring, std::uint32_t comp = 0);
SyzygyVector from_module_vec(const Vec& v, const PolyRingPtr& ring, std::size_t rank);
}  // namespace detail

}  // namespace secant
