#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finite/linalg.hpp"
#include "groebner/groebner.hpp"
#include "regseq/regseq.hpp"

namespace secant {

// k[X]/<F> as a finitely generated k-module: k^generators / relations.
struct FiniteAlgebraPresentation {
  PolyRingPtr ring;
  PolyVector relations_input;  // F
  MonomialOrder order;
  GroebnerBasis basis;
  std::vector<Exponents> generators;  // monomials, ascending, generators[0] = 1
  std::vector<Matrix> multiplication;  // one per variable, columns = images of generators
  // Rows are coordinate vectors of k-linear relations among the generators;
  // empty over fields when the generators are the standard monomials.
  Matrix module_relations;
  bool supplied = false;  // generators given by the caller and checked for closure

  std::size_t size() const { return generators.size(); }
  MultiPoly generator_poly(std::size_t i) const;
};

// Finiteness over k: the staircase of a strong basis must be finite (each
// variable has a basis element with unit leading coefficient whose leading
// monomial is a pure power of it). Throws NotDetectedFinite naming the
// blocking variable.
FiniteAlgebraPresentation finiteness_basis(const PolyRingPtr& ring, const PolyVector& F,
                                           MonomialOrder order = MonomialOrder::grevlex());
// Caller-supplied module generators, verified for closure under every x_i.
FiniteAlgebraPresentation finiteness_basis(const PolyRingPtr& ring, const PolyVector& F,
                                           const std::vector<MultiPoly>& generators,
                                           MonomialOrder order = MonomialOrder::grevlex());

// Coordinates of NF(p) on the generators.
std::vector<Coeff> coordinates(const FiniteAlgebraPresentation& P, const MultiPoly& p);
Matrix multiplication_matrix(const FiniteAlgebraPresentation& P, const MultiPoly& p);
inline const Matrix& multiplication_matrix(const FiniteAlgebraPresentation& P, std::size_t var) {
  return P.multiplication.at(var);
}

struct AnnihilatorWitness {
  std::size_t variable = 0;
  std::vector<Coeff> coefficients;  // highest degree first, leading coefficient 1
  MultiPoly polynomial;             // chi(X_i) in the ambient ring
  PolyVector cofactors;             // chi(X_i) = Sum g_j f_j
  enum class Source { Relation, Charpoly };
  Source source = Source::Charpoly;
  std::optional<Matrix> matrix;  // the multiplication matrix when source = Charpoly
};

// Monic univariate polynomial in X_i killing x_i, with cofactors on F. A
// monic univariate relation already present in F or in its basis is used
// when one exists (lowest degree); otherwise the characteristic polynomial
// of the multiplication matrix.
AnnihilatorWitness monic_annihilator(const FiniteAlgebraPresentation& P, std::size_t var);
// Always the characteristic polynomial.
AnnihilatorWitness charpoly_annihilator(const FiniteAlgebraPresentation& P, std::size_t var);

MultiPoly univariate(const PolyRingPtr& ring, std::size_t var, const std::vector<Coeff>& coeffs);

struct FiniteRegularSequence {
  PolyVector sequence;  // (chi_n(X_n), ..., chi_1(X_1))
  std::vector<AnnihilatorWitness> annihilators;  // same order as the sequence
  RegularSequenceCertificate certificate;
};

FiniteRegularSequence regular_sequence_from_finiteness(const FiniteAlgebraPresentation& P);
FiniteRegularSequence regular_sequence_from_finiteness(const PolyRingPtr& ring, const PolyVector& F,
                                                       MonomialOrder order = MonomialOrder::grevlex());

struct JacobianResult {
  bool unit = false;
  std::vector<PolyVector> jacobian;
  MultiPoly determinant;
  MultiPoly reduced;               // normal form of det J
  std::optional<Matrix> matrix;    // multiplication by det J
  std::optional<MultiPoly> inverse;
  std::string diagnostic;
};

// Fields only; #F = #variables.
JacobianResult jacobian_criterion(const PolyRingPtr& ring, const PolyVector& F,
                                  MonomialOrder order = MonomialOrder::grevlex());

}  // namespace secant
