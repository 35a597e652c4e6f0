#pragma once

#include <optional>
#include <vector>

#include "groebner/groebner.hpp"

namespace secant {

struct RegularElementResult {
  bool regular = false;
  std::optional<MultiPoly> witness;  // g not in I with g*a in I
  PolyVector ideal_basis;            // basis of I
  PolyVector quotient_basis;         // basis of (I : a)
};

// Regularity of a in k[X]/I, decided by (I : a) == I.
RegularElementResult is_regular_element(const PolyRingPtr& ring, const MultiPoly& a, const PolyVector& I,
                                        MonomialOrder order = MonomialOrder::grevlex());

struct RegularityStep {
  enum class Kind { Structural, Quotient };
  explicit RegularityStep(MultiPoly e) : element(std::move(e)) {}
  Kind kind = Kind::Quotient;
  MultiPoly element;
  // Structural: element is monic in `variable` and no earlier generator
  // involves that variable.
  std::optional<std::size_t> variable;
  // Quotient: the two bases compared.
  PolyVector ideal_basis;
  PolyVector quotient_basis;
  bool regular = false;
  std::optional<MultiPoly> witness;
};

struct RegularSequenceCertificate {
  PolyRingPtr ring;
  PolyVector sequence;
  PolyVector ambient;
  std::vector<RegularityStep> steps;
};

struct RegularSequenceResult {
  bool regular = false;
  RegularSequenceCertificate certificate;  // steps up to and including a failure
  std::optional<std::size_t> failure_index;  // 1-based
  std::optional<MultiPoly> witness;
};

// First variable in which `a` is monic and which no element of `previous`
// involves.
std::optional<std::size_t> structural_variable(const MultiPoly& a, const PolyVector& previous);

RegularSequenceResult is_regular_sequence(const PolyRingPtr& ring, const PolyVector& seq,
                                          const PolyVector& ambient = {},
                                          MonomialOrder order = MonomialOrder::grevlex(),
                                          bool allow_structural = true);

// Re-checks structural steps by arithmetic and quotient steps by recomputing
// ideal membership of the quotient basis.
bool check_regular_sequence_certificate(const RegularSequenceCertificate& cert,
                                        MonomialOrder order = MonomialOrder::grevlex());

// f_j e_i - f_i e_j for i < j.
std::vector<SyzygyVector> koszul_relations(const PolyRingPtr& ring, const PolyVector& F);

struct TrivialSyzygyResult {
  bool generated = false;
  std::vector<SyzygyVector> relations;     // generators of the relation module
  std::vector<PolyVector> expressions;     // coefficients on koszul_relations, per relation
  std::optional<SyzygyVector> obstruction; // first relation not generated
};

TrivialSyzygyResult is_trivial_syzygy_generated(const PolyRingPtr& ring, const PolyVector& F,
                                                MonomialOrder order = MonomialOrder::grevlex());

struct AntisymmetricWitness {
  std::size_t size = 0;
  std::vector<PolyVector> entries;  // row-major, size x size
};

AntisymmetricWitness zero_antisymmetric(const PolyRingPtr& ring, std::size_t size);
bool is_antisymmetric(const AntisymmetricWitness& m);
// Row vector F times the matrix.
PolyVector row_times(const PolyVector& F, const AntisymmetricWitness& m);

// N antisymmetric with u = F*N. Throws NotARelation, NotTriviallyGenerated.
AntisymmetricWitness express_syzygy_antisymmetric(const PolyRingPtr& ring, const SyzygyVector& u,
                                                  const PolyVector& F,
                                                  MonomialOrder order = MonomialOrder::grevlex());

}  // namespace secant
