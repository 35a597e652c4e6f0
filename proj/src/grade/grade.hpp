#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regseq/regseq.hpp"

namespace secant {

enum class KroneckerShape {
  Linear,     // a_1 Y_1 + ... + a_r Y_r
  Quadratic,  // a_1 Y_1 + a_2 Y_2^2 + ... + a_r Y_r^2
};

struct KroneckerSequence {
  PolyVector ideal;          // generators, in the base ring
  PolyRingPtr ring;          // base ring extended by all blocks
  std::vector<std::string> prefixes;
  std::vector<std::vector<std::size_t>> blocks;  // variable indices in `ring`
  PolyVector forms;          // in `ring`
  KroneckerShape shape = KroneckerShape::Linear;

  std::size_t length() const { return forms.size(); }
};

// m forms over disjoint fresh blocks of size r = gens.size().
KroneckerSequence kronecker_sequence(const PolyRingPtr& ring, const PolyVector& gens, std::size_t m,
                                     KroneckerShape shape = KroneckerShape::Linear);

struct GradeCertificate {
  PolyVector ideal;
  std::size_t bound = 0;
  KroneckerSequence sequence;
  RegularSequenceCertificate evidence;
};

struct GradeResult {
  bool holds = false;
  GradeCertificate certificate;
  std::optional<std::size_t> failure_index;
  std::optional<MultiPoly> witness;  // in the extended ring
};

// Order used inside the extended ring: the fresh blocks form the lex block.
MonomialOrder grade_order(const KroneckerSequence& seq);

GradeResult grade_at_least(const PolyRingPtr& ring, const PolyVector& gens, std::size_t k,
                           KroneckerShape shape = KroneckerShape::Linear);

bool check_grade_certificate(const GradeCertificate& cert);

struct SecantResult {
  bool secant = false;
  enum class Method { RegularSubsequence, Kronecker };
  Method method = Method::Kronecker;
  // RegularSubsequence: a regular sequence of length >= #seq inside <seq>,
  // with membership cofactors.
  PolyVector regular;
  std::vector<PolyVector> cofactors;
  std::optional<RegularSequenceCertificate> regular_evidence;
  std::optional<GradeResult> grade;
};

// Completely secant: Gr(<seq>) >= #seq. A supplied regular sequence inside
// the ideal gives the answer without the Kronecker computation; otherwise the
// sequence itself is tried before falling back to grade_at_least.
SecantResult is_completely_secant(const PolyRingPtr& ring, const PolyVector& seq,
                                  const std::optional<PolyVector>& known_regular = std::nullopt);

}  // namespace secant
