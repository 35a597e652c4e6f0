#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finite/finite.hpp"
#include "finite/linalg.hpp"
#include "regseq/regseq.hpp"

namespace secant {

// h = Sum v_i f_i with every coefficient of every v_i in the ideal.
struct RewriteWitness {
  explicit RewriteWitness(MultiPoly h_) : h(std::move(h_)) {}
  BaseIdeal ideal;
  PolyVector relations;  // F
  MultiPoly h;
  PolyVector u;
  // A relation of F, zero unless the reduced relation needed a correction
  // outside the trivial relations of the reduced sequence.
  PolyVector correction;
  AntisymmetricWitness lifted;  // M
  PolyVector w;                 // F * M
  PolyVector v;                 // u - correction - w
};

// Throws NotARelation when h != Sum u_i f_i, NotARelationModA when h has a
// coefficient outside the ideal, NotTriviallyGenerated when the reduced
// relation cannot be expressed.
RewriteWitness rewrite_with_ideal_coefficients(const MultiPoly& h, const PolyVector& u, const PolyVector& F,
                                               const BaseIdeal& a,
                                               MonomialOrder order = MonomialOrder::grevlex());

bool check_rewrite_witness(const RewriteWitness& w, std::string* failure = nullptr);

struct InclusionReport {
  BaseIdeal ideal;
  std::uint32_t degree_bound = 0;
  bool success = false;
  std::size_t family_size = 0;  // generators of the bounded intersection
  std::size_t skipped_zero = 0;
  std::vector<RewriteWitness> witnesses;
  std::optional<std::string> failure;
  std::optional<MultiPoly> failing_element;
};

// <F> intersected with a[X], restricted to combinations of m*f_i of total
// degree at most the bound, checked against a*f_1 + ... + a*f_s.
InclusionReport check_flatness_inclusion(const PolyRingPtr& ring, const PolyVector& F, const BaseIdeal& a,
                                         std::uint32_t degree_bound,
                                         MonomialOrder order = MonomialOrder::grevlex());

struct LocalFreeFactor {
  BaseRing ring;
  Matrix relations;  // presentation over this ring
  SmithForm smith;
  std::size_t rank = 0;
};

struct ModuleStructure {
  enum class Kind { VectorSpace, Free, LocallyFree, Zero };
  Kind kind = Kind::Zero;
  std::size_t generators = 0;
  std::optional<std::size_t> rank;  // set when every local rank agrees
  std::vector<LocalFreeFactor> factors;
};

// Throws NonUnitDivisor, UnsupportedBase.
ModuleStructure projective_structure(const FiniteAlgebraPresentation& P);

struct QuotientWitness {
  BaseIdeal ideal;
  PolyRingPtr ring;  // (k/c)[X]
  bool zero_ring = false;
  PolyVector relations;
  std::vector<AnnihilatorWitness> annihilators;
  RegularSequenceCertificate certificate;
};

struct SecantStatement {
  std::size_t length = 0;
  PolyVector sequence;  // regular sequence inside <F>
  bool holds = false;
};

struct FlatnessCertificate {
  PolyRingPtr ring;
  PolyVector relations;
  MonomialOrder order;
  std::vector<Exponents> generators;
  std::vector<Matrix> multiplication;
  std::vector<std::vector<PolyVector>> closure_cofactors;  // [var][generator]
  Matrix module_relations;
  std::vector<PolyVector> relation_cofactors;
  std::vector<AnnihilatorWitness> annihilators;  // sequence order
  RegularSequenceCertificate regular;
  std::vector<QuotientWitness> quotients;
  SecantStatement secant;
  ModuleStructure structure;
  std::uint32_t degree_bound = 0;
  std::vector<InclusionReport> inclusions;
};

// Throws NotDetectedFinite when the hypothesis fails.
FlatnessCertificate certify_de_smit_lenstra(const PolyRingPtr& ring, const PolyVector& F,
                                            const std::vector<BaseIdeal>& ideals, std::uint32_t degree_bound = 4,
                                            MonomialOrder order = MonomialOrder::grevlex());

struct VerificationItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerificationReport {
  bool ok = false;
  std::vector<VerificationItem> items;
  std::optional<std::string> first_failure;
};

// Plain polynomial and matrix arithmetic; stops at the first failing item.
VerificationReport verify_certificate(const FlatnessCertificate& cert);

}  // namespace secant
