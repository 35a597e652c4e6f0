#include "regseq/regseq.hpp"

namespace secant {

namespace {

PolyVector nonzero(const PolyVector& v) {
  PolyVector out;
  for (const auto& p : v)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

bool is_relation(const SyzygyVector& u, const PolyVector& F, const PolyRingPtr& ring) {
  if (u.size() != F.size()) return false;
  MultiPoly sum(ring);
  for (std::size_t i = 0; i < F.size(); ++i) sum += u[i] * F[i];
  return sum.is_zero();
}

}  // namespace

RegularElementResult is_regular_element(const PolyRingPtr& ring, const MultiPoly& a, const PolyVector& I,
                                        MonomialOrder order) {
  PolyVector gens = nonzero(I);
  GroebnerBasis GI = groebner_basis(ring, gens, order);
  GroebnerBasis Q = ideal_quotient(ring, gens, a, order);
  RegularElementResult out;
  out.ideal_basis = GI.generators;
  out.quotient_basis = Q.generators;
  out.regular = true;
  for (const auto& q : Q.generators) {
    if (!reduces_to_zero(q, GI)) {
      out.regular = false;
      out.witness = q;
      break;
    }
  }
  return out;
}

std::optional<std::size_t> structural_variable(const MultiPoly& a, const PolyVector& previous) {
  for (std::size_t v = 0; v < a.ring()->nvars(); ++v) {
    if (!is_monic_in(a, v)) continue;
    bool clash = false;
    for (const auto& p : previous)
      if (p.involves(v)) clash = true;
    if (!clash) return v;
  }
  return std::nullopt;
}

RegularSequenceResult is_regular_sequence(const PolyRingPtr& ring, const PolyVector& seq, const PolyVector& ambient,
                                          MonomialOrder order, bool allow_structural) {
  RegularSequenceResult out;
  out.certificate.ring = ring;
  out.certificate.sequence = seq;
  out.certificate.ambient = ambient;
  PolyVector current = nonzero(ambient);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    RegularityStep step(seq[i]);
    std::optional<std::size_t> v;
    if (allow_structural) v = structural_variable(seq[i], current);
    if (v) {
      step.kind = RegularityStep::Kind::Structural;
      step.variable = v;
      step.regular = true;
    } else {
      RegularElementResult r = is_regular_element(ring, seq[i], current, order);
      step.kind = RegularityStep::Kind::Quotient;
      step.ideal_basis = std::move(r.ideal_basis);
      step.quotient_basis = std::move(r.quotient_basis);
      step.regular = r.regular;
      step.witness = r.witness;
    }
    bool ok = step.regular;
    out.certificate.steps.push_back(std::move(step));
    if (!ok) {
      out.failure_index = i + 1;
      out.witness = out.certificate.steps.back().witness;
      return out;
    }
    if (!seq[i].is_zero()) current.push_back(seq[i]);
  }
  out.regular = true;
  return out;
}

bool check_regular_sequence_certificate(const RegularSequenceCertificate& cert, MonomialOrder order) {
  if (cert.steps.size() != cert.sequence.size()) return false;
  PolyVector current = nonzero(cert.ambient);
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const RegularityStep& step = cert.steps[i];
    if (step.element != cert.sequence[i] || !step.regular) return false;
    if (step.kind == RegularityStep::Kind::Structural) {
      if (!step.variable || *step.variable >= cert.ring->nvars()) return false;
      if (!is_monic_in(step.element, *step.variable)) return false;
      for (const auto& p : current)
        if (p.involves(*step.variable)) return false;
    } else {
      GroebnerBasis GI = groebner_basis(cert.ring, current, order);
      for (const auto& q : step.quotient_basis) {
        if (!reduces_to_zero(q, GI)) return false;
      }
      GroebnerBasis Q = ideal_quotient(cert.ring, current, step.element, order);
      GroebnerBasis claimed = groebner_basis(cert.ring, step.quotient_basis, order);
      for (const auto& q : Q.generators)
        if (!reduces_to_zero(q, claimed)) return false;
    }
    if (!step.element.is_zero()) current.push_back(step.element);
  }
  return true;
}

std::vector<SyzygyVector> koszul_relations(const PolyRingPtr& ring, const PolyVector& F) {
  std::vector<SyzygyVector> out;
  const std::size_t s = F.size();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      SyzygyVector v(s, MultiPoly(ring));
      v[i] = F[j];
      v[j] = -F[i];
      out.push_back(std::move(v));
    }
  }
  return out;
}

TrivialSyzygyResult is_trivial_syzygy_generated(const PolyRingPtr& ring, const PolyVector& F, MonomialOrder order) {
  TrivialSyzygyResult out;
  out.relations = syzygies(ring, F, order);
  ModuleBasis koszul(ring, F.size(), koszul_relations(ring, F), order);
  for (const auto& r : out.relations) {
    auto coeffs = koszul.member(r);
    if (!coeffs) {
      out.obstruction = r;
      out.expressions.clear();
      return out;
    }
    out.expressions.push_back(std::move(*coeffs));
  }
  out.generated = true;
  return out;
}

AntisymmetricWitness zero_antisymmetric(const PolyRingPtr& ring, std::size_t size) {
  return AntisymmetricWitness{size, std::vector<PolyVector>(size, PolyVector(size, MultiPoly(ring)))};
}

bool is_antisymmetric(const AntisymmetricWitness& m) {
  if (m.entries.size() != m.size) return false;
  for (std::size_t i = 0; i < m.size; ++i) {
    if (m.entries[i].size() != m.size) return false;
    if (!m.entries[i][i].is_zero()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!(m.entries[i][j] + m.entries[j][i]).is_zero()) return false;
  }
  return true;
}

PolyVector row_times(const PolyVector& F, const AntisymmetricWitness& m) {
  if (F.size() != m.size) throw Error(ErrorCode::InvalidArgument, "row_times: size mismatch");
  PolyVector out;
  for (std::size_t j = 0; j < m.size; ++j) {
    MultiPoly sum(F.front().ring());
    for (std::size_t i = 0; i < m.size; ++i) sum += F[i] * m.entries[i][j];
    out.push_back(std::move(sum));
  }
  return out;
}

AntisymmetricWitness express_syzygy_antisymmetric(const PolyRingPtr& ring, const SyzygyVector& u,
                                                  const PolyVector& F, MonomialOrder order) {
  if (!is_relation(u, F, ring))
    throw Error(ErrorCode::NotARelation, "the vector is not a relation of the sequence");
  const std::size_t s = F.size();
  AntisymmetricWitness n = zero_antisymmetric(ring, s);
  bool all_zero = true;
  for (const auto& p : u)
    if (!p.is_zero()) all_zero = false;
  if (all_zero) return n;

  auto coeffs = module_member(u, koszul_relations(ring, F), order);
  if (!coeffs)
    throw Error(ErrorCode::NotTriviallyGenerated, "relation is not generated by the trivial (Koszul) relations");
  std::size_t k = 0;
  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t q = p + 1; q < s; ++q, ++k) {
      const MultiPoly& c = (*coeffs)[k];
      n.entries[q][p] += c;
      n.entries[p][q] -= c;
    }
  }
  return n;
}

}  // namespace secant
