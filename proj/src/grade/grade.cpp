#include "grade/grade.hpp"

namespace secant {

namespace {

const char* const kPrefixes[] = {"U", "V", "W", "T", "S", "R", "Q", "P", "N", "M", "L", "K", "J", "H", "G"};

bool collides(const PolyRingPtr& ring, const std::string& prefix, std::size_t count) {
  for (std::size_t i = 1; i <= count; ++i)
    if (ring->index_of(prefix + std::to_string(i))) return true;
  return false;
}

}  // namespace

KroneckerSequence kronecker_sequence(const PolyRingPtr& ring, const PolyVector& gens, std::size_t m,
                                     KroneckerShape shape) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "a Kronecker sequence needs length at least 1");
  const std::size_t r = gens.size();
  KroneckerSequence seq;
  seq.ideal = gens;
  seq.shape = shape;
  PolyRingPtr ext = ring;
  std::size_t next = 0;
  for (std::size_t j = 0; j < m; ++j) {
    std::string prefix;
    for (;;) {
      prefix = next < std::size(kPrefixes) ? std::string(kPrefixes[next]) : "Y" + std::to_string(next) + "_";
      ++next;
      if (!collides(ext, prefix, r)) break;
    }
    std::size_t first = ext->nvars();
    ext = extend_ring(ext, r, prefix);
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < r; ++i) block.push_back(first + i);
    seq.prefixes.push_back(prefix);
    seq.blocks.push_back(std::move(block));
  }
  seq.ring = ext;
  for (const auto& block : seq.blocks) {
    MultiPoly f(ext);
    for (std::size_t i = 0; i < r; ++i) {
      std::uint32_t e = (shape == KroneckerShape::Quadratic && i > 0) ? 2 : 1;
      f += gens[i].embed(ext) * MultiPoly::variable(ext, block[i]).pow(e);
    }
    seq.forms.push_back(std::move(f));
  }
  return seq;
}

MonomialOrder grade_order(const KroneckerSequence& seq) {
  if (seq.blocks.empty() || seq.blocks.front().empty()) return MonomialOrder::grevlex();
  return MonomialOrder::block(seq.blocks.front().front());
}

GradeResult grade_at_least(const PolyRingPtr& ring, const PolyVector& gens, std::size_t k, KroneckerShape shape) {
  GradeResult out;
  out.certificate.ideal = gens;
  out.certificate.bound = k;
  out.certificate.sequence = kronecker_sequence(ring, gens, k, shape);
  const KroneckerSequence& seq = out.certificate.sequence;
  RegularSequenceResult r = is_regular_sequence(seq.ring, seq.forms, {}, grade_order(seq));
  out.holds = r.regular;
  out.failure_index = r.failure_index;
  out.witness = r.witness;
  out.certificate.evidence = std::move(r.certificate);
  return out;
}

bool check_grade_certificate(const GradeCertificate& cert) {
  const KroneckerSequence& seq = cert.sequence;
  if (seq.length() != cert.bound) return false;
  if (cert.evidence.sequence != seq.forms) return false;
  return check_regular_sequence_certificate(cert.evidence, grade_order(seq));
}

SecantResult is_completely_secant(const PolyRingPtr& ring, const PolyVector& seq,
                                  const std::optional<PolyVector>& known_regular) {
  SecantResult out;
  if (seq.empty()) {
    out.secant = true;
    out.method = SecantResult::Method::RegularSubsequence;
    return out;
  }
  auto try_regular = [&](const PolyVector& candidate) {
    if (candidate.size() < seq.size()) return false;
    GroebnerBasis G = groebner_basis(ring, seq);
    std::vector<PolyVector> cofactors;
    for (const auto& a : candidate) {
      auto c = ideal_member(a, G);
      if (!c) return false;
      cofactors.push_back(std::move(*c));
    }
    RegularSequenceResult r = is_regular_sequence(ring, candidate);
    if (!r.regular) return false;
    out.secant = true;
    out.method = SecantResult::Method::RegularSubsequence;
    out.regular = candidate;
    out.cofactors = std::move(cofactors);
    out.regular_evidence = std::move(r.certificate);
    return true;
  };
  if (known_regular && try_regular(*known_regular)) return out;
  if (try_regular(seq)) return out;
  GradeResult g = grade_at_least(ring, seq, seq.size());
  out.secant = g.holds;
  out.method = SecantResult::Method::Kronecker;
  out.grade = std::move(g);
  return out;
}

}  // namespace secant
