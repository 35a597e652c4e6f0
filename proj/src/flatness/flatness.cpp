#include "flatness/flatness.hpp"

#include <algorithm>
#include <map>

namespace secant {

namespace {

bool all_zero(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

bool coefficients_in(const MultiPoly& p, const BaseIdeal& a) {
  for (const auto& [e, c] : p.terms())
    if (!ideal_contains(a, c, p.base())) return false;
  return true;
}

PolyVector map_all(const PolyVector& v, const PolyRingPtr& target) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.map_base(target));
  return out;
}

MultiPoly lift(const MultiPoly& p, const PolyRingPtr& ring) {
  MultiPoly r(ring);
  for (const auto& [e, c] : p.terms()) r.add_term(e, canonical_lift(c, p.base(), ring->base));
  return r;
}

// Lower triangle lifted, upper triangle its negative.
AntisymmetricWitness lift_antisymmetric(const AntisymmetricWitness& n, const PolyRingPtr& ring) {
  AntisymmetricWitness m = zero_antisymmetric(ring, n.size);
  for (std::size_t q = 0; q < n.size; ++q)
    for (std::size_t p = 0; p < q; ++p) {
      m.entries[q][p] = lift(n.entries[q][p], ring);
      m.entries[p][q] = -m.entries[q][p];
    }
  return m;
}

AnnihilatorWitness reduce_annihilator(const AnnihilatorWitness& a, const PolyRingPtr& target) {
  AnnihilatorWitness r{a.variable, {}, a.polynomial.map_base(target), map_all(a.cofactors, target), a.source,
                       std::nullopt};
  for (const auto& co : a.coefficients) r.coefficients.push_back(target->base.from_rational(co));
  if (a.matrix) r.matrix = mat_map(*a.matrix, a.polynomial.base(), target->base);
  return r;
}

bool same_annihilator(const AnnihilatorWitness& a, const AnnihilatorWitness& b) {
  return a.variable == b.variable && a.coefficients == b.coefficients && a.polynomial == b.polynomial &&
         a.cofactors == b.cofactors && a.source == b.source && a.matrix == b.matrix;
}

MultiPoly monomial_poly(const PolyRingPtr& ring, const Exponents& e) {
  return MultiPoly::monomial(ring, e, ring->base.one());
}

MultiPoly combination(const FiniteAlgebraPresentation& P, const std::vector<Coeff>& coords) {
  MultiPoly out(P.ring);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!P.ring->base.is_zero(coords[k])) out.add_term(P.generators[k], coords[k]);
  return out;
}

void enumerate_monomials(std::size_t nvars, std::uint32_t max_degree, std::vector<Exponents>& out) {
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == nvars) {
      out.push_back(e);
      return;
    }
    for (std::uint32_t d = 0; d <= left; ++d) {
      e[i] = d;
      self(self, i + 1, left - d);
    }
    e[i] = 0;
  };
  rec(rec, 0, max_degree);
}

}  // namespace

RewriteWitness rewrite_with_ideal_coefficients(const MultiPoly& h, const PolyVector& u, const PolyVector& F,
                                               const BaseIdeal& a, MonomialOrder order) {
  const PolyRingPtr& ring = h.ring();
  if (u.size() != F.size()) throw Error(ErrorCode::InvalidArgument, "u and F have different lengths");
  if (dot(u, F) != h) throw Error(ErrorCode::NotARelation, "h is not Sum u_i f_i");
  const PolyRingPtr reduced = reduce_ring(ring, a);
  if (!h.map_base(reduced).is_zero())
    throw Error(ErrorCode::NotARelationModA, "Sum u_i f_i does not vanish modulo the ideal");

  RewriteWitness out(h);
  out.ideal = a;
  out.relations = F;
  out.u = u;
  out.correction = PolyVector(F.size(), MultiPoly(ring));
  out.lifted = zero_antisymmetric(ring, F.size());

  const PolyVector ubar = map_all(u, reduced);
  if (!all_zero(ubar)) {
    const PolyVector Fbar = map_all(F, reduced);
    auto koszul = koszul_relations(reduced, Fbar);
    std::vector<SyzygyVector> gens = koszul;
    auto direct = module_member(ubar, gens, order);
    std::optional<PolyVector> coeffs = direct;
    std::vector<SyzygyVector> syz;
    if (!coeffs) {
      syz = syzygies(ring, F, order);
      for (const auto& s : syz) gens.push_back(map_all(s, reduced));
      coeffs = module_member(ubar, gens, order);
      if (!coeffs)
        throw Error(ErrorCode::NotTriviallyGenerated,
                    "the reduced relation is not generated by trivial relations and lifted relations");
    }
    AntisymmetricWitness n = zero_antisymmetric(reduced, F.size());
    std::size_t k = 0;
    for (std::size_t p = 0; p < F.size(); ++p)
      for (std::size_t q = p + 1; q < F.size(); ++q, ++k) {
        n.entries[q][p] += (*coeffs)[k];
        n.entries[p][q] -= (*coeffs)[k];
      }
    for (std::size_t j = 0; j < syz.size(); ++j) {
      const MultiPoly c = lift((*coeffs)[koszul.size() + j], ring);
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < F.size(); ++i) out.correction[i] += c * syz[j][i];
    }
    out.lifted = lift_antisymmetric(n, ring);
  }
  out.w = row_times(F, out.lifted);
  out.v.reserve(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) out.v.push_back(u[i] - out.correction[i] - out.w[i]);
  return out;
}

bool check_rewrite_witness(const RewriteWitness& w, std::string* failure) {
  auto fail = [&](const std::string& why) {
    if (failure) *failure = why;
    return false;
  };
  const std::size_t s = w.relations.size();
  if (w.u.size() != s || w.v.size() != s || w.w.size() != s || w.correction.size() != s || w.lifted.size != s)
    return fail("length mismatch");
  if (dot(w.u, w.relations) != w.h) return fail("h != Sum u_i f_i");
  if (!coefficients_in(w.h, w.ideal)) return fail("h has a coefficient outside the ideal");
  if (!dot(w.correction, w.relations).is_zero()) return fail("correction is not a relation");
  if (!is_antisymmetric(w.lifted)) return fail("M is not antisymmetric");
  if (row_times(w.relations, w.lifted) != w.w) return fail("w != F*M");
  for (std::size_t i = 0; i < s; ++i)
    if (w.v[i] != w.u[i] - w.correction[i] - w.w[i]) return fail("v != u - correction - w");
  if (dot(w.v, w.relations) != w.h) return fail("Sum v_i f_i != h");
  for (const auto& p : w.v)
    if (!coefficients_in(p, w.ideal)) return fail("v has a coefficient outside the ideal");
  return true;
}

InclusionReport check_flatness_inclusion(const PolyRingPtr& ring, const PolyVector& F, const BaseIdeal& a,
                                         std::uint32_t degree_bound, MonomialOrder order) {
  InclusionReport rep;
  rep.ideal = a;
  rep.degree_bound = degree_bound;
  const BaseRing& k = ring->base;
  if (k.is_zero(a.generator) || k.is_zero_ring()) {
    rep.success = true;
    return rep;
  }

  struct Product {
    std::size_t index;
    Exponents m;
    MultiPoly value;
  };
  std::vector<Product> products;
  std::vector<Exponents> monos;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].is_zero()) continue;
    const std::uint32_t d = *F[i].total_degree();
    if (d > degree_bound) continue;
    monos.clear();
    enumerate_monomials(ring->nvars(), degree_bound - d, monos);
    std::sort(monos.begin(), monos.end(), grevlex_greater);
    for (const auto& m : monos) products.push_back({i, m, F[i].times_monomial(m, k.one())});
  }

  std::vector<std::vector<Coeff>> family;
  if (k.is_field()) {
    for (std::size_t j = 0; j < products.size(); ++j) {
      std::vector<Coeff> c(products.size(), k.zero());
      c[j] = k.one();
      family.push_back(std::move(c));
    }
  } else {
    std::map<Exponents, std::size_t> rows;
    for (const auto& p : products)
      for (const auto& [e, c] : p.value.terms()) rows.emplace(e, 0);
    std::size_t r = 0;
    for (auto& [e, idx] : rows) idx = r++;
    mpz_class d = abs(a.generator.get_num());
    if (k.kind() == BaseRing::Kind::IntegersMod) d = gcd(d, k.modulus());
    const std::size_t cols = products.size() + rows.size();
    std::vector<std::vector<mpz_class>> A(rows.size(), std::vector<mpz_class>(cols, 0));
    for (std::size_t j = 0; j < products.size(); ++j)
      for (const auto& [e, c] : products[j].value.terms()) A[rows[e]][j] = c.get_num();
    for (std::size_t i = 0; i < rows.size(); ++i) A[i][products.size() + i] = d;
    for (const auto& v : integer_kernel(A, cols)) {
      std::vector<Coeff> c(products.size());
      for (std::size_t j = 0; j < products.size(); ++j) c[j] = k.from_integer(v[j]);
      family.push_back(std::move(c));
    }
  }

  rep.family_size = family.size();
  for (const auto& c : family) {
    MultiPoly h(ring);
    PolyVector u(F.size(), MultiPoly(ring));
    for (std::size_t j = 0; j < products.size(); ++j) {
      if (k.is_zero(c[j])) continue;
      h += products[j].value.scaled(c[j]);
      u[products[j].index].add_term(products[j].m, c[j]);
    }
    if (h.is_zero()) {
      ++rep.skipped_zero;
      continue;
    }
    try {
      rep.witnesses.push_back(rewrite_with_ideal_coefficients(h, u, F, a, order));
    } catch (const Error& e) {
      rep.failure = e.what();
      rep.failing_element = h;
      return rep;
    }
  }
  rep.success = true;
  return rep;
}

ModuleStructure projective_structure(const FiniteAlgebraPresentation& P) {
  ModuleStructure out;
  const BaseRing& k = P.ring->base;
  out.generators = P.size();

  auto local = [&](const BaseRing& R) {
    LocalFreeFactor f{R, mat_map(P.module_relations, k, R), {}, 0};
    f.smith = smith_normal_form(R, f.relations);
    for (const auto& d : f.smith.diagonal)
      if (!R.is_unit(d))
        throw Error(ErrorCode::NonUnitDivisor,
                    "elementary divisor " + R.to_string(d) + " over " + R.name() + " is not a unit");
    f.rank = P.size() - f.smith.diagonal.size();
    return f;
  };

  if (k.is_zero_ring()) {
    out.kind = ModuleStructure::Kind::Zero;
    out.rank = 0;
    return out;
  }
  switch (k.kind()) {
    case BaseRing::Kind::Rationals:
    case BaseRing::Kind::PrimeField:
      out.kind = ModuleStructure::Kind::VectorSpace;
      out.factors.push_back(local(k));
      break;
    case BaseRing::Kind::Integers:
      out.kind = ModuleStructure::Kind::Free;
      out.factors.push_back(local(k));
      break;
    case BaseRing::Kind::IntegersMod:
      for (const auto& [p, e] : factor_integer(k.modulus())) {
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
        out.factors.push_back(local(BaseRing::integers_mod(q)));
      }
      break;
  }
  bool same = true;
  for (const auto& f : out.factors) same = same && f.rank == out.factors.front().rank;
  if (same) out.rank = out.factors.front().rank;
  if (k.kind() == BaseRing::Kind::IntegersMod)
    out.kind = same ? ModuleStructure::Kind::Free : ModuleStructure::Kind::LocallyFree;
  return out;
}

FlatnessCertificate certify_de_smit_lenstra(const PolyRingPtr& ring, const PolyVector& F,
                                            const std::vector<BaseIdeal>& ideals, std::uint32_t degree_bound,
                                            MonomialOrder order) {
  const std::size_t n = ring->nvars();
  if (F.size() != n)
    throw Error(ErrorCode::InvalidArgument, "need as many relations as variables (" + std::to_string(F.size()) +
                                                " relations, " + std::to_string(n) + " variables)");
  FlatnessCertificate cert;
  cert.ring = ring;
  cert.relations = F;
  cert.order = order;
  cert.degree_bound = degree_bound;

  FiniteAlgebraPresentation P = finiteness_basis(ring, F, order);
  cert.generators = P.generators;
  cert.multiplication = P.multiplication;
  cert.module_relations = P.module_relations;

  for (std::size_t v = 0; v < n; ++v) {
    std::vector<PolyVector> per_gen;
    const MultiPoly x = MultiPoly::variable(ring, v);
    for (std::size_t j = 0; j < P.size(); ++j) {
      std::vector<Coeff> col(P.size());
      for (std::size_t i = 0; i < P.size(); ++i) col[i] = P.multiplication[v].at(i, j);
      auto cof = ideal_member(x * P.generator_poly(j) - combination(P, col), P.basis);
      if (!cof) throw Error(ErrorCode::Internal, "closure identity outside the ideal");
      per_gen.push_back(std::move(*cof));
    }
    cert.closure_cofactors.push_back(std::move(per_gen));
  }
  for (std::size_t r = 0; r < P.module_relations.rows(); ++r) {
    std::vector<Coeff> row(P.size());
    for (std::size_t j = 0; j < P.size(); ++j) row[j] = P.module_relations.at(r, j);
    auto cof = ideal_member(combination(P, row), P.basis);
    if (!cof) throw Error(ErrorCode::Internal, "module relation outside the ideal");
    cert.relation_cofactors.push_back(std::move(*cof));
  }

  FiniteRegularSequence seq = regular_sequence_from_finiteness(P);
  cert.annihilators = seq.annihilators;
  cert.regular = seq.certificate;

  for (const auto& c : ideals) {
    QuotientWitness q;
    q.ideal = c;
    q.ring = reduce_ring(ring, c);
    q.zero_ring = q.ring->base.is_zero_ring();
    q.relations = map_all(F, q.ring);
    if (!q.zero_ring) {
      PolyVector reduced_seq;
      for (const auto& a : seq.annihilators) {
        AnnihilatorWitness r = reduce_annihilator(a, q.ring);
        reduced_seq.push_back(r.polynomial);
        q.annihilators.push_back(std::move(r));
      }
      auto res = is_regular_sequence(q.ring, reduced_seq, {}, order, true);
      if (!res.regular) throw Error(ErrorCode::Internal, "reduced annihilator sequence is not regular");
      q.certificate = std::move(res.certificate);
    }
    cert.quotients.push_back(std::move(q));
  }

  cert.secant.length = n;
  cert.secant.sequence = seq.sequence;
  cert.secant.holds = true;

  cert.structure = projective_structure(P);

  for (const auto& c : ideals) cert.inclusions.push_back(check_flatness_inclusion(ring, F, c, degree_bound, order));
  return cert;
}

namespace {

class Verifier {
 public:
  explicit Verifier(VerificationReport& rep) : rep_(rep) {}

  bool check(const std::string& name, bool ok, const std::string& detail = {}) {
    rep_.items.push_back({name, ok, ok ? std::string() : detail});
    if (!ok && !rep_.first_failure) rep_.first_failure = name + (detail.empty() ? "" : ": " + detail);
    return ok;
  }

 private:
  VerificationReport& rep_;
};

bool structural_steps(const RegularSequenceCertificate& c, const PolyVector& expected, std::string& why) {
  if (c.sequence != expected) return why = "sequence differs from the annihilators", false;
  if (!c.ambient.empty()) return why = "unexpected ambient ideal", false;
  if (c.steps.size() != c.sequence.size()) return why = "step count", false;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& st = c.steps[i];
    if (st.kind != RegularityStep::Kind::Structural || !st.variable || !st.regular)
      return why = "step " + std::to_string(i + 1) + " is not structural", false;
    if (st.element != c.sequence[i]) return why = "step element", false;
    if (*st.variable >= c.ring->nvars() || !is_monic_in(st.element, *st.variable))
      return why = "step " + std::to_string(i + 1) + " is not monic in its variable", false;
    for (std::size_t j = 0; j < i; ++j)
      if (c.sequence[j].involves(*st.variable))
        return why = "step " + std::to_string(i + 1) + " variable occurs earlier", false;
  }
  return true;
}

bool annihilator_ok(const AnnihilatorWitness& a, const PolyRingPtr& ring, const PolyVector& F,
                    const std::optional<Matrix>& expected_matrix, std::string& why) {
  const BaseRing& k = ring->base;
  if (a.variable >= ring->nvars()) return why = "variable index", false;
  if (a.matrix && a.matrix->rows() != a.matrix->cols()) return why = "matrix is not square", false;
  if (a.coefficients.empty() || a.coefficients.front() != k.one()) return why = "not monic", false;
  for (const auto& c : a.coefficients)
    if (k.from_rational(c) != c) return why = "coefficient not canonical", false;
  if (univariate(ring, a.variable, a.coefficients) != a.polynomial)
    return why = "polynomial does not match its coefficients", false;
  if (a.cofactors.size() != F.size() || dot(a.cofactors, F) != a.polynomial)
    return why = "cofactor identity fails", false;
  if (a.source == AnnihilatorWitness::Source::Charpoly) {
    if (!a.matrix) return why = "charpoly source without matrix", false;
    if (expected_matrix && *a.matrix != *expected_matrix) return why = "matrix differs from multiplication", false;
    if (a.matrix->rows() + 1 != a.coefficients.size()) return why = "degree differs from matrix size", false;
    if (charpoly(k, *a.matrix) != a.coefficients) return why = "not the characteristic polynomial", false;
    if (!mat_poly_eval(k, a.coefficients, *a.matrix).is_zero()) return why = "Cayley-Hamilton fails", false;
  }
  return true;
}

bool smith_ok(const LocalFreeFactor& f, std::size_t gens, std::string& why) {
  const BaseRing& R = f.ring;
  const SmithForm& s = f.smith;
  const std::size_t r = f.relations.rows(), c = f.relations.cols();
  if (c != gens) return why = "relation matrix width", false;
  if (s.U.rows() != r || s.U.cols() != r || s.V.rows() != c || s.V.cols() != c || s.D.rows() != r ||
      s.D.cols() != c)
    return why = "matrix shapes", false;
  if (mat_mul(R, mat_mul(R, s.U, f.relations), s.V) != s.D) return why = "U*R*V != D", false;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const bool diag = i == j && i < s.diagonal.size();
      if (diag && s.D.at(i, j) != s.diagonal[i]) return why = "diagonal list differs from D", false;
      if (!diag && !R.is_zero(s.D.at(i, j))) return why = "D is not diagonal", false;
    }
  for (const auto& d : s.diagonal)
    if (!R.is_unit(d)) return why = "non-unit elementary divisor " + R.to_string(d), false;
  if (!R.is_unit(determinant(R, s.U)) || !R.is_unit(determinant(R, s.V)))
    return why = "change of basis is not unimodular", false;
  if (f.rank + s.diagonal.size() != gens) return why = "rank", false;
  return true;
}

}  // namespace

namespace {

VerificationReport verify_impl(const FlatnessCertificate& cert, VerificationReport& rep) {
  Verifier V(rep);
  auto done = [&] {
    rep.ok = !rep.first_failure.has_value();
    return rep;
  };
  std::string why;
  const PolyRingPtr& ring = cert.ring;
  if (!V.check("ring", ring != nullptr, "missing ring")) return done();
  const BaseRing& k = ring->base;
  const std::size_t n = ring->nvars();
  const PolyVector& F = cert.relations;
  const std::size_t g = cert.generators.size();

  bool shape = F.size() == n && cert.multiplication.size() == n && cert.closure_cofactors.size() == n &&
               cert.annihilators.size() == n && cert.module_relations.cols() == g &&
               cert.relation_cofactors.size() == cert.module_relations.rows();
  for (const auto& p : F) shape = shape && same_ring(p.ring(), ring);
  for (std::size_t v = 0; shape && v < n; ++v) {
    shape = cert.multiplication[v].rows() == g && cert.multiplication[v].cols() == g &&
            cert.closure_cofactors[v].size() == g;
    for (const auto& cof : cert.closure_cofactors[v]) shape = shape && cof.size() == F.size();
  }
  for (const auto& cof : cert.relation_cofactors) shape = shape && cof.size() == F.size();
  if (!V.check("shape", shape, "dimensions do not match")) return done();

  bool gens_ok = g == 0 || cert.generators.front() == Exponents(n, 0);
  for (std::size_t i = 0; gens_ok && i < g; ++i) {
    gens_ok = cert.generators[i].size() == n;
    for (std::size_t j = 0; j < i; ++j) gens_ok = gens_ok && cert.generators[i] != cert.generators[j];
  }
  if (!V.check("generators", gens_ok, "generators must start with 1 and be distinct")) return done();

  auto gen_combination = [&](auto entry) {
    MultiPoly out(ring);
    for (std::size_t i = 0; i < g; ++i) out.add_term(cert.generators[i], entry(i));
    return out;
  };

  for (std::size_t v = 0; v < n; ++v) {
    const MultiPoly x = MultiPoly::variable(ring, v);
    for (std::size_t j = 0; j < g; ++j) {
      const MultiPoly lhs = x * monomial_poly(ring, cert.generators[j]) -
                            gen_combination([&](std::size_t i) { return cert.multiplication[v].at(i, j); });
      if (!V.check("closure[" + ring->vars[v] + "][" + std::to_string(j) + "]",
                   lhs == dot(cert.closure_cofactors[v][j], F), "x*g != Sum M g + Sum c f"))
        return done();
    }
  }
  for (std::size_t r = 0; r < cert.module_relations.rows(); ++r) {
    const MultiPoly lhs = gen_combination([&](std::size_t j) { return cert.module_relations.at(r, j); });
    if (!V.check("relation[" + std::to_string(r) + "]", lhs == dot(cert.relation_cofactors[r], F),
                 "relation is not Sum c f"))
      return done();
  }

  PolyVector sequence;
  for (std::size_t i = 0; i < cert.annihilators.size(); ++i) {
    const auto& a = cert.annihilators[i];
    std::optional<Matrix> expected;
    if (a.variable < n) expected = cert.multiplication[a.variable];
    if (!V.check("annihilator[" + std::to_string(i) + "]", annihilator_ok(a, ring, F, expected, why), why))
      return done();
    sequence.push_back(a.polynomial);
  }
  if (!V.check("regular-sequence", same_ring(cert.regular.ring, ring) && structural_steps(cert.regular, sequence, why),
               why))
    return done();

  for (std::size_t qi = 0; qi < cert.quotients.size(); ++qi) {
    const auto& q = cert.quotients[qi];
    const std::string name = "quotient[" + k.to_string(q.ideal.generator) + "]";
    const PolyRingPtr expected_ring = reduce_ring(ring, q.ideal);
    bool ok = same_ring(q.ring, expected_ring) && q.zero_ring == expected_ring->base.is_zero_ring() &&
              q.relations == map_all(F, expected_ring);
    if (!V.check(name + ".relations", ok, "reduced relations do not match")) return done();
    if (q.zero_ring) continue;
    if (!V.check(name + ".count", q.annihilators.size() == n, "need one annihilator per variable")) return done();
    PolyVector qseq;
    for (std::size_t i = 0; i < q.annihilators.size(); ++i) {
      const std::string item = name + ".annihilator[" + std::to_string(i) + "]";
      if (!V.check(item + ".reduction", same_annihilator(q.annihilators[i], reduce_annihilator(cert.annihilators[i], q.ring)),
                   "not the reduction of the annihilator over the base"))
        return done();
      if (!V.check(item, annihilator_ok(q.annihilators[i], q.ring, q.relations, std::nullopt, why), why))
        return done();
      qseq.push_back(q.annihilators[i].polynomial);
    }
    if (!V.check(name + ".regular-sequence", same_ring(q.certificate.ring, q.ring) &&
                                                 structural_steps(q.certificate, qseq, why),
                 why))
      return done();
  }

  if (!V.check("completely-secant",
               cert.secant.holds && cert.secant.length == n && cert.secant.sequence == sequence,
               "statement does not match the regular sequence"))
    return done();

  const ModuleStructure& ms = cert.structure;
  bool ms_ok = ms.generators == g;
  if (k.is_zero_ring()) {
    ms_ok = ms_ok && ms.factors.empty() && ms.rank == std::optional<std::size_t>(0);
  } else {
    mpz_class product = 1;
    for (const auto& f : ms.factors) product *= f.ring.kind() == BaseRing::Kind::IntegersMod ? f.ring.modulus() : 1;
    if (k.kind() == BaseRing::Kind::IntegersMod)
      ms_ok = ms_ok && product == k.modulus();
    else
      ms_ok = ms_ok && ms.factors.size() == 1 && ms.factors.front().ring == k;
    if (!ms.factors.empty() && ms.rank) {
      for (const auto& f : ms.factors) ms_ok = ms_ok && f.rank == *ms.rank;
    }
    ms_ok = ms_ok && !ms.factors.empty();
  }
  if (!V.check("structure", ms_ok, "factors do not match the base ring")) return done();
  for (std::size_t i = 0; i < ms.factors.size(); ++i) {
    const auto& f = ms.factors[i];
    const std::string name = "structure[" + f.ring.name() + "]";
    if (!V.check(name + ".relations", f.relations == mat_map(cert.module_relations, k, f.ring),
                 "presentation differs from the module relations"))
      return done();
    if (!V.check(name + ".smith", smith_ok(f, g, why), why)) return done();
    const SmithForm again = smith_normal_form(f.ring, f.relations);
    if (!V.check(name + ".smith-canonical",
                 again.D == f.smith.D && again.U == f.smith.U && again.V == f.smith.V,
                 "Smith form differs from the deterministic reduction"))
      return done();
  }

  for (const auto& inc : cert.inclusions) {
    const std::string name = "inclusion[" + k.to_string(inc.ideal.generator) + "]";
    if (!V.check(name, inc.success && inc.degree_bound == cert.degree_bound, "inclusion reported a failure"))
      return done();
    for (std::size_t i = 0; i < inc.witnesses.size(); ++i) {
      const auto& w = inc.witnesses[i];
      bool ok = w.relations == F && w.ideal.generator == inc.ideal.generator && check_rewrite_witness(w, &why);
      if (w.relations != F || w.ideal.generator != inc.ideal.generator) why = "witness belongs to another problem";
      if (!V.check(name + ".witness[" + std::to_string(i) + "]", ok, why)) return done();
    }
  }
  return done();
}

}  // namespace

VerificationReport verify_certificate(const FlatnessCertificate& cert) {
  VerificationReport rep;
  try {
    return verify_impl(cert, rep);
  } catch (const Error& e) {
    rep.items.push_back({"consistency", false, e.what()});
    rep.first_failure = std::string("consistency: ") + e.what();
    rep.ok = false;
    return rep;
  }
}

}  // namespace secant
