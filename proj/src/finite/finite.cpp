#include "finite/finite.hpp"

#include <algorithm>
#include <map>

namespace secant {

namespace {

struct Lead {
  Exponents exp;
  Coeff coeff;
};

Lead leading(const MultiPoly& p, const MonomialOrder& order) {
  const Exponents* best = nullptr;
  const Coeff* c = nullptr;
  for (const auto& [e, v] : p.terms()) {
    if (!best || order.compare(e, *best) > 0) {
      best = &e;
      c = &v;
    }
  }
  return {*best, *c};
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string var_name(const PolyRingPtr& ring, std::size_t v) { return ring->vars[v]; }

// Leading monomials of basis elements with unit leading coefficient.
std::vector<Exponents> unit_leads(const GroebnerBasis& G) {
  std::vector<Exponents> out;
  for (const auto& g : G.generators) {
    Lead l = leading(g, G.order);
    if (G.ring->base.is_unit(l.coeff)) out.push_back(l.exp);
  }
  return out;
}

bool standard(const Exponents& m, const std::vector<Exponents>& leads) {
  for (const auto& l : leads)
    if (divides(l, m)) return false;
  return true;
}

void sort_monomials(std::vector<Exponents>& ms, const MonomialOrder& order) {
  std::sort(ms.begin(), ms.end(), [&](const Exponents& a, const Exponents& b) { return order.compare(a, b) < 0; });
}

std::vector<Coeff> coords_in(const std::map<Exponents, std::size_t>& index, std::size_t n, const MultiPoly& nf,
                             bool& ok) {
  std::vector<Coeff> v(n, Coeff(0));
  for (const auto& [e, c] : nf.terms()) {
    auto it = index.find(e);
    if (it == index.end()) {
      ok = false;
      return v;
    }
    v[it->second] = c;
  }
  return v;
}

MultiPoly monomial_poly(const PolyRingPtr& ring, const Exponents& e) {
  return MultiPoly::monomial(ring, e, ring->base.one());
}

// Fills matrices and relations once generators and basis are set.
// Returns the first offending product when closure fails.
std::optional<std::string> complete(FiniteAlgebraPresentation& P) {
  const PolyRingPtr& ring = P.ring;
  const BaseRing& k = ring->base;
  const std::size_t n = P.generators.size();
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(P.generators[i], i);

  std::vector<std::vector<Coeff>> nf_coords(n);
  std::vector<std::vector<Coeff>> rows;
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly m = monomial_poly(ring, P.generators[j]);
    MultiPoly nf = normal_form(m, P.basis).remainder;
    bool ok = true;
    nf_coords[j] = coords_in(index, n, nf, ok);
    if (!ok) return "normal form of " + m.to_string() + " leaves the generator set";
    if (nf != m) {
      std::vector<Coeff> row = nf_coords[j];
      for (auto& x : row) x = k.neg(x);
      row[j] = k.add(row[j], k.one());
      rows.push_back(std::move(row));
    }
  }
  auto nf_vector = [&](const MultiPoly& p, bool& ok) {
    MultiPoly nf = normal_form(p, P.basis).remainder;
    return coords_in(index, n, nf, ok);
  };

  P.multiplication.clear();
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    Matrix M(n, n);
    MultiPoly xv = MultiPoly::variable(ring, v);
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      MultiPoly prod = xv * monomial_poly(ring, P.generators[j]);
      auto col = nf_vector(prod, ok);
      if (!ok) return "normal form of " + prod.to_string() + " leaves the generator set";
      for (std::size_t i = 0; i < n; ++i) M.at(i, j) = col[i];
    }
    P.multiplication.push_back(std::move(M));
  }

  // Relations from basis elements with non-unit leading coefficient.
  std::vector<Exponents> uleads = unit_leads(P.basis);
  for (const auto& g : P.basis.generators) {
    Lead l = leading(g, P.order);
    if (k.is_unit(l.coeff)) continue;
    for (const auto& m : P.generators) {
      if (!standard(m, uleads) || !divides(l.exp, m)) continue;
      Exponents t(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) t[i] = m[i] - l.exp[i];
      MultiPoly tg = g.times_monomial(t, k.one());
      std::vector<Coeff> row(n, Coeff(0));
      for (const auto& [e, c] : tg.terms()) {
        bool ok = true;
        auto col = nf_vector(monomial_poly(ring, e), ok);
        if (!ok) return "normal form of a multiple of " + g.to_string() + " leaves the generator set";
        for (std::size_t i = 0; i < n; ++i) row[i] = k.add(row[i], k.mul(c, col[i]));
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::vector<Coeff>> kept;
  for (auto& r : rows) {
    bool zero = std::all_of(r.begin(), r.end(), [&](const Coeff& c) { return k.is_zero(c); });
    if (zero || std::find(kept.begin(), kept.end(), r) != kept.end()) continue;
    kept.push_back(std::move(r));
  }
  P.module_relations = Matrix(kept.size(), n);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) P.module_relations.at(i, j) = kept[i][j];
  return std::nullopt;
}

}  // namespace

MultiPoly FiniteAlgebraPresentation::generator_poly(std::size_t i) const {
  return monomial_poly(ring, generators.at(i));
}

FiniteAlgebraPresentation finiteness_basis(const PolyRingPtr& ring, const PolyVector& F, MonomialOrder order) {
  FiniteAlgebraPresentation P;
  P.ring = ring;
  P.relations_input = F;
  P.order = order;
  P.basis = groebner_basis(ring, F, order);
  const std::size_t nv = ring->nvars();

  if (!ring->base.is_zero_ring()) {
    std::vector<Exponents> uleads = unit_leads(P.basis);
    std::vector<std::uint32_t> bound(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
      std::optional<std::uint32_t> best;
      for (const auto& l : uleads) {
        bool pure = true;
        for (std::size_t w = 0; w < nv; ++w)
          if (w != v && l[w] != 0) pure = false;
        if (pure && (!best || l[v] < *best)) best = l[v];
      }
      if (!best)
        throw Error(ErrorCode::NotDetectedFinite,
                    "finiteness not detected: no basis element with unit leading coefficient has a pure power of " +
                        var_name(ring, v) + " as leading monomial");
      bound[v] = *best;
    }
    Exponents e(nv, 0);
    bool any = true;
    for (std::size_t v = 0; v < nv; ++v) any = any && bound[v] > 0;
    if (any || nv == 0) {
      // enumerate the box below the pure powers
      for (;;) {
        if (standard(e, uleads)) P.generators.push_back(e);
        std::size_t v = 0;
        while (v < nv && ++e[v] == bound[v]) e[v++] = 0;
        if (v == nv) break;
      }
    }
    sort_monomials(P.generators, order);
  }
  if (auto err = complete(P)) throw Error(ErrorCode::Internal, *err);
  return P;
}

FiniteAlgebraPresentation finiteness_basis(const PolyRingPtr& ring, const PolyVector& F,
                                           const std::vector<MultiPoly>& generators, MonomialOrder order) {
  FiniteAlgebraPresentation P;
  P.ring = ring;
  P.relations_input = F;
  P.order = order;
  P.supplied = true;
  P.basis = groebner_basis(ring, F, order);
  for (const auto& g : generators) {
    if (g.size() != 1 || g.terms().begin()->second != ring->base.one())
      throw Error(ErrorCode::InvalidArgument, "module generators must be monomials, got " + g.to_string());
    const Exponents& e = g.terms().begin()->first;
    if (std::find(P.generators.begin(), P.generators.end(), e) == P.generators.end()) P.generators.push_back(e);
  }
  if (!ring->base.is_zero_ring() &&
      std::find(P.generators.begin(), P.generators.end(), Exponents(ring->nvars(), 0)) == P.generators.end())
    throw Error(ErrorCode::InvalidArgument, "module generators must contain 1");
  sort_monomials(P.generators, order);
  if (auto err = complete(P))
    throw Error(ErrorCode::NotDetectedFinite, "supplied module generators are not closed: " + *err);
  return P;
}

std::vector<Coeff> coordinates(const FiniteAlgebraPresentation& P, const MultiPoly& p) {
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < P.generators.size(); ++i) index.emplace(P.generators[i], i);
  bool ok = true;
  auto v = coords_in(index, P.generators.size(), normal_form(p, P.basis).remainder, ok);
  if (!ok) throw Error(ErrorCode::Internal, "normal form of " + p.to_string() + " leaves the generator set");
  return v;
}

Matrix multiplication_matrix(const FiniteAlgebraPresentation& P, const MultiPoly& p) {
  const std::size_t n = P.generators.size();
  Matrix M(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = coordinates(P, p * P.generator_poly(j));
    for (std::size_t i = 0; i < n; ++i) M.at(i, j) = col[i];
  }
  return M;
}

MultiPoly univariate(const PolyRingPtr& ring, std::size_t var, const std::vector<Coeff>& coeffs) {
  MultiPoly p(ring);
  const std::size_t deg = coeffs.size() - 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(ring->nvars(), 0);
    e[var] = static_cast<std::uint32_t>(deg - i);
    p.add_term(e, coeffs[i]);
  }
  return p;
}

AnnihilatorWitness charpoly_annihilator(const FiniteAlgebraPresentation& P, std::size_t var) {
  const Matrix& M = P.multiplication.at(var);
  std::vector<Coeff> coeffs = charpoly(P.ring->base, M);
  MultiPoly chi = univariate(P.ring, var, coeffs);
  auto cof = ideal_member(chi, P.basis);
  if (!cof) throw Error(ErrorCode::Internal, "characteristic polynomial " + chi.to_string() + " is not in the ideal");
  return AnnihilatorWitness{var, coeffs, chi, *cof, AnnihilatorWitness::Source::Charpoly, M};
}

AnnihilatorWitness monic_annihilator(const FiniteAlgebraPresentation& P, std::size_t var) {
  const BaseRing& k = P.ring->base;
  std::optional<AnnihilatorWitness> best;
  auto consider = [&](const MultiPoly& f, std::optional<std::size_t> input_index) {
    if (k.is_zero_ring() || f.is_zero() || !is_monic_in(f, var)) return;
    for (std::size_t w = 0; w < P.ring->nvars(); ++w)
      if (w != var && f.involves(w)) return;
    std::uint32_t d = *f.degree_in(var);
    if (d == 0) return;
    if (best && best->coefficients.size() - 1 <= d) return;
    Coeff lc = f.coefficient_in(var, d).coefficient(Exponents(P.ring->nvars(), 0));
    Coeff inv = k.inverse(lc);
    MultiPoly chi = f.scaled(inv);
    std::vector<Coeff> coeffs;
    for (std::uint32_t e = d + 1; e-- > 0;) {
      Exponents ex(P.ring->nvars(), 0);
      ex[var] = e;
      coeffs.push_back(chi.coefficient(ex));
    }
    PolyVector cof;
    if (input_index) {
      cof.assign(P.relations_input.size(), MultiPoly(P.ring));
      cof[*input_index] = MultiPoly::constant(P.ring, inv);
    } else {
      auto c = ideal_member(chi, P.basis);
      if (!c) return;
      cof = std::move(*c);
    }
    best = AnnihilatorWitness{var, coeffs, chi, cof, AnnihilatorWitness::Source::Relation, std::nullopt};
  };
  for (std::size_t j = 0; j < P.relations_input.size(); ++j) consider(P.relations_input[j], j);
  for (const auto& g : P.basis.generators) consider(g, std::nullopt);
  if (best && best->coefficients.size() - 1 <= P.generators.size()) return *best;
  return charpoly_annihilator(P, var);
}

FiniteRegularSequence regular_sequence_from_finiteness(const FiniteAlgebraPresentation& P) {
  FiniteRegularSequence out;
  for (std::size_t v = P.ring->nvars(); v-- > 0;) {
    AnnihilatorWitness w = monic_annihilator(P, v);
    out.sequence.push_back(w.polynomial);
    out.annihilators.push_back(std::move(w));
  }
  RegularSequenceResult r = is_regular_sequence(P.ring, out.sequence, {}, P.order);
  if (!r.regular) throw Error(ErrorCode::Internal, "annihilator sequence failed the regularity check");
  out.certificate = std::move(r.certificate);
  return out;
}

FiniteRegularSequence regular_sequence_from_finiteness(const PolyRingPtr& ring, const PolyVector& F,
                                                       MonomialOrder order) {
  return regular_sequence_from_finiteness(finiteness_basis(ring, F, order));
}

JacobianResult jacobian_criterion(const PolyRingPtr& ring, const PolyVector& F, MonomialOrder order) {
  if (!ring->base.is_field())
    throw Error(ErrorCode::UnsupportedBase, "the Jacobian criterion needs a field, got " + ring->base.name());
  const std::size_t n = ring->nvars();
  if (F.size() != n)
    throw Error(ErrorCode::InvalidArgument, "the Jacobian criterion needs as many relations as variables");
  std::vector<PolyVector> J(n, PolyVector(n, MultiPoly(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) J[i][j] = F[i].derivative(j);
  MultiPoly det = determinant(ring, J);
  JacobianResult out{false, J, det, det, std::nullopt, std::nullopt, ""};
  FiniteAlgebraPresentation P;
  try {
    P = finiteness_basis(ring, F, order);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDetectedFinite) throw;
    out.reduced = normal_form(det, groebner_basis(ring, F, order)).remainder;
    out.diagnostic = e.what();
    return out;
  }
  out.reduced = normal_form(det, P.basis).remainder;
  Matrix M = multiplication_matrix(P, out.reduced);
  out.matrix = M;
  if (P.generators.empty()) {
    out.unit = true;
    out.inverse = MultiPoly(ring);
    out.diagnostic = "the algebra is zero";
    return out;
  }
  auto inv = inverse_over_field(ring->base, M);
  if (!inv) {
    out.diagnostic = "det J = " + out.reduced.to_string() + " is a zero divisor in the algebra";
    return out;
  }
  MultiPoly g(ring);
  for (std::size_t i = 0; i < P.generators.size(); ++i) g += P.generator_poly(i).scaled(inv->at(i, 0));
  out.inverse = normal_form(g, P.basis).remainder;
  out.unit = true;
  return out;
}

}  // namespace secant
