#include "groebner/groebner.hpp"

#include <algorithm>

namespace secant {

namespace detail {

Vec to_vec(const MultiPoly& p, const Arith& ar, std::uint32_t comp) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) terms.push_back(Term{comp, e, c});
  return ar.normalize_terms(std::move(terms));
}

Vec to_module_vec(const SyzygyVector& v, const Arith& ar) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& [e, c] : v[i].terms()) terms.push_back(Term{static_cast<std::uint32_t>(i), e, c});
  return ar.normalize_terms(std::move(terms));
}

MultiPoly from_vec(const Vec& v, const PolyRingPtr& ring, std::uint32_t comp) {
  MultiPoly p(ring);
  for (const auto& t : v)
    if (t.comp == comp) p.add_term(t.exp, t.coeff);
  return p;
}

SyzygyVector from_module_vec(const Vec& v, const PolyRingPtr& ring, std::size_t rank) {
  SyzygyVector out(rank, MultiPoly(ring));
  for (const auto& t : v) {
    if (t.comp >= rank) throw Error(ErrorCode::Internal, "module vector component out of range");
    out[t.comp].add_term(t.exp, t.coeff);
  }
  return out;
}

}  // namespace detail

namespace {

void check_ring(const PolyRingPtr& ring, const MultiPoly& p) {
  if (!same_ring(ring, p.ring()))
    throw Error(ErrorCode::InvalidArgument,
                "polynomial " + p.to_string() + " lives in " + p.ring()->describe() + ", expected " +
                    ring->describe());
}

PolyVector compose_cofactors(const detail::Arith& ar, const std::vector<detail::Vec>& quotients,
                             const std::vector<detail::Element>& basis, const PolyRingPtr& ring,
                             std::size_t ninputs) {
  return detail::from_module_vec(detail::combine_tags(ar, quotients, basis), ring, ninputs);
}

}  // namespace

GroebnerBasis groebner_basis(const PolyRingPtr& ring, const PolyVector& F, MonomialOrder order) {
  for (const auto& f : F) check_ring(ring, f);
  detail::Arith ar(ring->base, order, ring->nvars());
  std::vector<detail::Vec> inputs;
  inputs.reserve(F.size());
  for (const auto& f : F) inputs.push_back(detail::to_vec(f, ar));

  GroebnerBasis G{ring, order, F, {}, {}, detail::buchberger(ar, inputs)};
  for (const auto& e : G.elements) {
    G.generators.push_back(detail::from_vec(e.vec, ring));
    G.transform.push_back(detail::from_module_vec(e.tag, ring, F.size()));
  }
  return G;
}

GroebnerBasis groebner_basis(const PolyVector& F, MonomialOrder order) {
  if (F.empty()) throw Error(ErrorCode::InvalidArgument, "groebner_basis: empty input needs an explicit ring");
  return groebner_basis(F.front().ring(), F, order);
}

NormalForm normal_form(const MultiPoly& h, const GroebnerBasis& G) {
  check_ring(G.ring, h);
  detail::Arith ar(G.ring->base, G.order, G.ring->nvars());
  detail::Reduction red = detail::reduce(ar, detail::to_vec(h, ar), G.elements, true);
  NormalForm nf{detail::from_vec(red.remainder, G.ring), {}};
  for (const auto& q : red.quotients) nf.cofactors.push_back(detail::from_vec(q, G.ring));
  return nf;
}

bool reduces_to_zero(const MultiPoly& h, const GroebnerBasis& G) {
  check_ring(G.ring, h);
  detail::Arith ar(G.ring->base, G.order, G.ring->nvars());
  return detail::reduce(ar, detail::to_vec(h, ar), G.elements, false).remainder.empty();
}

std::optional<PolyVector> ideal_member(const MultiPoly& h, const GroebnerBasis& G) {
  check_ring(G.ring, h);
  detail::Arith ar(G.ring->base, G.order, G.ring->nvars());
  detail::Reduction red = detail::reduce(ar, detail::to_vec(h, ar), G.elements, true);
  if (!red.remainder.empty()) return std::nullopt;
  return compose_cofactors(ar, red.quotients, G.elements, G.ring, G.input.size());
}

std::optional<PolyVector> ideal_member(const MultiPoly& h, const PolyVector& F, MonomialOrder order) {
  return ideal_member(h, groebner_basis(h.ring(), F, order));
}

bool audit_groebner_basis(const GroebnerBasis& G) {
  detail::Arith ar(G.ring->base, G.order, G.ring->nvars());
  for (const auto& p : detail::critical_polynomials(ar, G.elements))
    if (!detail::reduce(ar, p, G.elements, false).remainder.empty()) return false;
  for (std::size_t i = 0; i < G.generators.size(); ++i) {
    MultiPoly combo(G.ring);
    for (std::size_t j = 0; j < G.input.size(); ++j) combo += G.transform[i][j] * G.input[j];
    if (combo != G.generators[i]) return false;
  }
  for (const auto& f : G.input)
    if (!reduces_to_zero(f, G)) return false;
  return true;
}

std::vector<SyzygyVector> syzygies(const PolyRingPtr& ring, const PolyVector& F, MonomialOrder order) {
  for (const auto& f : F) check_ring(ring, f);
  const std::size_t s = F.size();
  detail::Arith ar(ring->base, order, ring->nvars());
  std::vector<detail::Vec> inputs;
  for (const auto& f : F) inputs.push_back(detail::to_vec(f, ar));
  std::vector<detail::Element> basis = detail::buchberger(ar, inputs);

  std::vector<detail::Vec> relations;
  for (const auto& syz : detail::schreyer_syzygies(ar, basis))
    relations.push_back(detail::combine_tags(ar, syz, basis));
  const Exponents one_exp(ring->nvars(), 0);
  for (std::size_t j = 0; j < s; ++j) {
    detail::Reduction red = detail::reduce(ar, inputs[j], basis, true);
    if (!red.remainder.empty()) throw Error(ErrorCode::Internal, "input does not reduce to zero modulo its own basis");
    detail::Vec ej{detail::Term{static_cast<std::uint32_t>(j), one_exp, ring->base.one()}};
    if (ring->base.is_zero_ring()) ej.clear();
    relations.push_back(ar.sub(ej, detail::combine_tags(ar, red.quotients, basis)));
  }

  std::vector<SyzygyVector> out;
  std::vector<detail::Vec> seen;
  for (auto& v : relations) {
    if (v.empty()) continue;
    auto un = ring->base.unit_normal(v.front().coeff);
    if (un.unit != ring->base.one()) v = ar.scale(v, un.unit);
    bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const detail::Vec& w) {
      if (w.size() != v.size()) return false;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (ar.cmp(w[i], v[i]) != 0 || w[i].coeff != v[i].coeff) return false;
      return true;
    });
    if (duplicate) continue;
    seen.push_back(v);
    out.push_back(detail::from_module_vec(v, ring, s));
  }
  return out;
}

ModuleBasis::ModuleBasis(const PolyRingPtr& ring, std::size_t rank, const std::vector<SyzygyVector>& gens,
                         MonomialOrder order)
    : ring_(ring), rank_(rank), ngens_(gens.size()), arith_(ring->base, order, ring->nvars()) {
  std::vector<detail::Vec> inputs;
  for (const auto& g : gens) {
    if (g.size() != rank) throw Error(ErrorCode::InvalidArgument, "module generator has the wrong length");
    for (const auto& p : g) check_ring(ring, p);
    inputs.push_back(detail::to_module_vec(g, arith_));
  }
  elements_ = detail::buchberger(arith_, inputs);
}

std::optional<PolyVector> ModuleBasis::member(const SyzygyVector& v) const {
  if (v.size() != rank_) throw Error(ErrorCode::InvalidArgument, "vector has the wrong length");
  for (const auto& p : v) check_ring(ring_, p);
  detail::Reduction red = detail::reduce(arith_, detail::to_module_vec(v, arith_), elements_, true);
  if (!red.remainder.empty()) return std::nullopt;
  return compose_cofactors(arith_, red.quotients, elements_, ring_, ngens_);
}

std::optional<PolyVector> module_member(const SyzygyVector& v, const std::vector<SyzygyVector>& gens,
                                        MonomialOrder order) {
  if (v.empty()) throw Error(ErrorCode::InvalidArgument, "module_member: empty vector");
  return ModuleBasis(v.front().ring(), v.size(), gens, order).member(v);
}

GroebnerBasis ideal_quotient(const PolyRingPtr& ring, const PolyVector& I, const MultiPoly& a,
                             MonomialOrder order) {
  PolyVector F{a};
  for (const auto& g : I)
    if (!g.is_zero()) F.push_back(g);
  PolyVector firsts;
  for (const auto& syz : syzygies(ring, F, order))
    if (!syz[0].is_zero()) firsts.push_back(syz[0]);
  return groebner_basis(ring, firsts, order);
}

}  // namespace secant
