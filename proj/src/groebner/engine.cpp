#include "groebner/engine.hpp"

#include <algorithm>
#include <deque>

namespace secant::detail {

bool divides_monomial(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents monomial_quotient(const Exponents& b, const Exponents& a) {
  Exponents q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

namespace {

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

std::uint64_t degree_of(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

Term shifted(const Term& t, const Coeff& c, const Exponents* shift, const BaseRing& ring) {
  Term r{t.comp, t.exp, ring.mul(t.coeff, c)};
  if (shift)
    for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += (*shift)[i];
  return r;
}

}  // namespace

Vec Arith::axpy(const Vec& a, std::size_t from, const Coeff& c, const Exponents* shift, const Vec& b) const {
  Vec out;
  out.reserve(a.size() - std::min(from, a.size()) + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term tb = shifted(b[j], c, shift, ring_);
    if (i == a.size()) {
      ++j;
      if (!ring_.is_zero(tb.coeff)) out.push_back(std::move(tb));
      continue;
    }
    int s = cmp(a[i], tb);
    if (s > 0) {
      out.push_back(a[i++]);
    } else if (s < 0) {
      ++j;
      if (!ring_.is_zero(tb.coeff)) out.push_back(std::move(tb));
    } else {
      Coeff sum = ring_.add(a[i].coeff, tb.coeff);
      if (!ring_.is_zero(sum)) out.push_back(Term{a[i].comp, a[i].exp, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

Vec Arith::scale(const Vec& a, const Coeff& c, const Exponents* shift) const {
  Vec out;
  out.reserve(a.size());
  for (const auto& t : a) {
    Term s = shifted(t, c, shift, ring_);
    if (!ring_.is_zero(s.coeff)) out.push_back(std::move(s));
  }
  return out;
}

Vec Arith::mul_scalar(const Vec& q, const Vec& v) const {
  Vec acc;
  for (const auto& t : q) acc = axpy(acc, 0, t.coeff, &t.exp, v);
  return acc;
}

Vec Arith::normalize_terms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return cmp(a, b) > 0; });
  Vec out;
  for (auto& t : terms) {
    if (!out.empty() && cmp(out.back(), t) == 0) {
      out.back().coeff = ring_.add(out.back().coeff, t.coeff);
      if (ring_.is_zero(out.back().coeff)) out.pop_back();
    } else if (!ring_.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Reduction reduce(const Arith& ar, const Vec& h, const std::vector<Element>& basis, bool track_quotients,
                 std::size_t skip) {
  const BaseRing& ring = ar.ring();
  Reduction out;
  std::vector<std::vector<Term>> acc(track_quotients ? basis.size() : 0);
  Vec cur = h;
  std::size_t pos = 0;
  for (; pos < skip && pos < cur.size(); ++pos) out.remainder.push_back(cur[pos]);

  auto record = [&](std::size_t k, const Coeff& q, const Exponents& shift) {
    if (track_quotients) acc[k].push_back(Term{0, shift, q});
  };

  while (pos < cur.size()) {
    const std::uint32_t comp = cur[pos].comp;
    const Exponents exp = cur[pos].exp;
    const Coeff coeff = cur[pos].coeff;
    std::ptrdiff_t strong = -1, weak = -1;
    mpz_class weak_size;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Term& lt = basis[k].vec.front();
      if (lt.comp != comp || !divides_monomial(lt.exp, exp)) continue;
      if (ring.divides(lt.coeff, coeff)) {
        strong = static_cast<std::ptrdiff_t>(k);
        break;
      }
      mpz_class size = ring.ideal_size(lt.coeff);
      if (weak < 0 || size < weak_size) {
        weak = static_cast<std::ptrdiff_t>(k);
        weak_size = size;
      }
    }
    if (strong >= 0) {
      const Element& g = basis[static_cast<std::size_t>(strong)];
      Coeff q = ring.exact_div(coeff, g.vec.front().coeff);
      Exponents shift = monomial_quotient(exp, g.vec.front().exp);
      cur = ar.axpy(cur, pos, ring.neg(q), &shift, g.vec);
      pos = 0;
      record(static_cast<std::size_t>(strong), q, shift);
      continue;
    }
    if (weak >= 0) {
      const Element& g = basis[static_cast<std::size_t>(weak)];
      auto dr = ring.divrem(coeff, g.vec.front().coeff);
      if (!ring.is_zero(dr.q)) {
        Exponents shift = monomial_quotient(exp, g.vec.front().exp);
        cur = ar.axpy(cur, pos, ring.neg(dr.q), &shift, g.vec);
        pos = 0;
        record(static_cast<std::size_t>(weak), dr.q, shift);
      }
    }
    out.remainder.push_back(cur[pos]);
    ++pos;
  }
  if (track_quotients) {
    out.quotients.reserve(acc.size());
    for (auto& terms : acc) out.quotients.push_back(ar.normalize_terms(std::move(terms)));
  }
  return out;
}

Vec combine_tags(const Arith& ar, const std::vector<Vec>& quotients, const std::vector<Element>& basis) {
  Vec acc;
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    if (quotients[k].empty()) continue;
    acc = ar.add(acc, ar.mul_scalar(quotients[k], basis[k].tag));
  }
  return acc;
}

namespace {

struct PairData {
  Exponents shift_i, shift_j;
  Coeff ci, cj;  // S = ci*X^shift_i*g_i - cj*X^shift_j*g_j
  Coeff si, sj;  // G = si*X^shift_i*g_i + sj*X^shift_j*g_j
  bool needs_gpoly = false;
};

PairData pair_data(const Arith& ar, const Element& gi, const Element& gj) {
  const BaseRing& ring = ar.ring();
  const Term& a = gi.vec.front();
  const Term& b = gj.vec.front();
  PairData d;
  Exponents l = monomial_lcm(a.exp, b.exp);
  d.shift_i = monomial_quotient(l, a.exp);
  d.shift_j = monomial_quotient(l, b.exp);
  auto g = ring.gcdext(a.coeff, b.coeff);
  d.ci = ring.exact_div(b.coeff, g.g);
  d.cj = ring.exact_div(a.coeff, g.g);
  d.si = g.s;
  d.sj = g.t;
  d.needs_gpoly = !ring.is_field() && !ring.divides(a.coeff, b.coeff) && !ring.divides(b.coeff, a.coeff);
  return d;
}

Element s_element(const Arith& ar, const Element& gi, const Element& gj, const PairData& d) {
  const BaseRing& ring = ar.ring();
  Element e;
  e.vec = ar.axpy(ar.scale(gi.vec, d.ci, &d.shift_i), 0, ring.neg(d.cj), &d.shift_j, gj.vec);
  if (!gi.tag.empty() || !gj.tag.empty())
    e.tag = ar.axpy(ar.scale(gi.tag, d.ci, &d.shift_i), 0, ring.neg(d.cj), &d.shift_j, gj.tag);
  return e;
}

Element g_element(const Arith& ar, const Element& gi, const Element& gj, const PairData& d) {
  Element e;
  e.vec = ar.axpy(ar.scale(gi.vec, d.si, &d.shift_i), 0, d.sj, &d.shift_j, gj.vec);
  if (!gi.tag.empty() || !gj.tag.empty())
    e.tag = ar.axpy(ar.scale(gi.tag, d.si, &d.shift_i), 0, d.sj, &d.shift_j, gj.tag);
  return e;
}

bool lt_divides(const BaseRing& ring, const Term& a, const Term& b) {
  return a.comp == b.comp && divides_monomial(a.exp, b.exp) && ring.divides(a.coeff, b.coeff);
}

bool has_zero_divisors(const BaseRing& ring) {
  return ring.kind() == BaseRing::Kind::IntegersMod && !ring.is_field();
}

}  // namespace

std::vector<Element> buchberger(const Arith& ar, const std::vector<Vec>& inputs, const BuchbergerOptions& opts) {
  const BaseRing& ring = ar.ring();
  const bool field = ring.is_field();
  bool rank1 = true;
  for (const auto& v : inputs)
    for (const auto& t : v)
      if (t.comp != 0) rank1 = false;
  const bool use_product = opts.product_criterion && field && rank1;
  const bool annihilators = has_zero_divisors(ring);

  struct Pair {
    std::size_t i, j;
    std::uint64_t degree, seq;
  };
  std::vector<Element> basis;
  std::vector<Pair> pairs;
  std::deque<Element> todo;
  std::uint64_t seq = 0;

  for (std::size_t j = 0; j < inputs.size(); ++j) {
    Element e;
    e.vec = inputs[j];
    if (opts.track_tags && !ring.is_zero_ring())
      e.tag = Vec{Term{static_cast<std::uint32_t>(j), Exponents(ar.nvars(), 0), ring.one()}};
    todo.push_back(std::move(e));
  }

  auto insert = [&](Element e) {
    Reduction red = reduce(ar, e.vec, basis, opts.track_tags);
    if (red.remainder.empty()) return;
    Element ne;
    ne.vec = std::move(red.remainder);
    if (opts.track_tags) ne.tag = ar.sub(e.tag, combine_tags(ar, red.quotients, basis));
    auto un = ring.unit_normal(ne.vec.front().coeff);
    if (un.unit != ring.one()) {
      ne.vec = ar.scale(ne.vec, un.unit);
      ne.tag = ar.scale(ne.tag, un.unit);
    }
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].vec.front().comp != ne.vec.front().comp) continue;
      pairs.push_back(Pair{i, k, degree_of(monomial_lcm(basis[i].vec.front().exp, ne.vec.front().exp)), seq++});
    }
    if (annihilators) {
      Coeff ann = ring.annihilator(ne.vec.front().coeff);
      if (!ring.is_zero(ann)) todo.push_back(Element{ar.scale(ne.vec, ann), ar.scale(ne.tag, ann)});
    }
    basis.push_back(std::move(ne));
  };

  while (!todo.empty() || !pairs.empty()) {
    if (!todo.empty()) {
      Element e = std::move(todo.front());
      todo.pop_front();
      insert(std::move(e));
      continue;
    }
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.seq < b.seq;
    });
    Pair p = *best;
    pairs.erase(best);
    const Element& gi = basis[p.i];
    const Element& gj = basis[p.j];
    if (use_product && coprime(gi.vec.front().exp, gj.vec.front().exp)) continue;
    PairData d = pair_data(ar, gi, gj);
    todo.push_back(s_element(ar, gi, gj, d));
    if (d.needs_gpoly) todo.push_back(g_element(ar, gi, gj, d));
  }

  // Minimize: drop elements whose leading term is strongly divisible by another.
  std::vector<Element> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Term& a = basis[j].vec.front();
      const Term& b = basis[i].vec.front();
      if (!lt_divides(ring, a, b)) continue;
      redundant = !lt_divides(ring, b, a) || j < i;
    }
    if (!redundant) kept.push_back(basis[i]);
  }

  // Tail-reduce against the other kept elements.
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Element> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    Reduction red = reduce(ar, kept[i].vec, others, opts.track_tags, 1);
    if (opts.track_tags) kept[i].tag = ar.sub(kept[i].tag, combine_tags(ar, red.quotients, others));
    kept[i].vec = std::move(red.remainder);
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Element& a, const Element& b) { return ar.cmp(a.vec.front(), b.vec.front()) < 0; });
  return kept;
}

std::vector<std::vector<Vec>> schreyer_syzygies(const Arith& ar, const std::vector<Element>& basis) {
  const BaseRing& ring = ar.ring();
  const std::size_t n = basis.size();
  bool rank1 = true;
  for (const auto& e : basis)
    for (const auto& t : e.vec)
      if (t.comp != 0) rank1 = false;
  const bool field = ring.is_field();
  const Exponents one_exp(ar.nvars(), 0);

  std::vector<std::vector<Vec>> out;
  auto lifted = [&](const Vec& poly, const std::vector<std::pair<std::size_t, Vec>>& lead) {
    Reduction red = reduce(ar, poly, basis, true);
    if (!red.remainder.empty())
      throw Error(ErrorCode::Internal, "pair polynomial does not reduce to zero: basis is not a Groebner basis");
    std::vector<Vec> syz(n);
    for (std::size_t k = 0; k < n; ++k) syz[k] = ar.scale(red.quotients[k], ring.neg(ring.one()));
    for (const auto& [k, term] : lead) syz[k] = ar.add(syz[k], term);
    bool nonzero = std::any_of(syz.begin(), syz.end(), [](const Vec& v) { return !v.empty(); });
    if (nonzero) out.push_back(std::move(syz));
  };

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Term& a = basis[i].vec.front();
      const Term& b = basis[j].vec.front();
      if (a.comp != b.comp) continue;
      if (field && rank1 && coprime(a.exp, b.exp)) {
        std::vector<Vec> syz(n);
        syz[i] = basis[j].vec;
        syz[j] = ar.scale(basis[i].vec, ring.neg(ring.one()));
        out.push_back(std::move(syz));
        continue;
      }
      PairData d = pair_data(ar, basis[i], basis[j]);
      Element s = s_element(ar, Element{basis[i].vec, {}}, Element{basis[j].vec, {}}, d);
      lifted(s.vec, {{i, Vec{Term{0, d.shift_i, d.ci}}}, {j, Vec{Term{0, d.shift_j, ring.neg(d.cj)}}}});
    }
  }
  if (has_zero_divisors(ring)) {
    for (std::size_t i = 0; i < n; ++i) {
      Coeff ann = ring.annihilator(basis[i].vec.front().coeff);
      if (ring.is_zero(ann)) continue;
      lifted(ar.scale(basis[i].vec, ann), {{i, Vec{Term{0, one_exp, ann}}}});
    }
  }
  return out;
}

std::vector<Vec> critical_polynomials(const Arith& ar, const std::vector<Element>& basis) {
  const BaseRing& ring = ar.ring();
  std::vector<Vec> out;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].vec.front().comp != basis[j].vec.front().comp) continue;
      Element gi{basis[i].vec, {}}, gj{basis[j].vec, {}};
      PairData d = pair_data(ar, gi, gj);
      out.push_back(s_element(ar, gi, gj, d).vec);
      if (d.needs_gpoly) out.push_back(g_element(ar, gi, gj, d).vec);
    }
  }
  if (has_zero_divisors(ring)) {
    for (const auto& g : basis) {
      Coeff ann = ring.annihilator(g.vec.front().coeff);
      if (!ring.is_zero(ann)) out.push_back(ar.scale(g.vec, ann));
    }
  }
  return out;
}

}  // namespace secant::detail
