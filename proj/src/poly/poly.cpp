#include "poly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace secant {

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

std::string PolyRing::describe() const {
  std::string s = base.name() + "[";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
  return s + "]";
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

PolyRingPtr make_poly_ring(BaseRing base, std::vector<std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error(ErrorCode::NameCollision, "duplicate variable '" + v + "'");
  }
  return std::make_shared<const PolyRing>(PolyRing{std::move(base), std::move(vars)});
}

PolyRingPtr extend_ring(const PolyRingPtr& ring, std::size_t count, const std::string& prefix) {
  if (count == 0) return ring;
  std::vector<std::string> vars = ring->vars;
  for (std::size_t i = 1; i <= count; ++i) {
    std::string name = prefix + std::to_string(i);
    if (ring->index_of(name))
      throw Error(ErrorCode::NameCollision, "fresh variable '" + name + "' collides with an existing variable");
    vars.push_back(std::move(name));
  }
  return make_poly_ring(ring->base, std::move(vars));
}

PolyRingPtr with_base(const PolyRingPtr& ring, BaseRing base) {
  if (ring->base == base) return ring;
  return std::make_shared<const PolyRing>(PolyRing{std::move(base), ring->vars});
}

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) { return a == b || *a == *b; }

bool grevlex_greater(const Exponents& a, const Exponents& b) {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MultiPoly::MultiPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}

MultiPoly MultiPoly::constant(PolyRingPtr ring, const Coeff& c) {
  MultiPoly p(ring);
  p.add_term(Exponents(ring->nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(PolyRingPtr ring, std::size_t index) {
  Exponents e(ring->nvars(), 0);
  e.at(index) = 1;
  Coeff one = ring->base.one();
  return monomial(std::move(ring), std::move(e), one);
}

MultiPoly MultiPoly::monomial(PolyRingPtr ring, Exponents exps, const Coeff& c) {
  if (exps.size() != ring->nvars()) throw Error(ErrorCode::InvalidArgument, "exponent vector arity mismatch");
  MultiPoly p(std::move(ring));
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Coeff MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Coeff(0) : it->second;
}

Degree MultiPoly::total_degree() const {
  Degree d;
  for (const auto& [e, c] : terms_) {
    auto td = std::accumulate(e.begin(), e.end(), std::uint32_t{0});
    if (!d || td > *d) d = td;
  }
  return d;
}

Degree MultiPoly::degree_in(std::size_t var) const {
  Degree d;
  for (const auto& [e, c] : terms_)
    if (!d || e[var] > *d) d = e[var];
  return d;
}

bool MultiPoly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] != 0; });
}

void MultiPoly::add_term(const Exponents& exps, const Coeff& c) {
  const BaseRing& base = ring_->base;
  if (base.is_zero(c)) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second = base.add(it->second, c);
  if (base.is_zero(it->second)) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, base().neg(c));
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, base().neg(c));
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(ring_);
  const BaseRing& base = ring_->base;
  Exponents e(ring_->nvars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, base.mul(ca, cb));
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Coeff& c) const {
  MultiPoly r(ring_);
  for (const auto& [e, a] : terms_) r.add_term(e, base().mul(a, c));
  return r;
}

MultiPoly MultiPoly::times_monomial(const Exponents& exps, const Coeff& c) const {
  MultiPoly r(ring_);
  Exponents e(exps.size());
  for (const auto& [ea, a] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + exps[i];
    r.add_term(e, base().mul(a, c));
  }
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result = constant(ring_, base().one());
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1u) result = result * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, base().mul(c, base().from_integer(e[var])));
  }
  return r;
}

MultiPoly MultiPoly::coefficient_in(std::size_t var, std::uint32_t k) const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponents d = e;
    d[var] = 0;
    r.add_term(d, c);
  }
  return r;
}

MultiPoly MultiPoly::embed(const PolyRingPtr& larger) const {
  if (larger->nvars() < ring_->nvars() || larger->base != ring_->base)
    throw Error(ErrorCode::InvalidArgument, "cannot embed " + ring_->describe() + " into " + larger->describe());
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    if (larger->vars[i] != ring_->vars[i])
      throw Error(ErrorCode::InvalidArgument, "variable lists are not compatible");
  MultiPoly r(larger);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d.resize(larger->nvars(), 0);
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

MultiPoly MultiPoly::map_base(const PolyRingPtr& target) const {
  if (target->vars != ring_->vars) throw Error(ErrorCode::InvalidArgument, "variable lists differ");
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) r.add_term(e, target->base.from_rational(c));
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return grevlex_greater(a->first, b->first); });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const Exponents& e = t->first;
    Coeff c = t->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

MultiPoly zero_poly(const PolyRingPtr& ring) { return MultiPoly(ring); }

MultiPoly dot(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size() || a.empty())
    throw Error(ErrorCode::InvalidArgument, "dot: length mismatch or empty vectors");
  MultiPoly r(a.front().ring());
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

BaseIdeal content(const MultiPoly& f) {
  std::vector<Coeff> coeffs;
  for (const auto& [e, c] : f.terms()) coeffs.push_back(c);
  return ideal_normalize(coeffs, f.base());
}

bool is_monic_in(const MultiPoly& f, std::size_t var) {
  Degree d = f.degree_in(var);
  if (!d) return false;
  MultiPoly lead = f.coefficient_in(var, *d);
  return lead.is_constant() && !lead.is_zero() &&
         f.base().is_unit(lead.coefficient(Exponents(f.ring()->nvars(), 0)));
}

PolyRingPtr reduce_ring(const PolyRingPtr& ring, const BaseIdeal& c) {
  return with_base(ring, quotient_ring(ring->base, c));
}

MultiPoly reduce_coefficients(const MultiPoly& f, const BaseIdeal& c) {
  return f.map_base(reduce_ring(f.ring(), c));
}

// ---------------------------------------------------------------------------
// Parser. Expressions are evaluated with rational coefficients and mapped into
// the base ring at the end, so "4/2" is an integer but "1/2" is not.

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const PolyRingPtr& ring)
      : text_(text), ring_(ring), qq_(with_base(ring, BaseRing::rationals())) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p.map_base(ring_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Syntax, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  MultiPoly expr() {
    MultiPoly acc(qq_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    MultiPoly t = term();
    acc = negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        MultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division is only defined by a nonzero constant");
        }
        acc = acc.scaled(Coeff(1) / d.coefficient(Exponents(qq_->nvars(), 0)));
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return MultiPoly::constant(qq_, Coeff(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = qq_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return MultiPoly::variable(qq_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  PolyRingPtr ring_;
  PolyRingPtr qq_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const PolyRingPtr& ring) { return PolyParser(text, ring).parse(); }

}  // namespace secant
