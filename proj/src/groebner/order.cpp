#include "groebner/order.hpp"

#include <numeric>

namespace secant {

namespace {

int lex_compare(const Exponents& a, const Exponents& b, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int grevlex_compare(const Exponents& a, const Exponents& b, std::size_t from, std::size_t to) {
  std::uint64_t da = std::accumulate(a.begin() + from, a.begin() + to, std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin() + from, b.begin() + to, std::uint64_t{0});
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = to; i-- > from;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind) {
    case Kind::Lex: return lex_compare(a, b, 0, a.size());
    case Kind::Grevlex: return grevlex_compare(a, b, 0, a.size());
    case Kind::Block: {
      std::size_t s = split < a.size() ? split : a.size();
      if (int c = lex_compare(a, b, s, a.size())) return c;
      return grevlex_compare(a, b, 0, s);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: return "block(" + std::to_string(split) + ")";
  }
  return "?";
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw Error(ErrorCode::InvalidArgument, "unknown monomial order '" + name + "' (expected lex or grevlex)");
}

}  // namespace secant
