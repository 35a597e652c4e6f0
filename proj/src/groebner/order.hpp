#pragma once

#include <string>

#include "poly/poly.hpp"

namespace secant {

struct MonomialOrder {
  enum class Kind { Lex, Grevlex, Block };

  Kind kind = Kind::Grevlex;
  // Block order: variables with index >= split form the fresh block; they are
  // compared lexicographically first, ties are broken by grevlex on the rest.
  std::size_t split = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder block(std::size_t split) { return {Kind::Block, split}; }

  // > 0 when a is the larger monomial.
  int compare(const Exponents& a, const Exponents& b) const;
  std::string name() const;
};

MonomialOrder parse_order(const std::string& name);

}  // namespace secant
