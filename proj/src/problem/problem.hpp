#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groebner/order.hpp"
#include "poly/poly.hpp"

namespace secant {

struct NamedPoly {
  std::string name;
  MultiPoly poly;
};

struct NamedIdeal {
  std::string name;
  std::vector<Coeff> generators;
  BaseIdeal ideal;
};

// Line-oriented problem file:
//   ring = ZZ | QQ | GF(p) | ZZ/m
//   vars = x, y
//   order = grevlex | lex
//   max-degree = 4
//   grade = 2
//   ideal a = 2, 6
//   f1 = x^2 - 3*x
//   seq = f1, f2          (also ambient, target, cofactors)
// '#' starts a comment.
struct ProblemSpec {
  PolyRingPtr ring;
  std::optional<MonomialOrder> order;
  std::optional<std::uint32_t> max_degree;
  std::optional<std::uint32_t> grade;
  std::vector<NamedPoly> polys;
  std::vector<NamedIdeal> ideals;
  std::vector<std::pair<std::string, std::vector<std::string>>> roles;

  const MultiPoly* find(std::string_view name) const;
  // Names listed under a role; nullopt when the role is absent.
  std::optional<std::vector<std::string>> role(std::string_view key) const;
  PolyVector resolve(const std::vector<std::string>& names) const;
  // The `seq` role, or every polynomial not named by another role.
  PolyVector sequence() const;
};

// Errors carry "line L, column C" in the message.
ProblemSpec parse_problem(std::string_view text);
std::string print_problem(const ProblemSpec& spec);
bool operator==(const ProblemSpec& a, const ProblemSpec& b);

}  // namespace secant
