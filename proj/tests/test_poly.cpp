#include <doctest.h>

#include "support.hpp"

using namespace secant;
using testsupport::P;

TEST_CASE("content examples") {
  auto Z = make_poly_ring(BaseRing::integers(), {"x", "y"});
  CHECK(content(P(Z, "4*x + 6*y")).generator == 2);
  CHECK(content(MultiPoly(Z)).generator == 0);
  auto Q = make_poly_ring(BaseRing::rationals(), {"x"});
  CHECK(content(P(Q, "x^2 + 1")).generator == 1);
}

TEST_CASE("is_monic_in examples") {
  auto Q = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  CHECK(is_monic_in(P(Q, "x^2 + 3*x*y + 1"), 0));
  CHECK_FALSE(is_monic_in(P(Q, "y*x^3 + x"), 0));
  auto Z = make_poly_ring(BaseRing::integers(), {"x"});
  CHECK_FALSE(is_monic_in(P(Z, "2*x^2 + 1"), 0));
  CHECK_FALSE(is_monic_in(MultiPoly(Z), 0));
}

TEST_CASE("reduce_coefficients examples") {
  auto Z = make_poly_ring(BaseRing::integers(), {"x"});
  auto zz = BaseRing::integers();
  auto r = reduce_coefficients(P(Z, "4*x + 6"), ideal_normalize({Coeff(4)}, zz));
  CHECK(r.base() == BaseRing::integers_mod(4));
  CHECK(r.to_string() == "2");
  auto f = P(Z, "3*x^2 - 5*x + 7");
  CHECK(reduce_coefficients(f, ideal_normalize({}, zz)) == f);
  auto r2 = reduce_coefficients(P(Z, "3*x^2 + 5*x + 7"), ideal_normalize({Coeff(2)}, zz));
  CHECK(r2.to_string() == "x^2 + x + 1");
}

TEST_CASE("extend_ring") {
  auto R = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  auto U = extend_ring(R, 2, "U");
  CHECK(U->vars == std::vector<std::string>{"x", "y", "U1", "U2"});
  CHECK(same_ring(extend_ring(R, 0, "U"), R));
  auto V = extend_ring(U, 2, "V");
  CHECK(V->vars.size() == 6);
  CHECK_THROWS_AS(extend_ring(U, 1, "U"), Error);
  auto f = P(R, "x*y + 1");
  CHECK(f.embed(V).to_string() == "x*y + 1");
}

TEST_CASE("parser") {
  auto R = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  CHECK(P(R, "(x+y)^2").to_string() == "x^2 + 2*x*y + y^2");
  CHECK(P(R, "2x y - 3").to_string() == "2*x*y - 3");
  CHECK(P(R, "x/2").to_string() == "1/2*x");
  CHECK(P(R, "-x + 4/2").to_string() == "-x + 2");
  CHECK_THROWS_AS(P(R, "x + z"), Error);
  CHECK_THROWS_AS(P(R, "x +"), Error);
  CHECK_THROWS_AS(P(R, "x / y"), Error);
  auto Z = make_poly_ring(BaseRing::integers(), {"x"});
  CHECK_THROWS_AS(P(Z, "x/2"), Error);
  auto G = make_poly_ring(BaseRing::prime_field(5), {"x"});
  CHECK(P(G, "x/2").to_string() == "3*x");
  CHECK(P(G, "6*x - 1").to_string() == "x + 4");
}

TEST_CASE("ring axioms over GF(2), degree <= 2 in 2 variables") {
  auto R = make_poly_ring(BaseRing::prime_field(2), {"x", "y"});
  auto mons = testsupport::monomials_up_to(2, 2);  // 6 monomials, 64 polynomials
  std::vector<MultiPoly> all;
  for (unsigned mask = 0; mask < (1u << mons.size()); ++mask) {
    MultiPoly f(R);
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (mask & (1u << i)) f.add_term(mons[i], Coeff(1));
    all.push_back(f);
  }
  // Sample triples deterministically to keep the run short.
  std::size_t n = all.size(), checked = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto &a = all[i], &b = all[j], &c = all[(i * 7 + j * 13) % n];
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + (-a)).is_zero());
      ++checked;
    }
  CHECK(checked == 64 * 64);
}

TEST_CASE("content of products and reduction homomorphism") {
  std::mt19937_64 rng(7);
  auto Z = make_poly_ring(BaseRing::integers(), {"x", "y"});
  auto zz = BaseRing::integers();
  for (int t = 0; t < 50; ++t) {
    auto f = testsupport::random_poly(rng, Z, 2, 3, 9);
    auto g = testsupport::random_poly(rng, Z, 2, 3, 9);
    Coeff cf = content(f).generator, cg = content(g).generator;
    Coeff cfg = content(f * g).generator;
    CHECK(zz.divides(cfg, cf * cg));
    for (long m : {2, 4, 6, 9}) {
      auto c = ideal_normalize({Coeff(m)}, zz);
      CHECK(reduce_coefficients(f + g, c) == reduce_coefficients(f, c) + reduce_coefficients(g, c));
      CHECK(reduce_coefficients(f * g, c) == reduce_coefficients(f, c) * reduce_coefficients(g, c));
    }
  }
  for (auto base : {BaseRing::rationals(), BaseRing::prime_field(5)}) {
    auto R = make_poly_ring(base, {"x", "y"});
    for (int t = 0; t < 20; ++t) {
      auto f = testsupport::random_poly(rng, R, 2, 3, 4);
      auto g = testsupport::random_poly(rng, R, 2, 3, 4);
      if (f.is_zero() || g.is_zero()) continue;
      CHECK(content(f * g).generator == 1);
    }
  }
}

TEST_CASE("monic polynomials are regular, bounded linear algebra over GF(3)") {
  std::mt19937_64 rng(11);
  auto R = make_poly_ring(BaseRing::prime_field(3), {"x", "y"});
  for (int t = 0; t < 20; ++t) {
    auto f = P(R, "x^2") + testsupport::random_poly(rng, R, 1, 3, 1);
    if (!is_monic_in(f, 0)) continue;
    // f*g = 0 with deg g <= 2 has only the trivial solution
    auto rel = testsupport::bounded_relations({f}, 2, 3);
    CHECK(rel.empty());
  }
}
