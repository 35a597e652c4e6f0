#include <doctest.h>

#include "regseq/regseq.hpp"
#include "support.hpp"

using namespace secant;
using testsupport::P;
using testsupport::Ps;

TEST_CASE("is_regular_element examples") {
  auto Q = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  CHECK(is_regular_element(Q, P(Q, "x"), {}).regular);

  auto Z4 = make_poly_ring(BaseRing::integers_mod(4), {"x"});
  auto r = is_regular_element(Z4, P(Z4, "2"), {});
  CHECK_FALSE(r.regular);
  REQUIRE(r.witness);
  CHECK(*r.witness == P(Z4, "2"));

  auto rxy = is_regular_element(Q, P(Q, "x"), Ps(Q, {"x*y"}));
  CHECK_FALSE(rxy.regular);
  REQUIRE(rxy.witness);
  CHECK(*rxy.witness == P(Q, "y"));
}

TEST_CASE("is_regular_sequence examples") {
  auto Q = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  auto ok = is_regular_sequence(Q, Ps(Q, {"x", "y"}));
  CHECK(ok.regular);
  CHECK(ok.certificate.steps.size() == 2);
  CHECK(check_regular_sequence_certificate(ok.certificate));

  auto noStruct = is_regular_sequence(Q, Ps(Q, {"x", "y"}), {}, MonomialOrder::grevlex(), false);
  CHECK(noStruct.regular);
  CHECK(noStruct.certificate.steps[1].kind == RegularityStep::Kind::Quotient);
  CHECK(check_regular_sequence_certificate(noStruct.certificate));

  auto bad = is_regular_sequence(Q, Ps(Q, {"x*y", "x"}));
  CHECK_FALSE(bad.regular);
  REQUIRE(bad.failure_index);
  CHECK(*bad.failure_index == 2);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == P(Q, "y"));

  auto Q1 = make_poly_ring(BaseRing::rationals(), {"x"});
  auto unit = is_regular_sequence(Q1, Ps(Q1, {"x", "x - 1"}));
  CHECK(unit.regular);
  CHECK(check_regular_sequence_certificate(unit.certificate));
}

TEST_CASE("tampered certificates are rejected") {
  auto Q = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  auto ok = is_regular_sequence(Q, Ps(Q, {"x", "y^2 + x"}));
  REQUIRE(ok.regular);
  auto cert = ok.certificate;
  cert.steps[1].variable = 0;
  CHECK_FALSE(check_regular_sequence_certificate(cert));
  auto bad = is_regular_sequence(Q, Ps(Q, {"x*y", "x"}), {}, MonomialOrder::grevlex(), false);
  auto c2 = bad.certificate;
  c2.steps.back().regular = true;
  c2.steps.back().quotient_basis = {P(Q, "x*y")};
  CHECK_FALSE(check_regular_sequence_certificate(c2));
}

TEST_CASE("koszul_relations") {
  auto Q = make_poly_ring(BaseRing::rationals(), {"a", "b", "c"});
  auto K = koszul_relations(Q, Ps(Q, {"a", "b"}));
  REQUIRE(K.size() == 1);
  CHECK(K[0] == Ps(Q, {"b", "-a"}));
  CHECK(koszul_relations(Q, Ps(Q, {"a"})).empty());
  CHECK(koszul_relations(Q, Ps(Q, {"a", "b", "c"})).size() == 3);

  std::mt19937_64 rng(31);
  for (auto base : {BaseRing::integers(), BaseRing::integers_mod(6), BaseRing::rationals()}) {
    auto R = make_poly_ring(base, {"x", "y"});
    for (int t = 0; t < 20; ++t) {
      PolyVector F;
      for (int i = 0; i < 4; ++i) F.push_back(testsupport::random_poly(rng, R, 3, 4, 7));
      for (const auto& v : koszul_relations(R, F)) CHECK(testsupport::relation_value(v, F).is_zero());
    }
  }
}

TEST_CASE("is_trivial_syzygy_generated examples") {
  auto Q = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  auto r = is_trivial_syzygy_generated(Q, Ps(Q, {"x", "y"}));
  CHECK(r.generated);
  auto K = koszul_relations(Q, Ps(Q, {"x", "y"}));
  for (std::size_t i = 0; i < r.relations.size(); ++i) {
    SyzygyVector sum(2, MultiPoly(Q));
    for (std::size_t k = 0; k < K.size(); ++k)
      for (std::size_t j = 0; j < 2; ++j) sum[j] += r.expressions[i][k] * K[k][j];
    CHECK(sum == r.relations[i]);
  }

  auto Q1 = make_poly_ring(BaseRing::rationals(), {"x"});
  auto xx = is_trivial_syzygy_generated(Q1, Ps(Q1, {"x", "x"}));
  CHECK_FALSE(xx.generated);
  REQUIRE(xx.obstruction);
  CHECK(module_member(*xx.obstruction, {Ps(Q1, {"1", "-1"})}));

  auto z = is_trivial_syzygy_generated(Q1, Ps(Q1, {"0"}));
  CHECK_FALSE(z.generated);
  REQUIRE(z.obstruction);
  CHECK(*z.obstruction == Ps(Q1, {"1"}));
}

TEST_CASE("express_syzygy_antisymmetric examples") {
  auto Q = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  auto F = Ps(Q, {"x", "y"});
  auto N = express_syzygy_antisymmetric(Q, Ps(Q, {"y", "-x"}), F);
  CHECK(N.entries[0] == Ps(Q, {"0", "-1"}));
  CHECK(N.entries[1] == Ps(Q, {"1", "0"}));
  CHECK(row_times(F, N) == Ps(Q, {"y", "-x"}));

  auto Z = express_syzygy_antisymmetric(Q, Ps(Q, {"0", "0"}), F);
  CHECK(is_antisymmetric(Z));
  for (auto& row : Z.entries)
    for (auto& e : row) CHECK(e.is_zero());

  auto Nx = express_syzygy_antisymmetric(Q, Ps(Q, {"x*y", "-x^2"}), F);
  CHECK(Nx.entries[0] == Ps(Q, {"0", "-x"}));
  CHECK(Nx.entries[1] == Ps(Q, {"x", "0"}));

  CHECK_THROWS_AS(express_syzygy_antisymmetric(Q, Ps(Q, {"1", "0"}), F), Error);
  auto Fxx = Ps(Q, {"x", "x"});
  try {
    express_syzygy_antisymmetric(Q, Ps(Q, {"1", "-1"}), Fxx);
    FAIL("expected NotTriviallyGenerated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTriviallyGenerated);
  }
}

namespace {

// Monic triangular sequence: f_i monic in x_i of degree >= 1, involving only
// x_1..x_i. Regular by construction.
PolyVector triangular(std::mt19937_64& rng, const PolyRingPtr& R) {
  PolyVector F;
  const std::size_t n = R->nvars();
  std::uniform_int_distribution<int> deg(1, 2), cd(-3, 3), coin(0, 2);
  for (std::size_t i = 0; i < n; ++i) {
    Exponents lead(n, 0);
    lead[i] = deg(rng);
    MultiPoly f = MultiPoly::monomial(R, lead, R->base.one());
    for (int k = 0; k < 3; ++k) {
      Exponents e(n, 0);
      for (std::size_t j = 0; j <= i; ++j) e[j] = coin(rng) % 2;
      if (e[i] >= lead[i]) e[i] = lead[i] - 1;
      f.add_term(e, R->base.from_integer(cd(rng)));
    }
    F.push_back(f);
  }
  return F;
}

}  // namespace

TEST_CASE("regular sequences are trivial-syzygy generated") {
  std::mt19937_64 rng(41);
  auto Q = make_poly_ring(BaseRing::rationals(), {"x", "y", "z"});
  auto G = make_poly_ring(BaseRing::prime_field(5), {"x", "y"});
  for (int t = 0; t < 15; ++t) {
    for (const auto& R : {Q, G}) {
      auto F = triangular(rng, R);
      auto seq = is_regular_sequence(R, F);
      CHECK(seq.regular);
      auto tg = is_trivial_syzygy_generated(R, F);
      CHECK(tg.generated);
      for (const auto& u : tg.relations) {
        auto N = express_syzygy_antisymmetric(R, u, F);
        CHECK(is_antisymmetric(N));
        CHECK(row_times(F, N) == u);
      }
    }
  }
}

TEST_CASE("regularity agrees with brute force over GF(2)[x]/(x^4)") {
  // Injectivity of multiplication by a on GF(2)[x]/(x^4 + I) checked by
  // enumerating all residues of degree <= 3.
  auto R = make_poly_ring(BaseRing::prime_field(2), {"x"});
  auto trunc = P(R, "x^4");
  for (unsigned ib = 0; ib < 16; ++ib) {
    MultiPoly extra(R);
    for (unsigned k = 0; k < 4; ++k)
      if (ib & (1u << k)) extra.add_term({k}, Coeff(1));
    PolyVector I{trunc};
    if (!extra.is_zero()) I.push_back(extra);
    auto GI = groebner_basis(R, I);
    for (unsigned ab = 0; ab < 16; ++ab) {
      MultiPoly a(R);
      for (unsigned k = 0; k < 4; ++k)
        if (ab & (1u << k)) a.add_term({k}, Coeff(1));
      bool injective = true;
      for (unsigned gb = 0; gb < 16 && injective; ++gb) {
        MultiPoly g(R);
        for (unsigned k = 0; k < 4; ++k)
          if (gb & (1u << k)) g.add_term({k}, Coeff(1));
        if (reduces_to_zero(g, GI)) continue;
        if (reduces_to_zero(g * a, GI)) injective = false;
      }
      CHECK(is_regular_element(R, a, I).regular == injective);
      CHECK(is_regular_sequence(R, {a}, I, MonomialOrder::grevlex(), false).regular == injective);
    }
  }
}
