// Acceptance suite: one PASS/FAIL line per criterion, with pinned time limits.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "finite/finite.hpp"
#include "flatness/flatness.hpp"
#include "grade/grade.hpp"
#include "io/json_io.hpp"
#include "mutate.hpp"
#include "problem/runner.hpp"
#include "regseq/regseq.hpp"
#include "support.hpp"

using namespace secant;
using testsupport::P;
using testsupport::Ps;

namespace {

struct Check {
  bool ok = true;
  std::string first;
  std::map<std::string, int> tally;

  void operator()(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first = what;
    }
  }
};

BaseIdeal ideal(const PolyRingPtr& R, long g) { return ideal_normalize({R->base.from_integer(g)}, R->base); }

bool all_in(const PolyVector& v, const BaseIdeal& a) {
  for (const auto& p : v)
    for (const auto& [e, c] : p.terms())
      if (!ideal_contains(a, c, p.base())) return false;
  return true;
}

std::uint32_t deg(const MultiPoly& p) { return p.total_degree().value_or(0); }

// ---------------------------------------------------------------- criterion 1

void finite_sequence(Check& check) {
  auto R = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  auto F = Ps(R, {"x^2 - 1", "y^2 - x"});
  auto seq = regular_sequence_from_finiteness(R, F);
  check(seq.sequence == Ps(R, {"y^4 - 1", "x^2 - 1"}), "sequence is " + seq.sequence[0].to_string() + ", " +
                                                            seq.sequence[1].to_string());
  check(P(R, "y^4 - 1") == P(R, "(y^2 + x)*(y^2 - x)") + P(R, "x^2 - 1"), "identity");
  const AnnihilatorWitness& ay = seq.annihilators.at(0);
  check(ay.polynomial == P(R, "y^4 - 1"), "annihilator of y");
  check(ay.cofactors == Ps(R, {"1", "y^2 + x"}), "cofactors of y^4 - 1 are (1, y^2 + x)");
  check(dot(ay.cofactors, F) == ay.polynomial, "cofactor identity");
  const AnnihilatorWitness& ax = seq.annihilators.at(1);
  check(ax.polynomial == P(R, "x^2 - 1") && dot(ax.cofactors, F) == ax.polynomial, "annihilator of x");
  check(is_regular_sequence(R, seq.sequence).regular, "is_regular_sequence");
  check(is_regular_sequence(R, seq.sequence, {}, MonomialOrder::grevlex(), false).regular,
        "is_regular_sequence without structural steps");
  check(check_regular_sequence_certificate(seq.certificate), "certificate");
}

// ---------------------------------------------------------------- criterion 2

// f_i monic in x_i of degree 1..3, other terms in x_1..x_i of lower x_i degree,
// total degree <= 3.
PolyVector monic_triangular(std::mt19937_64& rng, const PolyRingPtr& R) {
  const std::size_t n = R->nvars();
  std::uniform_int_distribution<int> lead_deg(1, 3), terms(0, 4), cd(-4, 4);
  auto mons = testsupport::monomials_up_to(n, 3);
  PolyVector F;
  for (std::size_t i = 0; i < n; ++i) {
    Exponents lead(n, 0);
    lead[i] = static_cast<std::uint32_t>(lead_deg(rng));
    MultiPoly f = MultiPoly::monomial(R, lead, R->base.one());
    std::vector<Exponents> lower;
    for (const auto& m : mons) {
      bool ok = m[i] < lead[i];
      for (std::size_t j = i + 1; j < n; ++j) ok = ok && m[j] == 0;
      if (ok) lower.push_back(m);
    }
    std::uniform_int_distribution<std::size_t> pick(0, lower.size() - 1);
    for (int t = terms(rng); t > 0; --t) f.add_term(lower[pick(rng)], R->base.from_integer(cd(rng)));
    F.push_back(f);
  }
  return F;
}

void triangular_usc(Check& check) {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> names{"x", "y", "z"};
  std::uniform_int_distribution<std::size_t> len(1, 3);
  for (auto base : {BaseRing::rationals(), BaseRing::prime_field(5)}) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = len(rng);
      auto R = make_poly_ring(base, std::vector<std::string>(names.begin(), names.begin() + n));
      auto F = monic_triangular(rng, R);
      std::string where = base.name() + " instance " + std::to_string(t);
      check(is_regular_sequence(R, F).regular, where + ": not regular");
      auto tg = is_trivial_syzygy_generated(R, F);
      check(tg.generated, where + ": not trivial-syzygy generated");
    }
  }
}

// ---------------------------------------------------------------- criterion 3

void rewrite(Check& check) {
  auto R = make_poly_ring(BaseRing::integers(), {"x", "y"});
  {
    auto F = Ps(R, {"x", "y"});
    auto w = rewrite_with_ideal_coefficients(P(R, "2*y^2"), Ps(R, {"y", "-x + 2*y"}), F, ideal(R, 2));
    check(w.v == Ps(R, {"0", "2*y"}), "v = (0, 2y)");
    check(dot(w.v, F) == P(R, "2*y^2"), "Sum v f = h");
    check(all_in(w.v, ideal(R, 2)), "v even");
    check(check_rewrite_witness(w), "worked example witness");
  }
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const long d = 2 + t % 3;
    const BaseIdeal a = ideal(R, d);
    PolyVector F;
    const int s = 2 + t % 2;
    if (t % 4 == 3) {
      // A common factor makes the reduced sequence fail to be trivial-syzygy
      // generated modulo d as soon as it is a zero divisor there.
      auto g = testsupport::random_poly(rng, R, 1, 2, 3) + P(R, "x");
      for (int i = 0; i < s; ++i) F.push_back(g * testsupport::random_poly(rng, R, 1, 2, 3));
    } else {
      for (int i = 0; i < s; ++i) F.push_back(testsupport::random_poly(rng, R, 2, 3, 4));
    }
    PolyVector u(F.size(), MultiPoly(R));
    for (const auto& sz : syzygies(R, F)) {
      auto c = testsupport::random_poly(rng, R, 1, 2, 3);
      for (std::size_t i = 0; i < F.size(); ++i) u[i] += c * sz[i];
    }
    for (auto& p : u) p += testsupport::random_poly(rng, R, 2, 2, 3).scaled(R->base.from_integer(d));
    const MultiPoly h = dot(u, F);
    const std::string where = "random instance " + std::to_string(t);
    try {
      auto w = rewrite_with_ideal_coefficients(h, u, F, a);
      check(dot(w.v, F) == h, where + ": Sum v f != h");
      check(all_in(w.v, a), where + ": v not in a");
      check(check_rewrite_witness(w), where + ": witness rejected");
    } catch (const Error& e) {
      check(false, where + ": " + e.what());
    }
  }
}

// ---------------------------------------------------------------- criterion 4

void certify_free(Check& check) {
  auto R = make_poly_ring(BaseRing::integers(), {"x"});
  auto c = certify_de_smit_lenstra(R, Ps(R, {"x^2 - 3*x"}), {ideal(R, 2), ideal(R, 3)});
  check(c.structure.kind == ModuleStructure::Kind::Free, "not free");
  check(c.structure.rank == std::optional<std::size_t>(2), "rank != 2");
  check(verify_certificate(c).ok, "verify");
}

void certify_field(Check& check) {
  auto R = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  auto c = certify_de_smit_lenstra(R, Ps(R, {"x^2 - 1", "y^2 - x"}), {});
  check(c.structure.kind == ModuleStructure::Kind::VectorSpace, "not a vector space");
  check(c.structure.rank == std::optional<std::size_t>(4), "dimension != 4");
  check(verify_certificate(c).ok, "verify");
}

void certify_infinite(Check& check) {
  auto R = make_poly_ring(BaseRing::integers(), {"x"});
  try {
    certify_de_smit_lenstra(R, Ps(R, {"2*x - 2"}), {});
    check(false, "certified");
  } catch (const Error& e) {
    check(e.code() == ErrorCode::NotDetectedFinite, std::string("wrong error ") + error_code_name(e.code()));
  }
}

// ---------------------------------------------------------------- criterion 5

void grade_examples(Check& check) {
  auto Q = make_poly_ring(BaseRing::rationals(), {"x", "y"});
  auto xy = grade_at_least(Q, Ps(Q, {"x", "y"}), 2);
  check(xy.holds, "Gr<x, y> >= 2");
  check(check_grade_certificate(xy.certificate), "grade certificate");
  check(!grade_at_least(Q, Ps(Q, {"x"}), 2).holds, "Gr<x> >= 2 claimed");

  auto Q3 = make_poly_ring(BaseRing::rationals(), {"x", "y", "z"});
  auto seq = Ps(Q3, {"y*(1 - x)", "z*(1 - x)", "x"});
  auto sec = is_completely_secant(Q3, seq);
  check(sec.secant, "Kaplansky sequence not completely secant");
  auto r = is_regular_sequence(Q3, seq);
  check(!r.regular, "Kaplansky sequence regular");
  check(r.failure_index == std::optional<std::size_t>(2), "failure index != 2");
  check(r.witness && *r.witness == P(Q3, "y"), "witness != y");
}

// ---------------------------------------------------------------- criterion 6

void independence(Check& check) {
  for (auto base : {BaseRing::rationals(), BaseRing::prime_field(2)}) {
    auto R = make_poly_ring(base, {"x", "y"});
    for (auto gens : {Ps(R, {"x"}), Ps(R, {"x", "y"}), Ps(R, {"x", "y*(1 - x)"})}) {
      for (std::size_t k = 1; k <= 2; ++k) {
        const bool lin = grade_at_least(R, gens, k, KroneckerShape::Linear).holds;
        const bool quad = grade_at_least(R, gens, k, KroneckerShape::Quadratic).holds;
        check(lin == quad, base.name() + " " + gens.back().to_string() + " k=" + std::to_string(k));
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 7

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void soundness(Check& check) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(SECANT_PROBLEMS)) {
    const std::string name = e.path().filename().string();
    if (name.rfind("cert_", 0) == 0 && e.path().extension() == ".txt") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  check(files.size() >= 5, "corpus too small");

  struct Sample {
    std::string where;
    FlatnessCertificate cert;
    testsupport::Mutation mutation;
  };
  std::vector<Sample> pool;
  for (const auto& f : files) {
    const std::string name = f.filename().string();
    auto res = run_command("certify", parse_problem(slurp(f)), {});
    check(res.status == kPositive, name + ": certify status " + std::to_string(res.status));
    if (res.status != kPositive) continue;
    const std::string text = res.output.dump(2);
    check(run_verify(text).status == kPositive, name + ": verify rejected the certificate");
    auto cert = certificate_from_json(Json::parse(text));
    for (auto& m : testsupport::certificate_mutations(cert)) pool.push_back({name + " " + m.where, cert, m});
  }
  check(pool.size() >= 50, "fewer than 50 mutations available");
  std::mt19937_64 rng(50);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(pool.size(), 50));
  for (auto& s : pool) {
    auto bad = s.cert;
    s.mutation.apply(bad);
    const int status = run_verify(certificate_to_json(bad).dump()).status;
    check(status != kPositive, "mutation accepted: " + s.where);
  }
}

// ---------------------------------------------------------------- criterion 8

// Coordinates over GF(2) in a fixed monomial list.
struct Coords {
  std::vector<Exponents> mons;
  std::map<Exponents, std::size_t> index;

  explicit Coords(std::vector<Exponents> m) : mons(std::move(m)) {
    for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
  }
  // Terms outside the list are dropped.
  std::vector<std::uint64_t> of(const MultiPoly& p) const {
    std::vector<std::uint64_t> v(mons.size(), 0);
    for (const auto& [e, c] : p.terms()) {
      auto it = index.find(e);
      if (it != index.end()) v[it->second] = testsupport::coeff_mod(c, 2);
    }
    return v;
  }
};

std::size_t rank_of(const std::vector<std::vector<std::uint64_t>>& cols, std::size_t rows) {
  if (cols.empty()) return 0;
  testsupport::ModMatrix A(2, std::max<std::size_t>(rows, 1), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) A.a[i][j] = cols[j][i];
  return cols.size() - testsupport::nullspace(A).size();
}

bool in_span(const std::vector<std::vector<std::uint64_t>>& cols, const std::vector<std::uint64_t>& v) {
  auto ext = cols;
  ext.push_back(v);
  return rank_of(ext, v.size()) == rank_of(cols, v.size());
}

MultiPoly random_gf2(std::mt19937_64& rng, const PolyRingPtr& R, const std::vector<Exponents>& mons) {
  MultiPoly f(R);
  std::bernoulli_distribution coin(0.4);
  for (const auto& m : mons)
    if (coin(rng)) f.add_term(m, Coeff(1));
  return f;
}

std::vector<Exponents> of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Exponents> out;
  for (const auto& m : testsupport::monomials_up_to(n, d)) {
    std::uint32_t s = 0;
    for (auto e : m) s += e;
    if (s == d) out.push_back(m);
  }
  return out;
}

std::uint32_t mdeg(const Exponents& m) {
  std::uint32_t s = 0;
  for (auto e : m) s += e;
  return s;
}

// Kind A: I contains the cube of every variable, so k[X]/I is a quotient of
// the finite algebra spanned by monomials with exponents < 3 and membership
// and regularity are finite linear algebra.
void truncated_instance(Check& check, std::mt19937_64& rng, const PolyRingPtr& R, const std::string& where) {
  const std::size_t n = R->nvars();
  std::vector<Exponents> box;
  for (const auto& m : testsupport::monomials_up_to(n, 3 * n))
    if (std::all_of(m.begin(), m.end(), [](auto e) { return e < 3; })) box.push_back(m);
  Coords A(box);
  auto low = testsupport::monomials_up_to(n, 3);

  PolyVector I;
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 3;
    I.push_back(MultiPoly::monomial(R, e, Coeff(1)));
  }
  std::uniform_int_distribution<int> count(0, 2);
  for (int g = count(rng); g > 0; --g) {
    auto f = random_gf2(rng, R, low);
    if (!f.is_zero()) I.push_back(f);
  }
  std::vector<std::vector<std::uint64_t>> J;
  for (const auto& g : I)
    for (const auto& m : box) J.push_back(A.of(g.times_monomial(m, Coeff(1))));
  auto member = [&](const MultiPoly& h) { return in_span(J, A.of(h)); };

  // ideal_member
  MultiPoly h = random_gf2(rng, R, low);
  if (rng() % 2) {
    h = MultiPoly(R);
    for (const auto& g : I) h += random_gf2(rng, R, testsupport::monomials_up_to(n, 1)) * g;
  }
  auto cof = ideal_member(h, I);
  check(cof.has_value() == member(h), where + ": ideal_member verdict");
  if (cof) check(dot(*cof, I) == h, where + ": ideal_member cofactors");
  ++check.tally[cof ? "members" : "non-members"];

  // is_regular_element: a is regular on the finite algebra k[X]/I iff
  // multiplication by a is onto, iff a*box + J spans everything.
  MultiPoly a = random_gf2(rng, R, low);
  auto cols = J;
  for (const auto& m : box) cols.push_back(A.of(a.times_monomial(m, Coeff(1))));
  const bool oracle = rank_of(cols, box.size()) == box.size();
  auto r = is_regular_element(R, a, I);
  ++check.tally[r.regular ? "regular" : "zero divisors"];
  check(r.regular == oracle, where + ": is_regular_element verdict for " + a.to_string());
  if (!r.regular) {
    check(r.witness && !member(*r.witness) && member(*r.witness * a), where + ": zero-divisor witness");
  }

  // syzygies: exact relations, and every relation of degree <= 2 is generated.
  auto S = syzygies(R, I);
  check.tally["syzygy generators"] += static_cast<int>(S.size());
  for (const auto& s : S) check(dot(s, I).is_zero(), where + ": syzygy is not a relation");
  ModuleBasis M(R, I.size(), S);
  for (const auto& u : testsupport::bounded_relations(I, 2, 2))
    check(M.member(u).has_value(), where + ": low-degree relation not generated");
}

// Kind B: homogeneous data, where every question splits by degree.
void homogeneous_instance(Check& check, std::mt19937_64& rng, const PolyRingPtr& R, const std::string& where) {
  const std::size_t n = R->nvars();
  constexpr std::uint32_t D = 7;
  std::uniform_int_distribution<std::uint32_t> dd(1, 3);
  std::uniform_int_distribution<int> count(1, 3);

  auto homogeneous = [&](std::uint32_t d) {
    MultiPoly f(R);
    while (f.is_zero()) f = random_gf2(rng, R, of_degree(n, d));
    return f;
  };
  PolyVector F;
  for (int g = count(rng); g > 0; --g) F.push_back(homogeneous(dd(rng)));

  // Degree-e part of I as columns over the degree-e monomials.
  auto ideal_part = [&](std::uint32_t e, const Coords& C) {
    std::vector<std::vector<std::uint64_t>> cols;
    for (const auto& f : F)
      if (deg(f) <= e)
        for (const auto& m : of_degree(n, e - deg(f))) cols.push_back(C.of(f.times_monomial(m, Coeff(1))));
    return cols;
  };
  auto member = [&](const MultiPoly& h) {
    for (std::uint32_t e = 0; e <= deg(h); ++e) {
      Coords C(of_degree(n, e));
      auto v = C.of(h);
      if (std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; }) && !in_span(ideal_part(e, C), v))
        return false;
    }
    return true;
  };

  // ideal_member
  const std::uint32_t he = dd(rng);
  MultiPoly h = homogeneous(he);
  if (rng() % 2) {
    h = MultiPoly(R);
    for (const auto& f : F)
      if (deg(f) <= he) h += random_gf2(rng, R, of_degree(n, he - deg(f))) * f;
  }
  auto cof = ideal_member(h, F);
  check(cof.has_value() == member(h), where + ": ideal_member verdict");
  if (cof) check(dot(*cof, F) == h, where + ": ideal_member cofactors");
  ++check.tally[cof ? "members" : "non-members"];

  // is_regular_element: degree-wise kernel of multiplication by a on k[X]/I.
  const MultiPoly a = homogeneous(dd(rng));
  auto r = is_regular_element(R, a, F);
  auto kernel_in = [&](std::uint32_t e) {
    Coords C(of_degree(n, e + deg(a)));
    auto Ie = ideal_part(e + deg(a), C);
    auto cols = Ie;
    for (const auto& m : of_degree(n, e)) cols.push_back(C.of(a.times_monomial(m, Coeff(1))));
    const std::size_t image = rank_of(cols, C.mons.size()) - rank_of(Ie, C.mons.size());
    const std::size_t kernel = of_degree(n, e).size() - image;
    Coords Ce(of_degree(n, e));
    return kernel > rank_of(ideal_part(e, Ce), Ce.mons.size());
  };
  std::uint32_t top = D;
  if (r.witness) top = std::max(top, deg(*r.witness));
  bool oracle = true;
  for (std::uint32_t e = 0; e <= top && oracle; ++e) oracle = !kernel_in(e);
  check(r.regular == oracle, where + ": is_regular_element verdict for " + a.to_string());
  ++check.tally[r.regular ? "regular" : "zero divisors"];
  if (!r.regular)
    check(r.witness && !member(*r.witness) && member(*r.witness * a), where + ": zero-divisor witness");

  // syzygies: in each degree e <= D the generated relations span exactly the
  // brute-force relation space.
  auto S = syzygies(R, F);
  check.tally["syzygy generators"] += static_cast<int>(S.size());
  std::vector<std::uint32_t> shift;
  for (const auto& s : S) {
    check(dot(s, F).is_zero(), where + ": syzygy is not a relation");
    std::optional<std::uint32_t> sh;
    bool homog = true;
    for (std::size_t i = 0; i < F.size(); ++i)
      for (const auto& [m, c] : s[i].terms()) {
        const std::uint32_t t = mdeg(m) + deg(F[i]);
        if (sh && *sh != t) homog = false;
        sh = t;
      }
    check(homog && sh, where + ": syzygy not homogeneous");
    shift.push_back(sh.value_or(0));
  }
  for (std::uint32_t e = 0; e <= D; ++e) {
    // Coordinates (i, m) with deg m = e - deg f_i.
    std::vector<std::pair<std::size_t, Exponents>> slots;
    for (std::size_t i = 0; i < F.size(); ++i)
      if (deg(F[i]) <= e)
        for (const auto& m : of_degree(n, e - deg(F[i]))) slots.push_back({i, m});
    if (slots.empty()) continue;
    Coords C(of_degree(n, e));
    std::vector<std::vector<std::uint64_t>> prods;
    for (const auto& [i, m] : slots) prods.push_back(C.of(F[i].times_monomial(m, Coeff(1))));
    const std::size_t relations = slots.size() - rank_of(prods, C.mons.size());

    std::vector<std::vector<std::uint64_t>> gens;
    for (std::size_t j = 0; j < S.size(); ++j) {
      if (shift[j] > e) continue;
      for (const auto& m : of_degree(n, e - shift[j])) {
        std::vector<std::uint64_t> v(slots.size(), 0);
        for (std::size_t k = 0; k < slots.size(); ++k)
          v[k] = testsupport::coeff_mod(S[j][slots[k].first].times_monomial(m, Coeff(1)).coefficient(slots[k].second), 2);
        gens.push_back(std::move(v));
      }
    }
    check(rank_of(gens, slots.size()) == relations, where + ": relation space in degree " + std::to_string(e));
  }
}

void oracle_equivalence(Check& check) {
  std::mt19937_64 rng(500);
  auto R1 = make_poly_ring(BaseRing::prime_field(2), {"x"});
  auto R2 = make_poly_ring(BaseRing::prime_field(2), {"x", "y"});
  for (int t = 0; t < 500; ++t) {
    const auto& R = (t % 5 == 0) ? R1 : R2;
    const std::string where = "instance " + std::to_string(t);
    if (t % 2 == 0)
      truncated_instance(check, rng, R, where);
    else
      homogeneous_instance(check, rng, R, where);
  }
}

// ---------------------------------------------------------------- driver

struct Criterion {
  int id;
  const char* title;
  double limit;  // seconds
  std::vector<std::pair<const char*, std::function<void(Check&)>>> parts;
  bool per_part = false;  // the limit applies to each part
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "regular sequence from finiteness: (y^4 - 1, x^2 - 1)", 1.0, {{"", finite_sequence}}},
      {2, "200 monic-triangular sequences are trivial-syzygy generated", 60.0, {{"", triangular_usc}}},
      {3, "rewrite with ideal coefficients", 30.0, {{"", rewrite}}},
      {4,
       "end-to-end certification",
       5.0,
       {{"free rank 2", certify_free}, {"dimension 4", certify_field}, {"not finite", certify_infinite}},
       true},
      {5, "grade and completely secant examples", 30.0, {{"", grade_examples}}},
      {6, "grade verdict independent of the Kronecker form", 60.0, {{"", independence}}},
      {7, "certificate soundness on the corpus and 50 mutations", 30.0, {{"", soundness}}},
      {8, "GF(2) oracle equivalence on 500 instances", 120.0, {{"", oracle_equivalence}}},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    double total = 0, worst = 0;
    for (const auto& [name, fn] : c.parts) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        fn(check);
      } catch (const std::exception& e) {
        check(false, std::string(name) + " threw: " + e.what());
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      total += secs;
      worst = std::max(worst, secs);
      if (c.per_part && secs >= c.limit) check(false, std::string(name) + " exceeded the time limit");
    }
    if (!c.per_part && total >= c.limit) check(false, "exceeded the time limit");
    std::printf("criterion %d: %s  %s  (%.3f s, limit %.0f s%s)%s%s\n", c.id, check.ok ? "PASS" : "FAIL", c.title,
                c.per_part ? worst : total, c.limit, c.per_part ? " each" : "", check.ok ? "" : "  -- ",
                check.ok ? "" : check.first.c_str());
    if (!check.tally.empty()) {
      std::printf("    ");
      for (const auto& [k, v] : check.tally) std::printf(" %s=%d", k.c_str(), v);
      std::printf("\n");
    }
    std::fflush(stdout);
    if (!check.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
