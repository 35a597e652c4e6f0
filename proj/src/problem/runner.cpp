#include "problem/runner.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "finite/finite.hpp"
#include "grade/grade.hpp"

namespace secant {

namespace {

struct Context {
  const ProblemSpec& spec;
  const RunOptions& options;
  const PolyRingPtr& ring;
  MonomialOrder order;
  RunResult& result;
  std::ostringstream explain;

  Json header(const std::string& kind) const {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = kind;
    j["ring"] = ring_to_json(ring);
    j["order"] = order.name();
    return j;
  }

  std::vector<BaseIdeal> ideals() const {
    std::vector<BaseIdeal> out;
    const BaseRing& k = ring->base;
    if (!options.ideals.empty()) {
      for (const auto& s : options.ideals) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0)
          throw Error(ErrorCode::InvalidArgument, "--ideal expects an element of " + k.name() + ", got '" + s + "'");
        q.canonicalize();
        out.push_back(ideal_normalize({k.from_rational(q)}, k));
      }
    } else {
      for (const auto& id : spec.ideals) out.push_back(id.ideal);
    }
    return out;
  }

  PolyVector named(const char* role) const {
    auto names = spec.role(role);
    if (!names) throw Error(ErrorCode::InvalidArgument, std::string("the problem has no '") + role + "' line");
    return spec.resolve(*names);
  }

  void finish(Json j, bool positive, std::string summary) {
    j["outcome"] = positive ? "positive" : "negative";
    result.status = positive ? kPositive : kNegative;
    result.output = std::move(j);
    result.summary = std::move(summary);
  }
};

std::string join(const PolyVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s;
}

Json vectors_to_json(const std::vector<PolyVector>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(polys_to_json(v));
  return j;
}

Json optional_poly(const std::optional<MultiPoly>& p) { return p ? Json(p->to_string()) : Json(nullptr); }

Json optional_index(const std::optional<std::size_t>& i) { return i ? Json(*i) : Json(nullptr); }

void cmd_check_regular(Context& c) {
  const PolyVector seq = c.spec.sequence();
  const PolyVector ambient = c.spec.role("ambient") ? c.named("ambient") : PolyVector{};
  auto r = is_regular_sequence(c.ring, seq, ambient, c.order);
  Json j = c.header("check-regular");
  j["sequence"] = polys_to_json(seq);
  j["ambient"] = polys_to_json(ambient);
  j["regular"] = r.regular;
  j["failure_index"] = optional_index(r.failure_index);
  j["witness"] = optional_poly(r.witness);
  j["certificate"] = regular_certificate_to_json(r.certificate);
  c.explain << "sequence: (" << join(seq) << ")\n";
  if (!ambient.empty()) c.explain << "modulo: <" << join(ambient) << ">\n";
  for (std::size_t i = 0; i < r.certificate.steps.size(); ++i) {
    const auto& st = r.certificate.steps[i];
    c.explain << "  step " << i + 1 << ": " << st.element.to_string() << " -> "
              << (st.regular ? "regular" : "zero divisor");
    if (st.kind == RegularityStep::Kind::Structural) c.explain << " (monic in " << c.ring->vars[*st.variable] << ")";
    if (st.witness) c.explain << ", witness " << st.witness->to_string();
    c.explain << "\n";
  }
  std::string summary = r.regular ? "regular sequence"
                                  : "not regular: fails at index " + std::to_string(*r.failure_index) +
                                        (r.witness ? ", witness " + r.witness->to_string() : "");
  c.finish(std::move(j), r.regular, summary);
}

void cmd_syzygies(Context& c) {
  const PolyVector seq = c.spec.sequence();
  auto rel = syzygies(c.ring, seq, c.order);
  Json j = c.header("syzygies");
  j["sequence"] = polys_to_json(seq);
  j["relations"] = vectors_to_json(rel);
  c.explain << rel.size() << " generators of the relation module of (" << join(seq) << ")\n";
  for (const auto& r : rel) c.explain << "  (" << join(r) << ")\n";
  c.finish(std::move(j), true, std::to_string(rel.size()) + " relation generators");
}

void cmd_koszul(Context& c) {
  const PolyVector seq = c.spec.sequence();
  auto rel = koszul_relations(c.ring, seq);
  Json j = c.header("koszul");
  j["sequence"] = polys_to_json(seq);
  j["relations"] = vectors_to_json(rel);
  for (const auto& r : rel) c.explain << "  (" << join(r) << ")\n";
  c.finish(std::move(j), true, std::to_string(rel.size()) + " trivial relations");
}

void cmd_usc(Context& c) {
  const PolyVector seq = c.spec.sequence();
  auto r = is_trivial_syzygy_generated(c.ring, seq, c.order);
  Json j = c.header("usc");
  j["sequence"] = polys_to_json(seq);
  j["generated"] = r.generated;
  j["relations"] = vectors_to_json(r.relations);
  j["expressions"] = vectors_to_json(r.expressions);
  j["obstruction"] = r.obstruction ? polys_to_json(*r.obstruction) : Json(nullptr);
  c.explain << "relation module: " << r.relations.size() << " generators\n";
  if (r.obstruction) c.explain << "not generated by trivial relations: (" << join(*r.obstruction) << ")\n";
  c.finish(std::move(j), r.generated,
           r.generated ? "relations generated by the trivial relations"
                       : "obstruction (" + join(*r.obstruction) + ")");
}

void cmd_grade(Context& c) {
  const PolyVector seq = c.spec.sequence();
  const std::size_t k = c.options.grade ? *c.options.grade : c.spec.grade ? *c.spec.grade : seq.size();
  auto r = grade_at_least(c.ring, seq, k);
  Json j = c.header("grade");
  j["ideal"] = polys_to_json(seq);
  j["bound"] = k;
  j["holds"] = r.holds;
  j["failure_index"] = optional_index(r.failure_index);
  j["witness"] = optional_poly(r.witness);
  Json kr;
  kr["ring"] = ring_to_json(r.certificate.sequence.ring);
  kr["order"] = grade_order(r.certificate.sequence).name();
  kr["forms"] = polys_to_json(r.certificate.sequence.forms);
  j["kronecker"] = std::move(kr);
  j["evidence"] = regular_certificate_to_json(r.certificate.evidence);
  c.explain << "Kronecker forms:\n";
  for (const auto& f : r.certificate.sequence.forms) c.explain << "  " << f.to_string() << "\n";
  c.explain << "Gr(<" << join(seq) << ">) >= " << k << ": " << (r.holds ? "yes" : "no") << "\n";
  c.finish(std::move(j), r.holds, std::string("grade >= ") + std::to_string(k) + (r.holds ? ": holds" : ": fails"));
}

void cmd_secant(Context& c) {
  const PolyVector seq = c.spec.sequence();
  auto r = is_completely_secant(c.ring, seq);
  Json j = c.header("secant");
  j["sequence"] = polys_to_json(seq);
  j["secant"] = r.secant;
  j["method"] = r.method == SecantResult::Method::RegularSubsequence ? "regular-subsequence" : "kronecker";
  j["regular"] = polys_to_json(r.regular);
  j["cofactors"] = vectors_to_json(r.cofactors);
  j["regular_evidence"] = r.regular_evidence ? regular_certificate_to_json(*r.regular_evidence) : Json(nullptr);
  if (r.grade) {
    Json g;
    g["holds"] = r.grade->holds;
    g["bound"] = r.grade->certificate.bound;
    g["kronecker_ring"] = ring_to_json(r.grade->certificate.sequence.ring);
    g["forms"] = polys_to_json(r.grade->certificate.sequence.forms);
    g["failure_index"] = optional_index(r.grade->failure_index);
    g["witness"] = optional_poly(r.grade->witness);
    j["grade"] = std::move(g);
  } else {
    j["grade"] = nullptr;
  }
  c.explain << "method: " << j["method"].get<std::string>() << "\n";
  c.finish(std::move(j), r.secant, r.secant ? "completely secant" : "not completely secant");
}

void cmd_annihilators(Context& c) {
  const PolyVector F = c.spec.sequence();
  auto P = finiteness_basis(c.ring, F, c.order);
  auto seq = regular_sequence_from_finiteness(P);
  Json j = c.header("annihilators");
  j["relations"] = polys_to_json(F);
  j["generators"] = Json::array();
  for (std::size_t i = 0; i < P.size(); ++i) j["generators"].push_back(P.generator_poly(i).to_string());
  j["annihilators"] = Json::array();
  for (const auto& a : seq.annihilators) j["annihilators"].push_back(annihilator_to_json(a, c.ring));
  j["sequence"] = polys_to_json(seq.sequence);
  j["regular_sequence"] = regular_certificate_to_json(seq.certificate);
  c.explain << "module generators: " << P.size() << "\n";
  for (const auto& a : seq.annihilators)
    c.explain << "  " << c.ring->vars[a.variable] << ": " << a.polynomial.to_string() << " = ("
              << join(a.cofactors) << ") . F\n";
  c.finish(std::move(j), true, "regular sequence (" + join(seq.sequence) + ")");
}

void cmd_jacobian(Context& c) {
  const PolyVector F = c.spec.sequence();
  auto r = jacobian_criterion(c.ring, F, c.order);
  Json j = c.header("jacobian");
  j["relations"] = polys_to_json(F);
  j["jacobian"] = vectors_to_json(r.jacobian);
  j["determinant"] = r.determinant.to_string();
  j["reduced"] = r.reduced.to_string();
  j["unit"] = r.unit;
  j["inverse"] = optional_poly(r.inverse);
  j["diagnostic"] = r.diagnostic;
  c.explain << "det J = " << r.determinant.to_string() << "\n" << r.diagnostic << "\n";
  c.finish(std::move(j), r.unit, r.unit ? "Jacobian determinant is a unit" : "Jacobian determinant is not a unit");
}

void cmd_rewrite(Context& c) {
  const PolyVector F = c.spec.sequence();
  const PolyVector target = c.named("target");
  if (target.size() != 1) throw Error(ErrorCode::InvalidArgument, "'target' must name one polynomial");
  const PolyVector u = c.named("cofactors");
  const auto ideals = c.ideals();
  if (ideals.empty()) throw Error(ErrorCode::InvalidArgument, "rewrite needs at least one ideal (--ideal)");
  if (dot(u, F) != target[0]) throw Error(ErrorCode::NotARelation, "target != Sum cofactors_i f_i");
  Json j = c.header("rewrite");
  j["relations"] = polys_to_json(F);
  j["h"] = target[0].to_string();
  j["u"] = polys_to_json(u);
  j["witnesses"] = Json::array();
  bool all = true;
  for (const auto& a : ideals) {
    Json w;
    w["ideal"] = ideal_to_json(a);
    try {
      auto r = rewrite_with_ideal_coefficients(target[0], u, F, a, c.order);
      w["ok"] = true;
      const Json body = rewrite_to_json(r);
      for (auto it = body.begin(); it != body.end(); ++it) w[it.key()] = it.value();
      c.explain << "ideal (" << a.generator.get_str() << "): v = (" << join(r.v) << ")\n";
    } catch (const Error& e) {
      if (status_for(e.code()) != kNegative) throw;
      all = false;
      w["ok"] = false;
      w["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
      c.explain << "ideal (" << a.generator.get_str() << "): " << e.what() << "\n";
    }
    j["witnesses"].push_back(std::move(w));
  }
  c.finish(std::move(j), all, all ? "rewritten with ideal coefficients" : "rewrite failed for some ideal");
}

void cmd_inclusion(Context& c) {
  const PolyVector F = c.spec.sequence();
  const auto ideals = c.ideals();
  if (ideals.empty()) throw Error(ErrorCode::InvalidArgument, "inclusion needs at least one ideal (--ideal)");
  const std::uint32_t bound = c.options.max_degree ? *c.options.max_degree : c.spec.max_degree ? *c.spec.max_degree : 4;
  Json j = c.header("inclusion");
  j["relations"] = polys_to_json(F);
  j["degree_bound"] = bound;
  j["reports"] = Json::array();
  bool all = true;
  for (const auto& a : ideals) {
    auto rep = check_flatness_inclusion(c.ring, F, a, bound, c.order);
    all = all && rep.success;
    c.explain << "ideal (" << a.generator.get_str() << "), degree <= " << bound << ": " << rep.family_size
              << " generators, " << rep.witnesses.size() << " rewritten";
    if (rep.failure) c.explain << ", failure: " << *rep.failure;
    c.explain << "\n";
    j["reports"].push_back(inclusion_to_json(rep));
  }
  c.finish(std::move(j), all, all ? "inclusion holds up to the degree bound" : "inclusion fails");
}

void cmd_certify(Context& c) {
  const PolyVector F = c.spec.sequence();
  const auto ideals = c.ideals();
  const std::uint32_t bound = c.options.max_degree ? *c.options.max_degree : c.spec.max_degree ? *c.spec.max_degree : 4;
  auto cert = certify_de_smit_lenstra(c.ring, F, ideals, bound, c.order);
  const auto& ms = cert.structure;
  c.explain << "module generators: " << cert.generators.size() << "\n";
  for (const auto& a : cert.annihilators)
    c.explain << "  annihilator of " << c.ring->vars[a.variable] << ": " << a.polynomial.to_string() << "\n";
  for (const auto& f : ms.factors) c.explain << "  over " << f.ring.name() << ": free of rank " << f.rank << "\n";
  for (const auto& inc : cert.inclusions)
    c.explain << "  ideal (" << inc.ideal.generator.get_str() << "): " << inc.witnesses.size()
              << " rewrite witnesses\n";
  std::string summary = "flat; ";
  summary += ms.rank ? "projective of rank " + std::to_string(*ms.rank) : std::string("locally free");
  c.finish(certificate_to_json(cert), true, summary);
}

using Handler = void (*)(Context&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"check-regular", cmd_check_regular}, {"syzygies", cmd_syzygies},       {"koszul", cmd_koszul},
      {"usc", cmd_usc},                     {"grade", cmd_grade},             {"secant", cmd_secant},
      {"annihilators", cmd_annihilators},   {"jacobian", cmd_jacobian},       {"rewrite", cmd_rewrite},
      {"inclusion", cmd_inclusion},         {"certify", cmd_certify},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-regular", "syzygies", "koszul",  "usc",
                                              "grade",         "secant",   "annihilators", "jacobian",
                                              "rewrite",       "inclusion", "certify", "verify"};
  return names;
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDetectedFinite:
    case ErrorCode::NotTriviallyGenerated:
    case ErrorCode::NotARelationModA:
    case ErrorCode::NonUnitDivisor:
      return kNegative;
    case ErrorCode::Internal:
      return kInternalError;
    default:
      return kInputError;
  }
}

RunResult run_command(const std::string& command, const ProblemSpec& spec, const RunOptions& options) {
  RunResult result;
  auto it = handlers().find(command);
  if (it == handlers().end()) {
    result.status = kInputError;
    result.error = "unknown command '" + command + "'";
    return result;
  }
  MonomialOrder order = options.order ? *options.order : spec.order ? *spec.order : MonomialOrder::grevlex();
  Context ctx{spec, options, spec.ring, order, result, {}};
  try {
    it->second(ctx);
  } catch (const Error& e) {
    result.status = status_for(e.code());
    if (result.status == kNegative) {
      Json j = ctx.header(command);
      j["outcome"] = "negative";
      j["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
      result.output = std::move(j);
      result.summary = std::string(error_code_name(e.code())) + ": " + e.what();
      ctx.explain << e.what() << "\n";
    } else {
      result.output = nullptr;
      result.error = std::string(error_code_name(e.code())) + ": " + e.what();
    }
  } catch (const std::exception& e) {
    result.status = kInternalError;
    result.output = nullptr;
    result.error = std::string("internal error: ") + e.what();
  }
  result.explain = ctx.explain.str();
  return result;
}

RunResult run_verify(std::string_view certificate_json) {
  RunResult result;
  FlatnessCertificate cert;
  try {
    cert = certificate_from_json(Json::parse(certificate_json));
  } catch (const Json::exception& e) {
    result.status = kInputError;
    result.error = std::string("Syntax: ") + e.what();
    return result;
  } catch (const Error& e) {
    result.status = kInputError;
    result.error = std::string(error_code_name(e.code())) + ": " + e.what();
    return result;
  }
  try {
    auto rep = verify_certificate(cert);
    result.output = verification_to_json(rep);
    result.status = rep.ok ? kPositive : kNegative;
    result.summary = rep.ok ? "certificate verified (" + std::to_string(rep.items.size()) + " items)"
                            : "certificate rejected at " + *rep.first_failure;
    std::ostringstream ex;
    for (const auto& it : rep.items) ex << (it.ok ? "  ok   " : "  FAIL ") << it.name << (it.ok ? "" : ": " + it.detail) << "\n";
    result.explain = ex.str();
  } catch (const std::exception& e) {
    result.status = kInternalError;
    result.error = std::string("internal error: ") + e.what();
  }
  return result;
}

}  // namespace secant
