#include "io/json_io.hpp"

namespace secant {

namespace {

std::size_t var_index(const Json& j, const PolyRingPtr& ring) {
  auto idx = ring->index_of(j.get<std::string>());
  if (!idx) throw Error(ErrorCode::Syntax, "unknown variable '" + j.get<std::string>() + "'");
  return *idx;
}

Exponents monomial_from_json(const Json& j, const PolyRingPtr& ring) {
  MultiPoly p = poly_from_json(j, ring);
  if (p.size() != 1 || p.terms().begin()->second != ring->base.one())
    throw Error(ErrorCode::Syntax, "expected a monomial, got '" + j.get<std::string>() + "'");
  return p.terms().begin()->first;
}

Json monomial_to_json(const PolyRingPtr& ring, const Exponents& e) {
  return MultiPoly::monomial(ring, e, ring->base.one()).to_string();
}

const char* structure_kind(ModuleStructure::Kind k) {
  switch (k) {
    case ModuleStructure::Kind::VectorSpace: return "vector-space";
    case ModuleStructure::Kind::Free: return "free";
    case ModuleStructure::Kind::LocallyFree: return "locally-free";
    case ModuleStructure::Kind::Zero: return "zero";
  }
  return "?";
}

ModuleStructure::Kind structure_kind_from(const std::string& s) {
  if (s == "vector-space") return ModuleStructure::Kind::VectorSpace;
  if (s == "free") return ModuleStructure::Kind::Free;
  if (s == "locally-free") return ModuleStructure::Kind::LocallyFree;
  if (s == "zero") return ModuleStructure::Kind::Zero;
  throw Error(ErrorCode::Syntax, "unknown module structure '" + s + "'");
}

Json smith_to_json(const SmithForm& s) {
  Json j;
  j["diagonal"] = Json::array();
  for (const auto& d : s.diagonal) j["diagonal"].push_back(coeff_to_json(d));
  j["U"] = matrix_to_json(s.U);
  j["D"] = matrix_to_json(s.D);
  j["V"] = matrix_to_json(s.V);
  return j;
}

}  // namespace

Json ring_to_json(const PolyRingPtr& ring) {
  Json j;
  j["base"] = ring->base.name();
  j["vars"] = ring->vars;
  return j;
}

PolyRingPtr ring_from_json(const Json& j) {
  return make_poly_ring(parse_base_ring(j.at("base").get<std::string>()),
                        j.at("vars").get<std::vector<std::string>>());
}

Json coeff_to_json(const Coeff& c) { return c.get_str(); }

Coeff coeff_from_json(const Json& j, const BaseRing& R) {
  const std::string s = j.get<std::string>();
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error(ErrorCode::Syntax, "bad coefficient '" + s + "'");
  q.canonicalize();
  return R.from_rational(q);
}

Json polys_to_json(const PolyVector& v) {
  Json j = Json::array();
  for (const auto& p : v) j.push_back(p.to_string());
  return j;
}

MultiPoly poly_from_json(const Json& j, const PolyRingPtr& ring) { return parse_poly(j.get<std::string>(), ring); }

PolyVector polys_from_json(const Json& j, const PolyRingPtr& ring) {
  if (!j.is_array()) throw Error(ErrorCode::Syntax, "expected an array of polynomials");
  PolyVector out;
  for (const auto& e : j) out.push_back(poly_from_json(e, ring));
  return out;
}

Json ideal_to_json(const BaseIdeal& a) { return coeff_to_json(a.generator); }

BaseIdeal ideal_from_json(const Json& j, const BaseRing& R) { return ideal_normalize({coeff_from_json(j, R)}, R); }

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(coeff_to_json(m.at(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Matrix matrix_from_json(const Json& j, const BaseRing& R, std::size_t cols) {
  if (!j.is_array()) throw Error(ErrorCode::Syntax, "expected a matrix");
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorCode::Syntax, "matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = coeff_from_json(j[r][c], R);
  }
  return m;
}

Json annihilator_to_json(const AnnihilatorWitness& a, const PolyRingPtr& ring) {
  Json j;
  j["variable"] = ring->vars.at(a.variable);
  j["polynomial"] = a.polynomial.to_string();
  j["coefficients"] = Json::array();
  for (const auto& c : a.coefficients) j["coefficients"].push_back(coeff_to_json(c));
  j["cofactors"] = polys_to_json(a.cofactors);
  j["source"] = a.source == AnnihilatorWitness::Source::Relation ? "relation" : "charpoly";
  if (a.matrix) j["matrix"] = matrix_to_json(*a.matrix);
  return j;
}

AnnihilatorWitness annihilator_from_json(const Json& j, const PolyRingPtr& ring) {
  AnnihilatorWitness a{var_index(j.at("variable"), ring), {}, poly_from_json(j.at("polynomial"), ring),
                       polys_from_json(j.at("cofactors"), ring), AnnihilatorWitness::Source::Relation, std::nullopt};
  for (const auto& c : j.at("coefficients")) a.coefficients.push_back(coeff_from_json(c, ring->base));
  const std::string src = j.at("source").get<std::string>();
  if (src == "charpoly")
    a.source = AnnihilatorWitness::Source::Charpoly;
  else if (src != "relation")
    throw Error(ErrorCode::Syntax, "unknown annihilator source '" + src + "'");
  if (j.contains("matrix")) {
    const Json& m = j.at("matrix");
    a.matrix = matrix_from_json(m, ring->base, m.empty() ? 0 : m[0].size());
  }
  return a;
}

Json regular_certificate_to_json(const RegularSequenceCertificate& c) {
  Json j;
  j["sequence"] = polys_to_json(c.sequence);
  j["ambient"] = polys_to_json(c.ambient);
  j["steps"] = Json::array();
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& st = c.steps[i];
    Json s;
    s["index"] = i + 1;
    s["element"] = st.element.to_string();
    s["regular"] = st.regular;
    if (st.kind == RegularityStep::Kind::Structural) {
      s["kind"] = "structural";
      s["variable"] = c.ring->vars.at(*st.variable);
    } else {
      s["kind"] = "quotient";
      s["ideal_basis"] = polys_to_json(st.ideal_basis);
      s["quotient_basis"] = polys_to_json(st.quotient_basis);
    }
    s["witness"] = st.witness ? Json(st.witness->to_string()) : Json(nullptr);
    j["steps"].push_back(std::move(s));
  }
  return j;
}

RegularSequenceCertificate regular_certificate_from_json(const Json& j, const PolyRingPtr& ring) {
  RegularSequenceCertificate c;
  c.ring = ring;
  c.sequence = polys_from_json(j.at("sequence"), ring);
  c.ambient = polys_from_json(j.at("ambient"), ring);
  for (const auto& s : j.at("steps")) {
    RegularityStep st(poly_from_json(s.at("element"), ring));
    st.regular = s.at("regular").get<bool>();
    const std::string kind = s.at("kind").get<std::string>();
    if (kind == "structural") {
      st.kind = RegularityStep::Kind::Structural;
      st.variable = var_index(s.at("variable"), ring);
    } else if (kind == "quotient") {
      st.ideal_basis = polys_from_json(s.at("ideal_basis"), ring);
      st.quotient_basis = polys_from_json(s.at("quotient_basis"), ring);
    } else {
      throw Error(ErrorCode::Syntax, "unknown step kind '" + kind + "'");
    }
    if (!s.at("witness").is_null()) st.witness = poly_from_json(s.at("witness"), ring);
    c.steps.push_back(std::move(st));
  }
  return c;
}

Json rewrite_to_json(const RewriteWitness& w) {
  Json j;
  j["h"] = w.h.to_string();
  j["u"] = polys_to_json(w.u);
  j["correction"] = polys_to_json(w.correction);
  j["M"] = Json::array();
  for (const auto& row : w.lifted.entries) j["M"].push_back(polys_to_json(row));
  j["w"] = polys_to_json(w.w);
  j["v"] = polys_to_json(w.v);
  return j;
}

RewriteWitness rewrite_from_json(const Json& j, const PolyRingPtr& ring, const PolyVector& F, const BaseIdeal& a) {
  RewriteWitness w(poly_from_json(j.at("h"), ring));
  w.ideal = a;
  w.relations = F;
  w.u = polys_from_json(j.at("u"), ring);
  w.correction = polys_from_json(j.at("correction"), ring);
  const Json& M = j.at("M");
  w.lifted.size = M.size();
  for (const auto& row : M) w.lifted.entries.push_back(polys_from_json(row, ring));
  w.w = polys_from_json(j.at("w"), ring);
  w.v = polys_from_json(j.at("v"), ring);
  return w;
}

Json inclusion_to_json(const InclusionReport& r) {
  Json j;
  j["ideal"] = ideal_to_json(r.ideal);
  j["degree_bound"] = r.degree_bound;
  j["success"] = r.success;
  j["family_size"] = r.family_size;
  j["skipped_zero"] = r.skipped_zero;
  j["failure"] = r.failure ? Json(*r.failure) : Json(nullptr);
  j["failing_element"] = r.failing_element ? Json(r.failing_element->to_string()) : Json(nullptr);
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(rewrite_to_json(w));
  return j;
}

Json structure_to_json(const ModuleStructure& s) {
  Json j;
  j["kind"] = structure_kind(s.kind);
  j["generators"] = s.generators;
  j["rank"] = s.rank ? Json(*s.rank) : Json(nullptr);
  j["factors"] = Json::array();
  for (const auto& f : s.factors) {
    Json fj;
    fj["base"] = f.ring.name();
    fj["rank"] = f.rank;
    fj["relations"] = matrix_to_json(f.relations);
    fj["smith"] = smith_to_json(f.smith);
    j["factors"].push_back(std::move(fj));
  }
  return j;
}

Json certificate_to_json(const FlatnessCertificate& c) {
  const PolyRingPtr& ring = c.ring;
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "flatness-certificate";
  j["ring"] = ring_to_json(ring);
  j["order"] = c.order.name();
  j["relations"] = polys_to_json(c.relations);

  Json fin;
  fin["size"] = c.generators.size();
  fin["generators"] = Json::array();
  for (const auto& e : c.generators) fin["generators"].push_back(monomial_to_json(ring, e));
  fin["multiplication"] = Json::object();
  fin["closure_cofactors"] = Json::object();
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    fin["multiplication"][ring->vars[v]] = matrix_to_json(c.multiplication.at(v));
    Json per = Json::array();
    for (const auto& cof : c.closure_cofactors.at(v)) per.push_back(polys_to_json(cof));
    fin["closure_cofactors"][ring->vars[v]] = std::move(per);
  }
  fin["module_relations"] = matrix_to_json(c.module_relations);
  fin["relation_cofactors"] = Json::array();
  for (const auto& cof : c.relation_cofactors) fin["relation_cofactors"].push_back(polys_to_json(cof));
  j["finiteness"] = std::move(fin);

  j["annihilators"] = Json::array();
  for (const auto& a : c.annihilators) j["annihilators"].push_back(annihilator_to_json(a, ring));
  j["regular_sequence"] = regular_certificate_to_json(c.regular);

  j["quotients"] = Json::array();
  for (const auto& q : c.quotients) {
    Json qj;
    qj["ideal"] = ideal_to_json(q.ideal);
    qj["base"] = q.ring->base.name();
    qj["zero_ring"] = q.zero_ring;
    qj["relations"] = polys_to_json(q.relations);
    qj["annihilators"] = Json::array();
    for (const auto& a : q.annihilators) qj["annihilators"].push_back(annihilator_to_json(a, q.ring));
    qj["regular_sequence"] = q.zero_ring ? Json(nullptr) : regular_certificate_to_json(q.certificate);
    j["quotients"].push_back(std::move(qj));
  }

  Json cs;
  cs["holds"] = c.secant.holds;
  cs["length"] = c.secant.length;
  cs["sequence"] = polys_to_json(c.secant.sequence);
  j["completely_secant"] = std::move(cs);

  j["module_structure"] = structure_to_json(c.structure);
  j["degree_bound"] = c.degree_bound;
  j["rewrite_witnesses"] = Json::array();
  for (const auto& r : c.inclusions) j["rewrite_witnesses"].push_back(inclusion_to_json(r));
  return j;
}

FlatnessCertificate certificate_from_json(const Json& j) {
  try {
    if (j.at("schema").get<std::string>() != kSchema)
      throw Error(ErrorCode::Syntax, "unsupported schema '" + j.at("schema").get<std::string>() + "'");
    FlatnessCertificate c;
    c.ring = ring_from_json(j.at("ring"));
    const PolyRingPtr& ring = c.ring;
    const BaseRing& k = ring->base;
    c.order = parse_order(j.at("order").get<std::string>());
    c.relations = polys_from_json(j.at("relations"), ring);

    const Json& fin = j.at("finiteness");
    for (const auto& g : fin.at("generators")) c.generators.push_back(monomial_from_json(g, ring));
    const std::size_t g = c.generators.size();
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      c.multiplication.push_back(matrix_from_json(fin.at("multiplication").at(ring->vars[v]), k, g));
      std::vector<PolyVector> per;
      for (const auto& cof : fin.at("closure_cofactors").at(ring->vars[v])) per.push_back(polys_from_json(cof, ring));
      c.closure_cofactors.push_back(std::move(per));
    }
    c.module_relations = matrix_from_json(fin.at("module_relations"), k, g);
    for (const auto& cof : fin.at("relation_cofactors")) c.relation_cofactors.push_back(polys_from_json(cof, ring));

    for (const auto& a : j.at("annihilators")) c.annihilators.push_back(annihilator_from_json(a, ring));
    c.regular = regular_certificate_from_json(j.at("regular_sequence"), ring);

    for (const auto& qj : j.at("quotients")) {
      QuotientWitness q;
      q.ideal = ideal_from_json(qj.at("ideal"), k);
      q.ring = with_base(ring, parse_base_ring(qj.at("base").get<std::string>()));
      q.zero_ring = qj.at("zero_ring").get<bool>();
      q.relations = polys_from_json(qj.at("relations"), q.ring);
      for (const auto& a : qj.at("annihilators")) q.annihilators.push_back(annihilator_from_json(a, q.ring));
      if (!qj.at("regular_sequence").is_null())
        q.certificate = regular_certificate_from_json(qj.at("regular_sequence"), q.ring);
      c.quotients.push_back(std::move(q));
    }

    const Json& cs = j.at("completely_secant");
    c.secant.holds = cs.at("holds").get<bool>();
    c.secant.length = cs.at("length").get<std::size_t>();
    c.secant.sequence = polys_from_json(cs.at("sequence"), ring);

    const Json& ms = j.at("module_structure");
    c.structure.kind = structure_kind_from(ms.at("kind").get<std::string>());
    c.structure.generators = ms.at("generators").get<std::size_t>();
    if (!ms.at("rank").is_null()) c.structure.rank = ms.at("rank").get<std::size_t>();
    for (const auto& fj : ms.at("factors")) {
      LocalFreeFactor f{parse_base_ring(fj.at("base").get<std::string>()), {}, {}, fj.at("rank").get<std::size_t>()};
      f.relations = matrix_from_json(fj.at("relations"), f.ring, g);
      const std::size_t r = f.relations.rows();
      const Json& sj = fj.at("smith");
      f.smith.U = matrix_from_json(sj.at("U"), f.ring, r);
      f.smith.D = matrix_from_json(sj.at("D"), f.ring, g);
      f.smith.V = matrix_from_json(sj.at("V"), f.ring, g);
      for (const auto& d : sj.at("diagonal")) f.smith.diagonal.push_back(coeff_from_json(d, f.ring));
      c.structure.factors.push_back(std::move(f));
    }

    c.degree_bound = j.at("degree_bound").get<std::uint32_t>();
    for (const auto& rj : j.at("rewrite_witnesses")) {
      InclusionReport r;
      r.ideal = ideal_from_json(rj.at("ideal"), k);
      r.degree_bound = rj.at("degree_bound").get<std::uint32_t>();
      r.success = rj.at("success").get<bool>();
      r.family_size = rj.at("family_size").get<std::size_t>();
      r.skipped_zero = rj.at("skipped_zero").get<std::size_t>();
      if (!rj.at("failure").is_null()) r.failure = rj.at("failure").get<std::string>();
      if (!rj.at("failing_element").is_null()) r.failing_element = poly_from_json(rj.at("failing_element"), ring);
      for (const auto& wj : rj.at("witnesses"))
        r.witnesses.push_back(rewrite_from_json(wj, ring, c.relations, r.ideal));
      c.inclusions.push_back(std::move(r));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Syntax, std::string("malformed certificate: ") + e.what());
  }
}

Json verification_to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "verification";
  j["ok"] = r.ok;
  j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  j["items"] = Json::array();
  for (const auto& it : r.items) {
    Json i;
    i["name"] = it.name;
    i["ok"] = it.ok;
    if (!it.ok) i["detail"] = it.detail;
    j["items"].push_back(std::move(i));
  }
  return j;
}

}  // namespace secant
