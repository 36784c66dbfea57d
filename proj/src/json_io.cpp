#include "demazure/json_io.hpp"

#include <stdexcept>

namespace demazure {

using nlohmann::json;

namespace {

void check_schema(const json& j, const char* kind) {
  if (!j.is_object() || j.value("schema", "") != kSchema)
    throw std::invalid_argument("json: missing or wrong schema field");
  if (kind && j.value("kind", "") != kind)
    throw std::invalid_argument(std::string("json: expected kind '") + kind + "'");
}

json weight_json(const Weight& w) { return json(w.coords); }

Weight weight_from(const json& j) { return Weight{j.get<IntVec>()}; }

json coweight_json(const Coweight& c) {
  json out = json::array();
  for (const Rat& r : c.coords) out.push_back(r.str());
  return out;
}

Coweight coweight_from(const json& j) {
  Coweight c;
  for (const auto& entry : j) c.coords.push_back(Rat::parse(entry.get<std::string>()));
  return c;
}

}  // namespace

std::string rat_str(const Rat& r) { return r.str(); }

json root_datum_to_json(const RootDatum& d) {
  json roots = json::array();
  for (const Root& r : d.positive_roots()) roots.push_back(r.simple);
  return json{{"schema", kSchema},
              {"kind", "root_datum"},
              {"type", d.type().str()},
              {"rank", d.rank()},
              {"cartan_matrix", d.cartan_matrix()},
              {"positive_roots", roots}};
}

RootDatum root_datum_from_json(const json& j) {
  check_schema(j, "root_datum");
  RootDatum d = RootDatum::from_string(j.at("type").get<std::string>());
  if (j.at("cartan_matrix").get<std::vector<IntVec>>() != d.cartan_matrix())
    throw std::invalid_argument("root_datum json: cartan matrix mismatch");
  return d;
}

json character_to_json(const RootDatum& d, const Character& ch) {
  json terms = json::array();
  for (const auto& [coords, mult] : ch.terms())
    terms.push_back(json{{"weight", coords}, {"mult", mult}});
  return json{{"schema", kSchema},
              {"kind", "character"},
              {"type", d.type().str()},
              {"terms", terms}};
}

Character character_from_json(const json& j) {
  check_schema(j, "character");
  Character ch;
  for (const auto& term : j.at("terms"))
    ch.add(weight_from(term.at("weight")), term.at("mult").get<Int>());
  return ch;
}

json polytope_to_json(const DemazurePolytope& p, const Character* joined) {
  json vertices = json::array();
  for (const Weight& v : p.vertex_candidates()) vertices.push_back(weight_json(v));
  json ineqs = json::array();
  for (const auto& ineq : p.inequalities())
    ineqs.push_back(json{{"v_word", ineq.v.word()},
                         {"i", ineq.i},
                         {"rhs_num", ineq.rhs.num()},
                         {"rhs_den", ineq.rhs.den()}});
  json out{{"schema", kSchema},
           {"kind", "polytope"},
           {"type", p.datum().type().str()},
           {"lambda", weight_json(p.lambda())},
           {"word", p.weyl_elt().word()},
           {"vertices", vertices},
           {"inequalities", ineqs}};
  if (joined) {
    json pts = json::array();
    for (const Weight& mu : p.lattice_points())
      pts.push_back(json{{"weight", mu.coords}, {"mult", joined->multiplicity(mu)}});
    out["lattice_points"] = pts;
  }
  return out;
}

DemazurePolytope polytope_from_json(const json& j) {
  check_schema(j, "polytope");
  static std::map<std::string, RootDatum> data_cache;
  const std::string type = j.at("type").get<std::string>();
  auto it = data_cache.find(type);
  if (it == data_cache.end())
    it = data_cache.emplace(type, RootDatum::from_string(type)).first;
  const RootDatum& d = it->second;
  const Weight lambda = weight_from(j.at("lambda"));
  const WeylElt w = WeylElt::from_word(d, j.at("word").get<std::vector<int>>());
  DemazurePolytope p = DemazurePolytope::build(d, lambda, w);
  if (polytope_to_json(p).at("vertices") != j.at("vertices"))
    throw std::invalid_argument("polytope json: vertex mismatch");
  return p;
}

json reduction_to_json(const RootDatum& d, const ReductionData& rd) {
  return json{{"schema", kSchema},
              {"kind", "reduction_data"},
              {"type", d.type().str()},
              {"lambda", weight_json(rd.lambda)},
              {"w_word", rd.w.word()},
              {"v_word", rd.v.word()},
              {"eta", coweight_json(rd.eta)},
              {"q_word", rd.q.word()},
              {"w_L_word", rd.w_L.word()},
              {"lambda_L", weight_json(rd.lambda_L)},
              {"levi_simples", rd.levi_simples},
              {"u_L_word", rd.u_L.word()},
              {"lambda_std", weight_json(rd.lambda_std)}};
}

json report_to_json(const VerificationReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back(json{{"weight", row.mu.coords},
                        {"m_w", row.m_w},
                        {"m_q", row.m_q},
                        {"m_L", row.m_L}});
  return json{{"schema", kSchema},
              {"kind", "verification_report"},
              {"type", report.type.str()},
              {"lambda", report.lambda.coords},
              {"w_word", report.w_word},
              {"v_word", report.v_word},
              {"q_word", report.q_word},
              {"eta", coweight_json(Coweight{report.eta.coords})},
              {"rows", rows},
              {"flags", report.flags()},
              {"part1_flags", report.part1_flags},
              {"part2_flags", report.part2_flags},
              {"seconds", report.seconds}};
}

json plotdata_to_json(const RootDatum& d, std::span<const Weight> points,
                      const Character* joined) {
  json rows = json::array();
  for (const RatVec& row : d.ambient_simple_roots()) {
    json r = json::array();
    for (const Rat& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  json pts = json::array();
  for (const Weight& mu : points) {
    json coords = json::array(), exact = json::array();
    for (const Rat& x : d.ambient_coords(mu)) {
      coords.push_back(x.to_double());
      exact.push_back(x.str());
    }
    json pt{{"weight", mu.coords}, {"coords", coords}, {"coords_exact", exact}};
    if (joined) pt["mult"] = joined->multiplicity(mu);
    pts.push_back(pt);
  }
  return json{{"schema", kSchema},
              {"kind", "plotdata"},
              {"type", d.type().str()},
              {"embedding",
               json{{"description",
                     "orthogonal coordinates; row k is simple root alpha_k in the "
                     "standard rational realization of the type"},
                    {"simple_roots", rows}}},
              {"points", pts}};
}

}  // namespace demazure
