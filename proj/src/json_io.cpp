#include "gk/json_io.hpp"

#include <map>

#include "gk/errors.hpp"

namespace gk {

namespace {

const std::map<Family, std::string>& family_names() {
  static const std::map<Family, std::string> names{
      {Family::Alternating, "alternating"},   {Family::Sporadic, "sporadic"},
      {Family::Linear, "linear"},             {Family::Unitary, "unitary"},
      {Family::Symplectic, "symplectic"},     {Family::OrthogonalOdd, "orthogonal_odd"},
      {Family::OrthogonalEven, "orthogonal_even"}, {Family::Exceptional, "exceptional"}};
  return names;
}

const std::map<ExceptionalType, std::string>& exceptional_names() {
  static const std::map<ExceptionalType, std::string> names{
      {ExceptionalType::G2, "G2"},         {ExceptionalType::F4, "F4"},
      {ExceptionalType::E6, "E6"},         {ExceptionalType::E7, "E7"},
      {ExceptionalType::E8, "E8"},         {ExceptionalType::TwistedE6, "2E6"},
      {ExceptionalType::TriD4, "3D4"},     {ExceptionalType::TwistedB2, "2B2"},
      {ExceptionalType::TwistedG2, "2G2"}, {ExceptionalType::TwistedF4, "2F4"}};
  return names;
}

template <typename Map>
auto key_by_value(const Map& m, const std::string& v) {
  for (const auto& [k, name] : m) {
    if (name == v) return k;
  }
  throw invalid_input("unknown tag '" + v + "'");
}

}  // namespace

json graph_to_json(const PrimeGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return json{{"vertices", g.vertices()}, {"edges", edges}};
}

PrimeGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw invalid_input("graph json needs 'vertices' and 'edges'");
  std::vector<u64> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(v.get<u64>());
  std::vector<std::pair<u64, u64>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw invalid_input("graph json: bad edge");
    edges.emplace_back(e[0].get<u64>(), e[1].get<u64>());
  }
  return PrimeGraph::make(std::move(vertices), std::move(edges));
}

json blueprint_to_json(const SolvableBlueprint& b) {
  json towers = json::array();
  for (const Tower& t : b.towers) {
    json jt{{"p", t.p}, {"m", t.m}, {"D", t.acting}};
    if (t.x_index) {
      jt["x"] = *t.x_index;
      jt["x_coordinates"] = t.x_coords;
    } else {
      jt["x"] = nullptr;
      jt["field_overflow"] = t.field_overflow;
    }
    towers.push_back(std::move(jt));
  }
  return json{{"towers", towers}, {"pi2", b.pi2}};
}

SolvableBlueprint blueprint_from_json(const json& j) {
  if (!j.is_object() || !j.contains("towers") || !j.contains("pi2"))
    throw invalid_input("blueprint json needs 'towers' and 'pi2'");
  SolvableBlueprint b;
  for (const auto& v : j.at("pi2")) b.pi2.push_back(v.get<u64>());
  for (const auto& jt : j.at("towers")) {
    Tower t;
    t.p = jt.at("p").get<u64>();
    t.m = jt.at("m").get<u64>();
    for (const auto& v : jt.at("D")) t.acting.push_back(v.get<u64>());
    if (jt.contains("x") && !jt.at("x").is_null()) {
      t.x_index = jt.at("x").get<u64>();
      u64 x = *t.x_index;
      for (u64 i = 0; i < t.m; ++i) {
        t.x_coords.push_back(x % t.p);
        x /= t.p;
      }
    }
    if (jt.contains("field_overflow")) t.field_overflow = jt.at("field_overflow").get<bool>();
    b.towers.push_back(std::move(t));
  }
  return b;
}

json spectrum_to_json(const SpectrumResult& s) {
  return json{{"name", s.group_name},
              {"order", s.group_order},
              {"order_str", s.group_order_str},
              {"omega", s.omega.values()}};
}

json descriptor_to_json(const AlmostSimpleDescriptor& d) {
  json j{{"family", family_names().at(d.family)}};
  if (d.family == Family::Alternating || d.n != 0) j["n"] = d.n;
  if (d.q) j["q"] = d.q->q;
  if (d.family == Family::OrthogonalEven) j["sign"] = d.sign > 0 ? "+" : "-";
  if (d.family == Family::Exceptional) j["type"] = exceptional_names().at(d.ex);
  if (d.family == Family::Sporadic) j["name"] = d.sporadic_name;
  j["outer"] = json{{"pi_quotient_in_pi_S", d.outer.pi_quotient_in_pi_S},
                    {"two_divides_index", d.outer.two_divides_index},
                    {"contains_inndiag", d.outer.contains_inndiag},
                    {"contains_graph_aut", d.outer.contains_graph_aut},
                    {"is_exactly", d.outer.is_exactly ? json(*d.outer.is_exactly) : json(nullptr)}};
  return j;
}

AlmostSimpleDescriptor descriptor_from_json(const json& j) {
  AlmostSimpleDescriptor d;
  d.family = key_by_value(family_names(), j.at("family").get<std::string>());
  if (j.contains("n")) d.n = j.at("n").get<int>();
  if (j.contains("q")) d.q = PrimePower::of(j.at("q").get<u64>());
  if (j.contains("sign")) {
    auto s = j.at("sign");
    if (s.is_string()) d.sign = s.get<std::string>() == "+" ? 1 : -1;
    else d.sign = s.get<int>() >= 0 ? 1 : -1;
  }
  if (j.contains("type"))
    d.ex = key_by_value(exceptional_names(), j.at("type").get<std::string>());
  if (j.contains("name")) d.sporadic_name = j.at("name").get<std::string>();
  if (j.contains("outer")) {
    const json& o = j.at("outer");
    if (o.contains("pi_quotient_in_pi_S"))
      d.outer.pi_quotient_in_pi_S = o.at("pi_quotient_in_pi_S").get<bool>();
    if (o.contains("two_divides_index"))
      d.outer.two_divides_index = o.at("two_divides_index").get<bool>();
    if (o.contains("contains_inndiag"))
      d.outer.contains_inndiag = o.at("contains_inndiag").get<bool>();
    if (o.contains("contains_graph_aut"))
      d.outer.contains_graph_aut = o.at("contains_graph_aut").get<bool>();
    if (o.contains("is_exactly") && !o.at("is_exactly").is_null())
      d.outer.is_exactly = o.at("is_exactly").get<std::string>();
  }
  return d;
}

namespace {

json witness_to_json(const WitnessPrime& w) {
  json j{{"prime", w.prime}};
  switch (w.role) {
    case WitnessRole::RSetMember:
      j["base"] = w.base;
      j["k"] = w.k;
      break;
    case WitnessRole::Characteristic:
      j["role"] = "characteristic";
      break;
    case WitnessRole::Plain:
      j["role"] = "plain";
      break;
  }
  return j;
}

}  // namespace

json verdict_to_json(const Verdict& v) {
  json cert;
  switch (v.certificate.kind) {
    case CertKind::Partition: {
      cert["kind"] = "two_clique_partition";
      cert["cliques"] = json::array({v.certificate.cliques[0], v.certificate.cliques[1]});
      cert["partition_graph"] = graph_to_json(v.certificate.partition_graph);
      break;
    }
    case CertKind::Witness: {
      cert["kind"] = "witness";
      json w = json::array();
      for (const auto& wp : v.certificate.witness) w.push_back(witness_to_json(wp));
      cert["witness"] = w;
      break;
    }
    case CertKind::Cited:
      cert["kind"] = "cited";
      break;
    case CertKind::Unresolved:
      cert["kind"] = "unresolved";
      cert["reason"] = v.certificate.unresolved_reason;
      break;
  }
  json j{{"group", v.group_label},
         {"no_3_coclique", v.no_3_coclique},
         {"rule", v.rule},
         {"certificate", cert}};
  if (!v.pi_socle.empty()) j["pi_socle"] = v.pi_socle;
  if (v.special_triple) {
    json decl = json::array();
    for (const auto& wp : v.special_declared) decl.push_back(witness_to_json(wp));
    j["special_triple"] = *v.special_triple;
    j["special_declared"] = decl;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json realization_report_to_json(const RealizationReport& r) {
  json j{{"blueprint", blueprint_to_json(r.blueprint)},
         {"target", graph_to_json(r.target)},
         {"analytic_graph", graph_to_json(r.analytic)},
         {"analytic_match", r.analytic_match}};
  if (r.order) j["order"] = *r.order;
  if (r.enumerated_match)
    j["enumerated_match"] = *r.enumerated_match;
  else
    j["enumeration_skipped"] = r.enumeration_skipped;
  return j;
}

json realizability_to_json(const RealizabilityReport& r, const PrimeGraph& g) {
  json j{{"graph", graph_to_json(g)},
         {"no_3_coclique", r.no_3_coclique},
         {"complement_3_colorable", r.complement_3_colorable},
         {"realizable", r.realizable()}};
  if (r.coclique) j["coclique"] = *r.coclique;
  if (r.coloring) j["complement_coloring"] = *r.coloring;
  if (r.coloring_exhausted) j["coloring_exhausted"] = true;
  return j;
}

}  // namespace gk
