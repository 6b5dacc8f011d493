#include "report.hpp"

#include "recolle/io.hpp"

namespace recolle::cli {

Flags& flags() {
  static Flags f;
  return f;
}

Json to_json(const TriBool& t) {
  if (t.is_unknown()) flags().unknown = true;
  return Json{{"value", t.name()}, {"evidence", t.evidence}};
}

Json to_json(const PdStatus& s) {
  Json j{{"status", s.str()}};
  switch (s.kind) {
    case PdStatus::Kind::Finite:
      j["kind"] = "Finite";
      j["n"] = s.n;
      break;
    case PdStatus::Kind::Periodic:
      j["kind"] = "Periodic";
      j["pre"] = s.pre;
      j["period"] = s.period;
      break;
    default:
      flags().unknown = true;
      j["kind"] = "DepthExceeded";
      j["depth"] = s.n;
  }
  return j;
}

Json to_json(const GlDimStatus& g) {
  if (g.kind == GlDimStatus::Kind::Unknown) flags().unknown = true;
  Json j{{"status", g.str()}};
  if (g.kind == GlDimStatus::Kind::Finite) j["n"] = g.n;
  return j;
}

Json to_json(const AlgebraFingerprint& f) {
  return Json{{"dim", f.dim},         {"loewy", f.loewy},   {"r", f.r},           {"commutative", f.commutative},
              {"center", f.center},   {"cartan", f.cartan}, {"local", f.local},   {"summary", f.str()}};
}

Json to_json(const ProjComplex& x) {
  Json j = Json::parse(complex_to_json(x));
  j["text"] = x.str();
  return j;
}

Json to_json(const StratStatus& s) {
  const char* k = s.kind == StratStatus::Kind::Certified ? "Certified"
                  : s.kind == StratStatus::Kind::Refuted ? "Refuted"
                                                         : "Unknown";
  if (s.kind == StratStatus::Kind::Unknown) flags().unknown = true;
  Json j{{"status", k}, {"resolution", to_json(s.resolution)}, {"terms", s.terms}, {"evidence", s.evidence}};
  if (s.kind == StratStatus::Kind::Refuted) j["tor"] = Json{{"degree", s.tor_degree}, {"dim", s.tor_value}};
  return j;
}

Json to_json(const RestrictionReport& r) {
  return Json{{"D-(Mod)", to_json(r.dminus)},
              {"Db(Mod)", to_json(r.dbMod)},
              {"Db(mod)", to_json(r.dbmod)},
              {"Kb(proj)", to_json(r.kbproj)},
              {"pd_A(A/AeA)", to_json(r.pd_b)},
              {"pd_C(eA) left", to_json(r.pd_left_c)},
              {"pd_C(Ae) right", to_json(r.pd_right_c)},
              {"j_*(C) compact", to_json(r.jstar_compact)},
              {"i^!(A) compact", to_json(r.ishriek_compact)}};
}

namespace {

Json steps(const std::vector<LadderStep>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(Json{{"side", s.side}, {"verdict", to_json(s.verdict)}, {"resolution", s.status.str()}});
  return a;
}

Json level(const LevelVerdict& v) { return Json{{"verdict", v.name()}, {"detail", v.detail}}; }

}  // namespace

Json to_json(const LadderReport& r) {
  return Json{{"up", steps(r.up_steps)},
              {"down", steps(r.down_steps)},
              {"height_lower_bound", r.height_lower_bound},
              {"complete_up", to_json(r.complete_up)},
              {"complete_down", to_json(r.complete_down)},
              {"summary", r.str()}};
}

Json to_json(const SimplicityReport& r) {
  Json w = Json::array();
  for (const auto& [e, h] : r.witnesses) w.push_back(Json{{"e", e}, {"height", h}});
  return Json{{"D(Mod)", level(r.dmod)},
              {"D-(Mod)", level(r.dminus)},
              {"Kb(proj)/Db", level(r.kb)},
              {"best_height", r.best_height},
              {"witnesses", w}};
}

Json to_json(const ExceptionalCatalog& c) {
  Json e = Json::array();
  for (const auto& x : c.entries)
    e.push_back(Json{{"complex", to_json(x.complex)},
                     {"end_dim", x.end_dim},
                     {"end_fingerprint", to_json(x.end_fingerprint)},
                     {"certificate", x.certificate}});
  return Json{{"field", c.algebra->field.name()},
              {"max_len", c.max_len},
              {"max_mult", c.max_mult},
              {"count", c.entries.size()},
              {"entries", e},
              {"shapes", c.shapes},
              {"pruned_shapes", c.pruned_shapes},
              {"search_space", c.search_space},
              {"complexes_tested", c.complexes},
              {"evidence", c.evidence},
              {"note", c.note},
              {"assumption", "search over a small finite field; objects needing a larger field are not seen"}};
}

Json to_json(const StratificationTree& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes) {
    const char* k = n.kind == StratNode::Kind::Internal          ? "Internal"
                    : n.kind == StratNode::Kind::SimpleCertified ? "SimpleCertified"
                                                                 : "Unresolved";
    Json j{{"kind", k}, {"fingerprint", n.fp.str()}, {"evidence", n.evidence}};
    if (n.kind == StratNode::Kind::Internal) {
      j["e"] = n.edge;
      j["quotient"] = n.quotient;
      j["corner"] = n.corner;
    }
    nodes.push_back(j);
  }
  Json leaves = Json::array();
  for (const auto* l : t.leaves()) leaves.push_back(l->fp.str());
  return Json{{"signature", t.signature()}, {"resolved", t.resolved()}, {"leaves", leaves}, {"nodes", nodes}};
}

Json to_json(const JHVerdict& v) {
  if (v.kind == JHVerdict::Kind::Inconclusive) flags().unknown = true;
  return Json{{"verdict", v.name()}, {"first", v.first}, {"second", v.second}, {"reason", v.reason}};
}

Json to_json(const OracleReport& r) {
  if (!r.agree()) flags().disagreement = true;
  return Json{{"target", r.target},
              {"instance", r.instance},
              {"oracle", r.oracle_value},
              {"main", r.main_value},
              {"agree", r.agree()}};
}

std::string labels(const AlgebraPtr& a, const std::vector<size_t>& mult) {
  std::string s;
  for (size_t v = 0; v < mult.size(); ++v)
    for (size_t k = 0; k < mult[v]; ++k) s += (s.empty() ? "" : " ") + a->vertex_labels[v];
  return s;
}

}  // namespace recolle::cli
