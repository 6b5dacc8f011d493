#include "recolle/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace recolle {

using nlohmann::json;

Field parse_field(const std::string& spec) {
  if (spec == "Q" || spec == "q" || spec == "QQ") return Field::rationals();
  std::string s = spec;
  if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) s = s.substr(1);
  if (s.rfind("p:", 0) == 0) s = s.substr(2);
  try {
    size_t used = 0;
    long long p = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("bad field '" + spec + "'");
    return Field::prime(p);
  } catch (const std::logic_error&) {
    throw ParseError("bad field '" + spec + "'");
  } catch (const DimError& e) {
    throw ParseError(e.what());
  }
}

namespace {

size_t vertex_ref(const QuiverPresentation& q, const json& v) {
  if (v.is_number_unsigned()) {
    size_t i = v.get<size_t>();
    if (i >= q.vertices.size()) throw ParseError("vertex index out of range");
    return i;
  }
  if (!v.is_string()) throw ParseError("vertex reference must be a label");
  const std::string s = v.get<std::string>();
  for (size_t i = 0; i < q.vertices.size(); ++i)
    if (q.vertices[i] == s) return i;
  throw ParseError("unknown vertex '" + s + "'");
}

Field field_from_json(const json& f) {
  if (f.is_string()) return parse_field(f.get<std::string>());
  if (f.is_object() && f.contains("Fp")) {
    try {
      return Field::prime(f.at("Fp").get<int64_t>());
    } catch (const DimError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

}  // namespace

QuiverPresentation parse_presentation(const std::string& text, std::optional<Field> field_override) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  QuiverPresentation q;
  try {
    q.field = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
    if (field_override) q.field = *field_override;
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& a : j.value("arrows", json::array())) {
      Arrow ar;
      ar.name = a.at("name").get<std::string>();
      ar.source = vertex_ref(q, a.at("source"));
      ar.target = vertex_ref(q, a.at("target"));
      q.arrows.push_back(ar);
    }
    for (const auto& rel : j.value("relations", json::array())) {
      std::vector<RelationTerm> terms;
      for (const auto& t : rel) {
        RelationTerm rt;
        const auto& c = t.at("coeff");
        rt.coeff = q.field.parse(c.is_string() ? c.get<std::string>() : c.dump());
        for (const auto& name : t.at("path")) rt.path.push_back(q.arrow_index(name.get<std::string>()));
        terms.push_back(rt);
      }
      q.relations.push_back(terms);
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return q;
}

QuiverPresentation load_presentation(const std::string& path, std::optional<Field> field_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str(), field_override);
}

std::string presentation_to_json(const QuiverPresentation& q) {
  json j;
  if (q.field.is_finite())
    j["field"] = {{"Fp", q.field.p}};
  else
    j["field"] = "Q";
  j["vertices"] = q.vertices;
  j["arrows"] = json::array();
  for (const auto& a : q.arrows)
    j["arrows"].push_back({{"name", a.name}, {"source", q.vertices[a.source]}, {"target", q.vertices[a.target]}});
  j["relations"] = json::array();
  for (const auto& rel : q.relations) {
    json r = json::array();
    for (const auto& t : rel) {
      json p = json::array();
      for (size_t a : t.path) p.push_back(q.arrows[a].name);
      r.push_back({{"coeff", t.coeff.str()}, {"path", p}});
    }
    j["relations"].push_back(r);
  }
  return j.dump();
}

// ------------------------------------------------------------------ complexes

namespace {

size_t vertex_of(const AlgebraPtr& a, const std::string& label) {
  for (size_t v = 0; v < a->vertex_labels.size(); ++v)
    if (a->vertex_labels[v] == label) return v;
  throw ParseError("unknown vertex '" + label + "'");
}

AlgElem parse_entry(const AlgebraPtr& a, const json& e) {
  const Field& f = a->field;
  AlgElem x(a->dim(), Scalar(0));
  auto coeff = [&](const json& c) {
    if (c.is_string()) return f.parse(c.get<std::string>());
    if (c.is_number_integer()) return f.from_int(c.get<int64_t>());
    throw ParseError("coefficient must be a string or an integer");
  };
  if (e.is_array()) {
    if (e.size() != a->dim()) throw ParseError("dense entry has the wrong length");
    for (size_t i = 0; i < e.size(); ++i) x[i] = coeff(e[i]);
  } else if (e.is_object()) {
    for (const auto& [k, c] : e.items()) {
      size_t idx = a->dim();
      for (size_t i = 0; i < a->dim(); ++i)
        if (a->basis[i].label == k) idx = i;
      if (idx == a->dim()) throw ParseError("unknown basis element '" + k + "'");
      x[idx] = f.add(x[idx], coeff(c));
    }
  } else if (e.is_number_integer() && e.get<int64_t>() == 0) {
    return x;
  } else {
    throw ParseError("bad differential entry");
  }
  return x;
}

}  // namespace

std::string complex_to_json(const ProjComplex& x) {
  const auto& a = x.algebra;
  json out = json::object();
  out["lo"] = x.lo;
  json terms = json::array(), diffs = json::array();
  for (const auto& t : x.terms) {
    json names = json::array();
    for (size_t v : t) names.push_back(a->vertex_labels[v]);
    terms.push_back(names);
  }
  for (const auto& d : x.diffs) {
    json m = json::array();
    for (size_t i = 0; i < d.rows(); ++i) {
      json row = json::array();
      for (size_t j = 0; j < d.cols(); ++j) {
        json e = json::object();
        for (size_t q = 0; q < d.at(i, j).size(); ++q)
          if (!d.at(i, j)[q].is_zero()) e[a->basis[q].label] = d.at(i, j)[q].str();
        row.push_back(e);
      }
      m.push_back(row);
    }
    diffs.push_back(m);
  }
  out["terms"] = terms;
  out["diffs"] = diffs;
  return out.dump();
}

ProjComplex parse_complex(const AlgebraPtr& a, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("complex JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("terms")) throw ParseError("complex JSON needs \"terms\"");
  ProjComplex x(a);
  x.lo = j.value("lo", 0);
  for (const auto& t : j["terms"]) {
    std::vector<size_t> verts;
    for (const auto& v : t) verts.push_back(vertex_of(a, v.get<std::string>()));
    x.terms.push_back(verts);
  }
  json diffs = j.value("diffs", json::array());
  if (x.terms.size() > 1 && diffs.size() != x.terms.size() - 1) throw ParseError("need one differential per gap");
  for (size_t k = 0; k + 1 < x.terms.size(); ++k) {
    ProjMat d(a, x.terms[k + 1], x.terms[k]);
    const json& m = diffs[k];
    if (m.size() != d.rows()) throw ParseError("differential has the wrong number of rows");
    for (size_t r = 0; r < d.rows(); ++r) {
      if (m[r].size() != d.cols()) throw ParseError("differential has the wrong number of columns");
      for (size_t c = 0; c < d.cols(); ++c) d.at(r, c) = parse_entry(a, m[r][c]);
    }
    x.diffs.push_back(d);
  }
  if (!x.check_d2()) throw ParseError("differential does not square to zero");
  x.trim();
  return x;
}

ProjComplex load_complex(const AlgebraPtr& a, const std::string& spec) {
  if (!spec.empty() && spec[0] == 'P' && spec.find('.') == std::string::npos && spec.find('/') == std::string::npos) {
    std::vector<size_t> verts;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, '+')) {
      if (part.size() < 2 || part[0] != 'P') throw ParseError("bad stalk spec '" + spec + "'");
      verts.push_back(vertex_of(a, part.substr(1)));
    }
    return stalk(a, verts);
  }
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot read " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(a, buf.str());
}

}  // namespace recolle
