#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "recolle/io.hpp"
#include "report.hpp"

using namespace recolle;
using recolle::cli::Json;
using recolle::cli::to_json;

namespace {

struct RunConfig {
  std::string input;
  std::string command;
  size_t depth = 0;
  size_t max_len = 2, max_mult = 2;
  size_t steps = 3;
  std::string field;
  uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  std::string x = "", y = "";
  int n = 0;
};

struct Output {
  Json json;
  std::string text;
  std::string dot;
};

AlgebraPtr load(const RunConfig& c, std::optional<Field> f = {}) {
  if (!f && !c.field.empty()) f = parse_field(c.field);
  return build_algebra(load_presentation(c.input, f));
}

size_t depth_of(const RunConfig& c, const AlgebraPtr& a) { return c.depth ? c.depth : default_depth(a); }

Json header(const RunConfig& c, const AlgebraPtr& a) {
  Json v = Json::array();
  for (const auto& l : a->vertex_labels) v.push_back(l);
  return Json{{"command", c.command}, {"input", c.input}, {"field", a->field.name()}, {"vertices", v},
              {"dim", a->dim()}, {"depth", depth_of(c, a)}, {"seed", c.seed}};
}

Output cmd_analyze(const RunConfig& c) {
  auto a = load(c);
  const size_t d = depth_of(c, a);
  Output o;
  o.json = header(c, a);
  o.json["cartan"] = cartan_matrix(a);
  o.json["loewy"] = loewy_vector(a);
  o.json["fingerprint"] = to_json(fingerprint(a));
  o.json["projectives"] = Json::array();
  std::ostringstream tx;
  tx << "dim " << a->dim() << ", field " << a->field.name() << "\n";
  for (size_t v = 0; v < a->num_vertices(); ++v) {
    auto p = projective_module(a, v);
    auto layers = radical_filtration(p);
    Json ls = Json::array();
    tx << "P" << a->vertex_labels[v] << ":\n";
    for (const auto& l : layers) {
      ls.push_back(cli::labels(a, l));
      tx << "    " << cli::labels(a, l) << "\n";
    }
    o.json["projectives"].push_back(Json{{"vertex", a->vertex_labels[v]}, {"dim", p.dim()}, {"layers", ls}});
  }
  Json simples = Json::array();
  for (size_t v = 0; v < a->num_vertices(); ++v)
    simples.push_back(Json{{"vertex", a->vertex_labels[v]}, {"pd", to_json(pd(simple_module(a, v), d))}});
  o.json["simples"] = simples;
  GlDimStatus g = gldim(a, d);
  o.json["gldim"] = to_json(g);
  tx << "cartan";
  for (const auto& row : cartan_matrix(a)) {
    tx << " [";
    for (size_t j = 0; j < row.size(); ++j) tx << (j ? "," : "") << row[j];
    tx << "]";
  }
  tx << "\ngldim " << g.str() << "\n";
  o.text = tx.str();
  return o;
}

Output cmd_recollements(const RunConfig& c) {
  auto a = load(c);
  const size_t d = depth_of(c, a);
  Output o;
  o.json = header(c, a);
  std::ostringstream tx;
  Json rows = Json::array();
  for (const auto& e : proper_vertex_subsets(a)) {
    Json r{{"e", subset_str(a, e)}};
    StratStatus s = stratifying_status(a, e, d);
    r["stratifying"] = to_json(s);
    tx << subset_str(a, e) << ": " << s.str();
    if (s.certified()) {
      auto rec = build_recollement(a, e, d);
      auto rr = restriction_report(rec, d);
      auto lr = ladder_heights(rec, c.steps, d);
      r["B"] = to_json(fingerprint(rec.b));
      r["C"] = to_json(fingerprint(rec.c));
      r["rank_check"] = rec.b->num_vertices() + rec.c->num_vertices() == a->num_vertices();
      r["restriction"] = to_json(rr);
      r["extend_down"] = to_json(extend_down(rec, d));
      r["extend_up"] = to_json(extend_up(rec, d));
      r["ladder"] = to_json(lr);
      tx << "\n  B: " << fingerprint(rec.b).str() << "\n  C: " << fingerprint(rec.c).str() << "\n  flags D-(Mod) "
         << rr.dminus.name() << ", Db(Mod) " << rr.dbMod.name() << ", Db(mod) " << rr.dbmod.name() << ", Kb(proj) "
         << rr.kbproj.name() << "\n  ladder " << lr.str();
    }
    tx << "\n";
    rows.push_back(r);
  }
  o.json["recollements"] = rows;
  o.json["note"] = "ladder heights count every recollement reached by the extension steps, idempotent or not";
  SearchBounds b;
  b.depth = d;
  b.ladder_steps = c.steps;
  auto sr = simplicity_report(a, b);
  o.json["simplicity"] = to_json(sr);
  tx << "simplicity: D(Mod) " << sr.dmod.name() << ", D-(Mod) " << sr.dminus.name() << ", Kb(proj) "
     << sr.kb.name() << "\n";
  o.text = tx.str();
  return o;
}

Output cmd_stratify(const RunConfig& c) {
  auto a = load(c);
  const size_t d = depth_of(c, a);
  auto trees = stratification_trees(a, d);
  Output o;
  o.json = header(c, a);
  std::ostringstream tx, dot;
  Json ts = Json::array();
  for (size_t i = 0; i < trees.size(); ++i) {
    ts.push_back(to_json(trees[i]));
    tx << "tree " << i << ": " << trees[i].signature() << "\n";
    dot << to_dot(trees[i], "tree" + std::to_string(i));
  }
  o.json["trees"] = ts;
  // group trees by leaf multiset
  std::map<std::vector<std::string>, size_t> groups;
  for (const auto& t : trees) {
    std::vector<std::string> l;
    for (const auto* x : t.leaves()) l.push_back(x->fp.str());
    std::sort(l.begin(), l.end());
    ++groups[l];
  }
  Json gs = Json::array();
  for (const auto& [l, m] : groups) gs.push_back(Json{{"leaves", l}, {"multiplicity", m}});
  o.json["leaf_multisets"] = gs;
  Json jh = Json::array();
  std::string overall = "Holds";
  for (size_t i = 0; i < trees.size(); ++i)
    for (size_t j = i + 1; j < trees.size(); ++j) {
      auto v = jh_compare(trees[i], trees[j]);
      Json x = to_json(v);
      x["trees"] = {i, j};
      jh.push_back(x);
      tx << "JH(" << i << "," << j << "): " << v.name() << "\n";
      if (v.kind == JHVerdict::Kind::Fails) overall = "Fails";
      else if (v.kind == JHVerdict::Kind::Inconclusive && overall == "Holds") overall = "Inconclusive";
    }
  for (const auto& t : trees)
    if (!t.resolved() && overall == "Holds") overall = "Inconclusive";
  if (overall == "Inconclusive") cli::flags().unknown = true;
  o.json["jordan_holder"] = jh;
  o.json["jordan_holder_overall"] = overall;
  tx << "overall: " << overall << "\n";
  o.text = tx.str();
  o.dot = dot.str();
  return o;
}

Output cmd_exceptional(const RunConfig& c) {
  auto a = load(c, parse_field(c.field.empty() ? "F2" : c.field));
  auto cat = enumerate_exceptional(a, c.max_len, c.max_mult, c.seed);
  Output o;
  o.json = header(c, a);
  o.json["catalog"] = to_json(cat);
  std::ostringstream tx;
  tx << cat.entries.size() << " indecomposable exceptional objects up to shift (" << cat.note << ")\n";
  for (const auto& e : cat.entries) tx << "  " << e.complex.str() << "   End: " << e.end_fingerprint.str() << "\n";
  o.text = tx.str();
  return o;
}

Output cmd_hom(const RunConfig& c) {
  auto a = load(c);
  auto x = load_complex(a, c.x);
  auto y = load_complex(a, c.y.empty() ? c.x : c.y);
  auto h = hom_dim(x, y, c.n);
  Output o;
  o.json = header(c, a);
  o.json["x"] = to_json(x);
  o.json["y"] = to_json(y);
  o.json["n"] = c.n;
  o.json["dim"] = h.dim;
  o.json["chain_maps"] = h.chain_dim;
  o.json["null_homotopic"] = h.nullhomotopic_dim;
  o.text = "dim Hom(X, Y[" + std::to_string(c.n) + "]) = " + std::to_string(h.dim) + "\n";
  return o;
}

Output cmd_nakayama(const RunConfig& c) {
  auto a = load(c);
  auto x = load_complex(a, c.x);
  auto y = nakayama(a, x, depth_of(c, a));
  Output o;
  o.json = header(c, a);
  o.json["x"] = to_json(x);
  o.json["nu_x"] = to_json(y);
  o.json["cohomology"] = Json::array();
  for (const auto& [k, v] : total_cohomology_dims(y)) o.json["cohomology"].push_back(Json{{"degree", k}, {"dim", v}});
  o.text = "nu(" + x.str() + ") = " + y.str() + "\n";
  return o;
}

Output cmd_oracle_check(const RunConfig& c) {
  auto q = load_presentation(c.input, Field::prime(2));
  auto a = build_algebra(q);
  const size_t d = depth_of(c, a);
  const uint64_t budget = search_budget();
  Output o;
  o.json = header(c, a);
  Json reps = Json::array();
  size_t skipped = 0, agree = 0;
  auto add = [&](OracleReport r) {
    agree += r.agree();
    reps.push_back(to_json(r));
  };
  if (q.is_monomial()) add({"path_count", "dim A", static_cast<long long>(path_count(q)), static_cast<long long>(a->dim())});
  std::vector<ProjComplex> objs;
  for (size_t v = 0; v < a->num_vertices(); ++v) objs.push_back(stalk(a, {v}));
  try {
    for (const auto& e : enumerate_exceptional(a, 2, 1, c.seed).entries)
      if (e.complex.amplitude() > 0) objs.push_back(e.complex);
  } catch (const CapTooLarge&) {
    ++skipped;
  }
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (int n = -2; n <= 2; ++n) {
        try {
          long long o1 = static_cast<long long>(hom_bruteforce(x, y, n, budget));
          add({"hom_dim", x.str() + " , " + y.str() + " [" + std::to_string(n) + "]", o1,
               static_cast<long long>(hom_dim(x, y, n).dim)});
        } catch (const TooLarge&) {
          ++skipped;
        } catch (const CapTooLarge&) {
          ++skipped;
        }
      }
  auto op = opposite(a);
  for (const auto& e : proper_vertex_subsets(a)) {
    auto m = ideal_quotient_module(a, e);
    auto n = ideal_quotient_module(op, e);
    for (size_t i = 0; i <= 4; ++i) {
      auto t = tor_dim(m, n, i, d);
      if (!t) {
        ++skipped;
        continue;
      }
      add({"tor_dim", "Tor_" + std::to_string(i) + "(A/AeA, A/AeA), e=" + subset_str(a, e),
           static_cast<long long>(bar_tor(m, n, i)), static_cast<long long>(*t)});
    }
  }
  o.json["reports"] = reps;
  o.json["agree"] = agree;
  o.json["total"] = reps.size();
  o.json["skipped"] = skipped;
  o.text = std::to_string(agree) + "/" + std::to_string(reps.size()) + " oracle comparisons agree, " +
           std::to_string(skipped) + " skipped over budget\n";
  return o;
}

void emit(const RunConfig& c, const Output& o) {
  std::string body;
  if (c.format == "json")
    body = o.json.dump(2) + "\n";
  else if (c.format == "text")
    body = o.text;
  else if (c.format == "dot") {
    if (o.dot.empty()) throw ParseError("dot output is only available for stratify");
    body = o.dot;
  } else {
    throw ParseError("unknown format '" + c.format + "'");
  }
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(c.out);
    if (!f) throw ParseError("cannot write " + c.out);
    f << body;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recolle: recollements, ladders and derived simplicity of finite-dimensional algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* s) {
    s->add_option("--input,-i", cfg.input, "quiver JSON file")->required();
    s->add_option("--depth", cfg.depth, "resolution depth (default 2 dim A + 4)")->check(CLI::PositiveNumber);
    s->add_option("--max-len", cfg.max_len, "exceptional search: number of terms")->check(CLI::PositiveNumber);
    s->add_option("--max-mult", cfg.max_mult, "exceptional search: multiplicity per vertex")->check(CLI::PositiveNumber);
    s->add_option("--steps", cfg.steps, "ladder steps tried in each direction")->check(CLI::PositiveNumber);
    s->add_option("--field", cfg.field, "override the field: Q, F2, Fp:3");
    s->add_option("--seed", cfg.seed, "seed for randomized certificates");
    s->add_option("--format", cfg.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    s->add_option("--out,-o", cfg.out, "output file");
  };
  std::map<std::string, std::function<Output(const RunConfig&)>> cmds{
      {"analyze", cmd_analyze},     {"recollements", cmd_recollements}, {"stratify", cmd_stratify},
      {"exceptional", cmd_exceptional}, {"hom", cmd_hom},               {"nakayama", cmd_nakayama},
      {"oracle-check", cmd_oracle_check}};
  std::map<std::string, std::string> help{
      {"analyze", "dimensions, Cartan matrix, radical layers, global dimension"},
      {"recollements", "idempotent recollements, restriction flags, ladders, simplicity"},
      {"stratify", "stratification trees and Jordan-Holder comparison"},
      {"exceptional", "bounded search for indecomposable exceptional complexes"},
      {"hom", "dim Hom(X, Y[n]) in Kb(proj)"},
      {"nakayama", "derived Nakayama functor of a complex"},
      {"oracle-check", "brute-force cross-checks over F2"}};
  for (const auto& [name, fn] : cmds) {
    auto* s = app.add_subcommand(name, help[name]);
    common(s);
    if (name == "hom" || name == "nakayama") {
      s->add_option("--x", cfg.x, "complex: P<vertex>, P1+P2 or a complex JSON file")->required();
      if (name == "hom") {
        s->add_option("--y", cfg.y, "second complex (default: --x)");
        s->add_option("--n", cfg.n, "shift");
      }
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (auto* s : app.get_subcommands()) cfg.command = s->get_name();
  try {
    Output o = cmds[cfg.command](cfg);
    emit(cfg, o);
    if (cli::flags().disagreement) return 4;
    if (cli::flags().unknown) return 3;
    return 0;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const CapTooLarge& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const RecursionLimit& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
