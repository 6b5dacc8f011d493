#include "recolle/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "recolle/errors.hpp"

namespace recolle {

uint64_t search_budget() {
  if (const char* s = std::getenv("RECOLLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && v > 0) return v;
  }
  return uint64_t{1} << 22;
}

// ------------------------------------------------------------------ exceptional objects

namespace {

struct Slot {
  size_t diff, row, col, basis;
};

using Shape = std::vector<std::vector<size_t>>;  // multiplicity vector per degree

std::vector<size_t> expand(const std::vector<size_t>& mult) {
  std::vector<size_t> out;
  for (size_t v = 0; v < mult.size(); ++v) out.insert(out.end(), mult[v], v);
  return out;
}

std::vector<std::vector<size_t>> multiplicity_vectors(size_t nv, size_t max_mult) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur(nv, 0);
  while (true) {
    size_t i = 0;
    while (i < nv && cur[i] == max_mult) cur[i++] = 0;
    if (i == nv) break;
    ++cur[i];
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    size_t sx = 0, sy = 0;
    for (size_t c : x) sx += c;
    for (size_t c : y) sy += c;
    return sx != sy ? sx < sy : x > y;
  });
  return out;
}

// identity components between the end terms survive every homotopy
bool ends_share_vertex(const Shape& s) {
  if (s.size() < 2) return false;
  for (size_t v = 0; v < s.front().size(); ++v)
    if (s.front()[v] && s.back()[v]) return true;
  return false;
}

}  // namespace

ExceptionalCatalog enumerate_exceptional(const AlgebraPtr& a, size_t max_len, size_t max_mult, uint64_t seed,
                                         uint64_t budget) {
  const Field& f = a->field;
  if (!f.is_finite()) throw FieldMismatch("exceptional search needs a finite field, got " + f.name());
  if (!a->vertex_basis) throw AlgebraMismatch("exceptional search needs a vertex basis");
  if (max_len == 0 || max_mult == 0) throw DimError("caps must be positive");
  if (budget == 0) budget = search_budget();
  const size_t nv = a->num_vertices();
  const auto q = static_cast<uint64_t>(f.p);

  // radical basis of each corner e_i A e_j
  std::vector<std::vector<std::vector<size_t>>> rad(nv, std::vector<std::vector<size_t>>(nv));
  std::vector<bool> is_idem(a->dim(), false);
  for (size_t v : a->idempotents) is_idem[v] = true;
  for (size_t b = 0; b < a->dim(); ++b)
    if (!is_idem[b]) rad[a->basis[b].left][a->basis[b].right].push_back(b);

  ExceptionalCatalog cat;
  cat.algebra = a;
  cat.max_len = max_len;
  cat.max_mult = max_mult;
  auto mvs = multiplicity_vectors(nv, max_mult);

  std::vector<Shape> shapes;
  std::function<void(Shape&, size_t)> grow = [&](Shape& s, size_t len) {
    if (s.size() == len) {
      shapes.push_back(s);
      return;
    }
    for (const auto& m : mvs) {
      s.push_back(m);
      grow(s, len);
      s.pop_back();
    }
  };
  for (size_t len = 1; len <= max_len; ++len) {
    Shape s;
    grow(s, len);
  }

  // budget: product of corner-space sizes over the matrix entries, summed over shapes
  struct Plan {
    Shape shape;
    std::vector<std::vector<size_t>> terms;
    std::vector<Slot> slots;
  };
  std::vector<Plan> plans;
  long double space = 0;
  for (const auto& s : shapes) {
    ++cat.shapes;
    if (ends_share_vertex(s)) {
      ++cat.pruned_shapes;
      continue;
    }
    Plan p;
    p.shape = s;
    for (const auto& m : s) p.terms.push_back(expand(m));
    for (size_t k = 0; k + 1 < s.size(); ++k)
      for (size_t i = 0; i < p.terms[k + 1].size(); ++i)
        for (size_t j = 0; j < p.terms[k].size(); ++j)
          for (size_t b : rad[p.terms[k + 1][i]][p.terms[k][j]]) p.slots.push_back({k, i, j, b});
    space += std::pow(static_cast<long double>(q), static_cast<long double>(p.slots.size()));
    plans.push_back(std::move(p));
  }
  if (space > static_cast<long double>(budget))
    throw CapTooLarge("search space " + std::to_string(static_cast<double>(space)) + " exceeds budget " +
                      std::to_string(budget));
  cat.search_space = static_cast<uint64_t>(space);

  for (const auto& p : plans) {
    const size_t len = p.terms.size();
    const size_t ns = p.slots.size();
    std::vector<uint64_t> digit(ns, 0);
    std::vector<ExceptionalEntry> found;
    while (true) {
      // summands that split off: zero column at the start, zero row at the end, both in the middle
      bool splits = false;
      if (len > 1) {
        std::vector<std::vector<bool>> out_nz(len), in_nz(len);
        for (size_t k = 0; k < len; ++k) out_nz[k].assign(p.terms[k].size(), false), in_nz[k] = out_nz[k];
        for (size_t t = 0; t < ns; ++t)
          if (digit[t]) {
            out_nz[p.slots[t].diff][p.slots[t].col] = true;
            in_nz[p.slots[t].diff + 1][p.slots[t].row] = true;
          }
        for (size_t k = 0; k < len && !splits; ++k)
          for (size_t i = 0; i < p.terms[k].size(); ++i) {
            bool o = k + 1 < len ? out_nz[k][i] : false, n = k > 0 ? in_nz[k][i] : false;
            if (!o && !n) {
              splits = true;
              break;
            }
          }
      }
      if (!splits) {
        ProjComplex x(a);
        x.lo = 0;
        x.terms = p.terms;
        for (size_t k = 0; k + 1 < len; ++k) x.diffs.emplace_back(a, p.terms[k + 1], p.terms[k]);
        for (size_t t = 0; t < ns; ++t)
          if (digit[t]) x.diffs[p.slots[t].diff].at(p.slots[t].row, p.slots[t].col)[p.slots[t].basis] =
              f.from_int(static_cast<int64_t>(digit[t]));
        if (x.check_d2()) {
          ++cat.complexes;
          if (is_exceptional(x)) {
            ++cat.exceptional_raw;
            EndAlgebra e = end_algebra(x, seed);
            if (is_local(e.algebra, seed).is_true()) {
              bool dup = false;
              for (const auto& g : found) {
                TriBool iso = kb_isomorphic(g.complex, x, seed);
                if (iso.is_true()) {
                  dup = true;
                  break;
                }
                if (iso.is_unknown()) cat.evidence.push_back("undecided isomorphism kept apart: " + iso.evidence);
              }
              if (!dup) {
                ExceptionalEntry en;
                en.complex = x;
                en.end_dim = e.algebra->dim();
                en.end_fingerprint = fingerprint(e.algebra);
                en.certificate = "Hom(X, X[n]) = 0 for 0 < |n| <= " + std::to_string(x.amplitude()) +
                                 "; End local of dim " + std::to_string(en.end_dim);
                found.push_back(std::move(en));
              }
            }
          }
        }
      }
      size_t t = 0;
      while (t < ns && ++digit[t] == q) digit[t++] = 0;
      if (t == ns) break;
    }
    for (auto& en : found) cat.entries.push_back(std::move(en));
  }
  // entries of different shapes are told apart by their term multiplicities
  for (size_t i = 0; i < cat.entries.size(); ++i)
    for (size_t j = i + 1; j < cat.entries.size(); ++j) {
      const auto& x = cat.entries[i].complex;
      const auto& y = cat.entries[j].complex;
      if (x.terms.size() == y.terms.size()) {
        bool same = true;
        for (int k = 0; k <= x.hi(); ++k) same = same && x.multiplicity(k) == y.multiplicity(k);
        if (same) cat.evidence.push_back("entries " + std::to_string(i) + ", " + std::to_string(j) +
                                         ": no chain isomorphism by exhaustive search");
      }
    }
  std::ostringstream os;
  os << "field " << f.name() << ", lengths <= " << max_len << ", multiplicities <= " << max_mult << ", "
     << cat.shapes << " shapes (" << cat.pruned_shapes << " pruned: end terms share a vertex), " << cat.complexes
     << " minimal complexes tested";
  cat.note = os.str();
  return cat;
}

// ------------------------------------------------------------------ stratifications

std::string StratificationTree::signature() const {
  std::function<std::string(int)> sig = [&](int i) -> std::string {
    const auto& n = nodes[static_cast<size_t>(i)];
    std::string s = "(" + n.fp.str();
    if (n.kind == StratNode::Kind::Internal) s += " | " + n.edge + ": " + sig(n.quotient) + ", " + sig(n.corner);
    return s + ")";
  };
  return nodes.empty() ? "()" : sig(0);
}

std::vector<const StratNode*> StratificationTree::leaves() const {
  std::vector<const StratNode*> out;
  for (const auto& n : nodes)
    if (n.kind != StratNode::Kind::Internal) out.push_back(&n);
  return out;
}

bool StratificationTree::resolved() const {
  for (const auto* l : leaves())
    if (l->kind != StratNode::Kind::SimpleCertified) return false;
  return true;
}

namespace {

// appends t's nodes to dst, returning the index of t's root
int graft(std::vector<StratNode>& dst, const StratificationTree& t) {
  const int off = static_cast<int>(dst.size());
  for (auto n : t.nodes) {
    if (n.quotient >= 0) n.quotient += off;
    if (n.corner >= 0) n.corner += off;
    dst.push_back(std::move(n));
  }
  return off;
}

std::vector<StratificationTree> trees_of(const AlgebraPtr& a, size_t depth, size_t level, size_t limit) {
  if (level > limit) throw RecursionLimit("stratification deeper than " + std::to_string(limit));
  StratNode root;
  root.algebra = a;
  root.fp = fingerprint(a);
  TriBool local = is_local(a);
  std::vector<StratificationTree> out;
  if (local.is_true() || a->num_vertices() <= 1) {
    root.kind = local.is_true() ? StratNode::Kind::SimpleCertified : StratNode::Kind::Unresolved;
    root.evidence = local.is_true() ? "local" : "one vertex, locality undecided: " + local.evidence;
    out.push_back({{root}});
    return out;
  }
  std::map<std::string, size_t> seen;
  size_t undecided = 0;
  for (const auto& e : proper_vertex_subsets(a)) {
    StratStatus s = stratifying_status(a, e, depth);
    if (!s.certified()) {
      if (s.kind == StratStatus::Kind::Unknown) ++undecided;
      continue;
    }
    auto b = quotient_by_idempotent_ideal(a, e);
    auto c = corner(a, e);
    if (b->num_vertices() + c->num_vertices() != a->num_vertices())
      throw InvariantViolation("rank additivity fails at " + subset_str(a, e));
    auto tb = trees_of(b, default_depth(b), level + 1, limit);
    auto tc = trees_of(c, default_depth(c), level + 1, limit);
    for (const auto& x : tb)
      for (const auto& y : tc) {
        StratificationTree t;
        StratNode r = root;
        r.kind = StratNode::Kind::Internal;
        r.edge = subset_str(a, e);
        r.evidence = s.str();
        t.nodes.push_back(r);
        t.nodes[0].quotient = graft(t.nodes, x);
        t.nodes[0].corner = graft(t.nodes, y);
        std::string sig = t.signature();
        if (seen.count(sig)) continue;
        seen[sig] = out.size();
        out.push_back(std::move(t));
      }
  }
  if (out.empty()) {
    root.kind = StratNode::Kind::Unresolved;
    root.evidence = "no certified stratifying idempotent (" + std::to_string(undecided) + " undecided)";
    out.push_back({{root}});
  }
  return out;
}

std::vector<std::string> leaf_prints(const StratificationTree& t) {
  std::vector<std::string> out;
  for (const auto* l : t.leaves()) out.push_back(l->fp.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<StratificationTree> stratification_trees(const AlgebraPtr& a, size_t depth, size_t recursion_limit) {
  return trees_of(a, depth ? depth : default_depth(a), 0, recursion_limit);
}

const char* JHVerdict::name() const {
  switch (kind) {
    case Kind::Holds:
      return "Holds";
    case Kind::Fails:
      return "Fails";
    default:
      return "Inconclusive";
  }
}

JHVerdict jh_compare(const StratificationTree& t1, const StratificationTree& t2) {
  if (t1.nodes.empty() || t2.nodes.empty() || !(t1.nodes[0].fp == t2.nodes[0].fp))
    throw RootMismatch("trees have different roots");
  JHVerdict v;
  v.first = leaf_prints(t1);
  v.second = leaf_prints(t2);
  if (!t1.resolved() || !t2.resolved()) {
    v.kind = JHVerdict::Kind::Inconclusive;
    v.reason = "a leaf is not certified derived simple";
  } else if (v.first == v.second) {
    v.kind = JHVerdict::Kind::Holds;
    v.reason = "leaf fingerprints agree as multisets";
  } else {
    v.kind = JHVerdict::Kind::Fails;
    v.reason = "leaf fingerprint multisets differ";
  }
  return v;
}

std::string to_dot(const StratificationTree& t, const std::string& name) {
  auto esc = [](const std::string& s) {
    std::string o;
    for (char c : s) {
      if (c == '"' || c == '\\') o += '\\';
      o += c;
    }
    return o;
  };
  std::ostringstream os;
  os << "digraph \"" << esc(name) << "\" {\n";
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    const char* shape = n.kind == StratNode::Kind::Internal ? "box"
                        : n.kind == StratNode::Kind::SimpleCertified ? "ellipse"
                                                                      : "diamond";
    os << "  n" << i << " [shape=" << shape << ", label=\"" << esc(n.fp.str()) << "\"];\n";
  }
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    if (n.kind != StratNode::Kind::Internal) continue;
    os << "  n" << i << " -> n" << n.quotient << " [label=\"A/AeA, e=" << esc(n.edge) << "\"];\n";
    os << "  n" << i << " -> n" << n.corner << " [label=\"eAe, e=" << esc(n.edge) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace recolle
