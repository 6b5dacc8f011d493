#include "recolle/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace recolle {

size_t QuiverPresentation::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  throw ParseError("unknown arrow '" + name + "'");
}

size_t QuiverPresentation::default_cap() const {
  size_t longest = 0;
  for (const auto& rel : relations)
    for (const auto& t : rel) longest = std::max(longest, t.path.size());
  return 2 * arrows.size() * longest + 8;
}

bool QuiverPresentation::is_monomial() const {
  for (const auto& rel : relations) {
    size_t nonzero = 0;
    for (const auto& t : rel)
      if (!t.coeff.is_zero()) ++nonzero;
    if (nonzero > 1) return false;
  }
  return true;
}

std::string path_label(const QuiverPresentation& q, const std::vector<size_t>& path) {
  std::string s;
  for (auto it = path.rbegin(); it != path.rend(); ++it) s += q.arrows[*it].name;
  return s;
}

// ---------------------------------------------------------------- BasedAlgebra helpers

std::vector<Scalar> BasedAlgebra::mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  const size_t n = dim();
  std::vector<Scalar> z(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = field.mul(x[i], y[j]);
      for (const auto& [k, v] : product(i, j)) z[k] = field.add(z[k], field.mul(c, v));
    }
  }
  return z;
}

std::vector<Scalar> BasedAlgebra::unit() const {
  std::vector<Scalar> u(dim());
  for (size_t e : idempotents) u[e] = Scalar(1);
  return u;
}

Mat BasedAlgebra::left_mult(size_t i) const {
  Mat m(field, dim(), dim());
  for (size_t j = 0; j < dim(); ++j)
    for (const auto& [k, v] : product(i, j)) m.set(k, j, v);
  return m;
}

Mat BasedAlgebra::right_mult(size_t i) const {
  Mat m(field, dim(), dim());
  for (size_t j = 0; j < dim(); ++j)
    for (const auto& [k, v] : product(j, i)) m.set(k, j, v);
  return m;
}

std::vector<size_t> BasedAlgebra::corner_indices(size_t u, size_t w) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < dim(); ++i)
    if (basis[i].left == u && basis[i].right == w) out.push_back(i);
  return out;
}

bool BasedAlgebra::is_idempotent_index(size_t i) const {
  return std::find(idempotents.begin(), idempotents.end(), i) != idempotents.end();
}

std::string BasedAlgebra::element_str(const std::vector<Scalar>& x) const {
  std::string s;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (!x[i].is_one()) s += x[i].str() + "*";
    s += basis[i].label;
  }
  return s.empty() ? "0" : s;
}

void BasedAlgebra::finalize() {
  const size_t n = dim();
  by_left.assign(num_vertices(), {});
  for (size_t i = 0; i < n; ++i) {
    if (vertex_basis)
      by_left[basis[i].left].push_back(i);
    else
      by_left[0].push_back(i);
  }
  generators = idempotents;
  if (!vertex_basis) {
    for (size_t i = 1; i < n; ++i) generators.push_back(i);
    return;
  }
  std::vector<std::vector<Scalar>> rows;
  for (size_t i = 0; i < n; ++i) {
    if (is_idempotent_index(i)) continue;
    for (size_t j = 0; j < n; ++j) {
      if (is_idempotent_index(j)) continue;
      const auto& pr = product(i, j);
      if (pr.empty()) continue;
      std::vector<Scalar> r(n);
      for (const auto& [k, v] : pr) r[k] = v;
      rows.push_back(std::move(r));
    }
  }
  auto as_mat = [&](const std::vector<std::vector<Scalar>>& rs) {
    Mat m(field, rs.size(), n);
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < n; ++j) m.set(i, j, rs[i][j]);
    return m;
  };
  size_t rk = rank(as_mat(rows));
  for (size_t i = 0; i < n; ++i) {
    if (is_idempotent_index(i)) continue;
    std::vector<Scalar> r(n);
    r[i] = Scalar(1);
    rows.push_back(r);
    size_t nr = rank(as_mat(rows));
    if (nr > rk) {
      generators.push_back(i);
      rk = nr;
    } else {
      rows.pop_back();
    }
  }
}

// ---------------------------------------------------------------- build_algebra

namespace {

struct Degree {
  std::vector<std::vector<size_t>> paths;            // basis paths
  std::vector<size_t> src, tgt;                      // per basis path
  std::vector<std::vector<int64_t>> cand_id;         // [prev basis][arrow] -> candidate id or -1
  std::vector<SparseVec> reduce;                     // candidate -> coordinates in this degree
};

class PathBuilder {
 public:
  explicit PathBuilder(const QuiverPresentation& q) : q_(q), f_(q.field) {}

  // coordinates of arrow a * (vector over degree d), in degree d+1
  SparseVec extend(size_t d, const SparseVec& v, size_t a) const {
    if (d + 1 >= deg_.size()) return {};
    const Degree& nx = deg_[d + 1];
    std::map<size_t, Scalar> acc;
    for (const auto& [b, c] : v) {
      int64_t id = nx.cand_id[b][a];
      if (id < 0) continue;
      for (const auto& [k, x] : nx.reduce[id]) acc[k] = f_.add(acc[k], f_.mul(c, x));
    }
    SparseVec out;
    for (auto& [k, x] : acc)
      if (!x.is_zero()) out.emplace_back(k, x);
    return out;
  }

  void run(size_t cap) {
    Degree d0;
    for (size_t v = 0; v < q_.vertices.size(); ++v) {
      d0.paths.push_back({});
      d0.src.push_back(v);
      d0.tgt.push_back(v);
    }
    deg_.push_back(std::move(d0));
    for (size_t l = 0;; ++l) {
      const Degree& cur = deg_[l];
      Degree nx;
      std::vector<std::pair<size_t, size_t>> cands;  // (prev basis, arrow)
      nx.cand_id.assign(cur.paths.size(), std::vector<int64_t>(q_.arrows.size(), -1));
      for (size_t b = 0; b < cur.paths.size(); ++b)
        for (size_t a = 0; a < q_.arrows.size(); ++a)
          if (q_.arrows[a].source == cur.tgt[b]) {
            nx.cand_id[b][a] = static_cast<int64_t>(cands.size());
            cands.emplace_back(b, a);
          }
      const size_t nc = cands.size();
      // relation rows r*w in degree l+1, expressed over candidates
      std::vector<std::vector<Scalar>> rows;
      for (const auto& rel : q_.relations) {
        const size_t dr = rel.front().path.size();
        if (dr > l + 1) continue;
        const size_t m = l + 1 - dr;
        const size_t rs = q_.arrows[rel.front().path.front()].source;
        for (size_t w = 0; w < deg_[m].paths.size(); ++w) {
          if (deg_[m].tgt[w] != rs) continue;
          std::vector<Scalar> row(nc);
          bool any = false;
          for (const auto& t : rel) {
            if (t.coeff.is_zero()) continue;
            SparseVec v{{w, Scalar(1)}};
            size_t dd = m;
            for (size_t s = 0; s + 1 < t.path.size(); ++s) v = extend(dd++, v, t.path[s]);
            const size_t last = t.path.back();
            for (const auto& [b, c] : v) {
              int64_t id = nx.cand_id[b][last];
              if (id < 0) continue;
              row[id] = f_.add(row[id], f_.mul(t.coeff, c));
              any = true;
            }
          }
          if (any) rows.push_back(std::move(row));
        }
      }
      // echelon with reversed column order: pivots fall on late candidates
      Mat m(f_, rows.size(), nc);
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < nc; ++j) m.set(i, nc - 1 - j, rows[i][j]);
      Echelon e = rref(m);
      std::vector<int64_t> pivot_row(nc, -1);
      for (size_t r = 0; r < e.pivots.size(); ++r) pivot_row[nc - 1 - e.pivots[r]] = static_cast<int64_t>(r);
      std::vector<int64_t> new_index(nc, -1);
      for (size_t c = 0; c < nc; ++c)
        if (pivot_row[c] < 0) {
          new_index[c] = static_cast<int64_t>(nx.paths.size());
          auto path = cur.paths[cands[c].first];
          path.push_back(cands[c].second);
          nx.paths.push_back(path);
          nx.src.push_back(cur.src[cands[c].first]);
          nx.tgt.push_back(q_.arrows[cands[c].second].target);
        }
      nx.reduce.resize(nc);
      for (size_t c = 0; c < nc; ++c) {
        if (pivot_row[c] < 0) {
          nx.reduce[c] = {{static_cast<size_t>(new_index[c]), Scalar(1)}};
        } else {
          SparseVec v;
          for (size_t c2 = 0; c2 < nc; ++c2) {
            if (c2 == c || pivot_row[c2] >= 0) continue;
            const Scalar& x = e.reduced.at(pivot_row[c], nc - 1 - c2);
            if (!x.is_zero()) v.emplace_back(static_cast<size_t>(new_index[c2]), f_.neg(x));
          }
          nx.reduce[c] = v;
        }
      }
      if (nx.paths.empty()) break;
      if (l + 1 >= cap)
        throw InfiniteDimensional("new basis paths of length " + std::to_string(l + 1) + " at cap " +
                                  std::to_string(cap));
      deg_.push_back(std::move(nx));
    }
  }

  AlgebraPtr finish() const {
    auto alg = std::make_shared<BasedAlgebra>();
    alg->field = f_;
    alg->origin = BasedAlgebra::Origin::Path;
    alg->presentation = q_;
    alg->vertex_labels = q_.vertices;
    std::vector<size_t> offset;
    for (size_t d = 0; d < deg_.size(); ++d) {
      offset.push_back(alg->basis.size());
      for (size_t b = 0; b < deg_[d].paths.size(); ++b) {
        BasisElement el;
        el.path = deg_[d].paths[b];
        el.degree = d;
        el.left = deg_[d].tgt[b];
        el.right = deg_[d].src[b];
        el.label = d == 0 ? "e" + q_.vertices[b] : path_label(q_, el.path);
        alg->basis.push_back(el);
      }
    }
    for (size_t v = 0; v < q_.vertices.size(); ++v) alg->idempotents.push_back(v);
    const size_t n = alg->basis.size();
    alg->table.assign(n * n, {});
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const auto& p = alg->basis[i];
        const auto& qq = alg->basis[j];
        if (p.right != qq.left) continue;
        SparseVec out;
        if (p.degree == 0) {
          out = {{j, Scalar(1)}};
        } else if (qq.degree == 0) {
          out = {{i, Scalar(1)}};
        } else {
          SparseVec v{{j - offset[qq.degree], Scalar(1)}};
          size_t d = qq.degree;
          for (size_t a : p.path) {
            v = extend(d++, v, a);
            if (v.empty()) break;
          }
          if (d < deg_.size())
            for (auto& [k, c] : v) out.emplace_back(offset[d] + k, c);
        }
        alg->table[i * n + j] = out;
      }
    alg->finalize();
    return alg;
  }

 private:
  const QuiverPresentation& q_;
  Field f_;
  std::vector<Degree> deg_;
};

void validate(const QuiverPresentation& q) {
  if (q.vertices.empty()) throw ParseError("quiver without vertices");
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& a = q.arrows[i];
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw ParseError("arrow '" + a.name + "' has an unknown endpoint");
    for (size_t j = 0; j < i; ++j)
      if (q.arrows[j].name == a.name) throw ParseError("duplicate arrow label '" + a.name + "'");
  }
  for (const auto& rel : q.relations) {
    if (rel.empty()) throw ParseError("empty relation");
    const size_t len = rel.front().path.size();
    size_t s = 0, t = 0;
    for (size_t k = 0; k < rel.size(); ++k) {
      const auto& p = rel[k].path;
      if (p.size() < 2) throw NonAdmissible("relation term of length " + std::to_string(p.size()));
      if (p.size() != len) throw NonHomogeneous("relation mixes path lengths");
      for (size_t x = 0; x + 1 < p.size(); ++x)
        if (q.arrows[p[x + 1]].source != q.arrows[p[x]].target)
          throw NonAdmissible("relation term is not a path");
      size_t ps = q.arrows[p.front()].source, pt = q.arrows[p.back()].target;
      if (k == 0) {
        s = ps;
        t = pt;
      } else if (ps != s || pt != t) {
        throw NonAdmissible("relation paths are not parallel");
      }
    }
  }
}

}  // namespace

AlgebraPtr build_algebra(const QuiverPresentation& q, const BuildOptions& opt) {
  validate(q);
  PathBuilder pb(q);
  pb.run(opt.cap.value_or(q.default_cap()));
  return pb.finish();
}

// ---------------------------------------------------------------- derived algebras

AlgebraPtr opposite(const AlgebraPtr& a) {
  auto o = std::make_shared<BasedAlgebra>(*a);
  o->origin = BasedAlgebra::Origin::Opposite;
  o->presentation.reset();
  const size_t n = a->dim();
  for (size_t i = 0; i < n; ++i) std::swap(o->basis[i].left, o->basis[i].right);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) o->table[i * n + j] = a->table[j * n + i];
  o->finalize();
  return o;
}

namespace {

std::vector<size_t> normalize_subset(const AlgebraPtr& a, std::vector<size_t> e) {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  if (e.empty()) throw EmptyIdempotent("empty idempotent subset");
  for (size_t v : e)
    if (v >= a->num_vertices()) throw DimError("idempotent index out of range");
  return e;
}

}  // namespace

AlgebraPtr corner(const AlgebraPtr& a, const std::vector<size_t>& e0) {
  auto e = normalize_subset(a, e0);
  if (!a->vertex_basis) throw AlgebraMismatch("corner needs a vertex basis");
  if (e.size() == a->num_vertices()) return a;
  std::vector<int64_t> vmap(a->num_vertices(), -1);
  for (size_t k = 0; k < e.size(); ++k) vmap[e[k]] = static_cast<int64_t>(k);
  std::vector<size_t> keep;
  for (size_t i = 0; i < a->dim(); ++i)
    if (vmap[a->basis[i].left] >= 0 && vmap[a->basis[i].right] >= 0) keep.push_back(i);
  std::vector<int64_t> imap(a->dim(), -1);
  for (size_t k = 0; k < keep.size(); ++k) imap[keep[k]] = static_cast<int64_t>(k);
  auto c = std::make_shared<BasedAlgebra>();
  c->field = a->field;
  c->origin = BasedAlgebra::Origin::Corner;
  for (size_t v : e) {
    c->vertex_labels.push_back(a->vertex_labels[v]);
    c->idempotents.push_back(static_cast<size_t>(imap[a->idempotents[v]]));
  }
  for (size_t i : keep) {
    BasisElement b = a->basis[i];
    b.left = static_cast<size_t>(vmap[b.left]);
    b.right = static_cast<size_t>(vmap[b.right]);
    c->basis.push_back(b);
  }
  const size_t n = keep.size();
  c->table.assign(n * n, {});
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : a->product(keep[i], keep[j])) {
        if (imap[k] < 0) throw InvariantViolation("corner not closed under products");
        c->table[i * n + j].emplace_back(static_cast<size_t>(imap[k]), v);
      }
  c->finalize();
  return c;
}

namespace {

struct IdealReduction {
  std::vector<size_t> complement;             // old indices surviving
  std::vector<std::vector<Scalar>> reduce;    // old index -> coords over complement
  size_t ideal_dim = 0;
};

IdealReduction reduce_ideal(const AlgebraPtr& a, const std::vector<size_t>& e) {
  const size_t n = a->dim();
  std::vector<bool> in_e(a->num_vertices(), false);
  for (size_t v : e) in_e[v] = true;
  // column order: non-idempotents first, idempotents last
  std::vector<size_t> order;
  for (size_t i = 0; i < n; ++i)
    if (!a->is_idempotent_index(i)) order.push_back(i);
  for (size_t i = 0; i < n; ++i)
    if (a->is_idempotent_index(i)) order.push_back(i);
  std::vector<size_t> pos(n);
  for (size_t k = 0; k < n; ++k) pos[order[k]] = k;
  std::vector<std::vector<Scalar>> rows;
  for (size_t i = 0; i < n; ++i) {
    if (!in_e[a->basis[i].right]) continue;
    for (size_t j = 0; j < n; ++j) {
      if (a->basis[j].left != a->basis[i].right) continue;
      const auto& pr = a->product(i, j);
      if (pr.empty()) continue;
      std::vector<Scalar> row(n);
      for (const auto& [k, v] : pr) row[pos[k]] = v;
      rows.push_back(std::move(row));
    }
  }
  Mat m(a->field, rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  Echelon ech = rref(m);
  std::vector<int64_t> prow(n, -1);
  for (size_t r = 0; r < ech.pivots.size(); ++r) prow[order[ech.pivots[r]]] = static_cast<int64_t>(r);
  IdealReduction out;
  out.ideal_dim = ech.pivots.size();
  std::vector<int64_t> cidx(n, -1);
  for (size_t i = 0; i < n; ++i)
    if (prow[i] < 0) {
      cidx[i] = static_cast<int64_t>(out.complement.size());
      out.complement.push_back(i);
    }
  out.reduce.assign(n, std::vector<Scalar>(out.complement.size()));
  for (size_t i = 0; i < n; ++i) {
    if (prow[i] < 0) {
      out.reduce[i][cidx[i]] = Scalar(1);
    } else {
      for (size_t c : out.complement) {
        const Scalar& x = ech.reduced.at(prow[i], pos[c]);
        if (!x.is_zero()) out.reduce[i][cidx[c]] = a->field.neg(x);
      }
    }
  }
  return out;
}

}  // namespace

size_t ideal_dim(const AlgebraPtr& a, const std::vector<size_t>& e) {
  return reduce_ideal(a, normalize_subset(a, e)).ideal_dim;
}

AlgebraPtr quotient_by_idempotent_ideal(const AlgebraPtr& a, const std::vector<size_t>& e0) {
  auto e = normalize_subset(a, e0);
  if (!a->vertex_basis) throw AlgebraMismatch("quotient needs a vertex basis");
  if (e.size() == a->num_vertices()) throw TrivialQuotient("AeA = A");
  IdealReduction red = reduce_ideal(a, e);
  if (red.complement.empty()) throw TrivialQuotient("AeA = A");
  std::vector<int64_t> vmap(a->num_vertices(), -1);
  size_t nv = 0;
  for (size_t v = 0; v < a->num_vertices(); ++v)
    if (!std::binary_search(e.begin(), e.end(), v)) vmap[v] = static_cast<int64_t>(nv++);
  auto b = std::make_shared<BasedAlgebra>();
  b->field = a->field;
  b->origin = BasedAlgebra::Origin::Quotient;
  const size_t n = red.complement.size();
  std::vector<int64_t> cpos(a->dim(), -1);
  for (size_t k = 0; k < n; ++k) cpos[red.complement[k]] = static_cast<int64_t>(k);
  for (size_t v = 0; v < a->num_vertices(); ++v) {
    if (vmap[v] < 0) continue;
    b->vertex_labels.push_back(a->vertex_labels[v]);
    int64_t p = cpos[a->idempotents[v]];
    if (p < 0) throw InvariantViolation("vertex idempotent fell into AeA");
    b->idempotents.push_back(static_cast<size_t>(p));
  }
  for (size_t i : red.complement) {
    BasisElement el = a->basis[i];
    if (vmap[el.left] < 0 || vmap[el.right] < 0) throw InvariantViolation("quotient basis touches e");
    el.left = static_cast<size_t>(vmap[el.left]);
    el.right = static_cast<size_t>(vmap[el.right]);
    b->basis.push_back(el);
  }
  b->table.assign(n * n, {});
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<Scalar> acc(n);
      for (const auto& [k, v] : a->product(red.complement[i], red.complement[j]))
        for (size_t t = 0; t < n; ++t)
          if (!red.reduce[k][t].is_zero()) acc[t] = a->field.add(acc[t], a->field.mul(v, red.reduce[k][t]));
      for (size_t t = 0; t < n; ++t)
        if (!acc[t].is_zero()) b->table[i * n + j].emplace_back(t, acc[t]);
    }
  b->finalize();
  return b;
}

std::vector<size_t> corner_embedding(const AlgebraPtr& a, const std::vector<size_t>& e0) {
  auto e = normalize_subset(a, e0);
  std::vector<bool> in(a->num_vertices(), false);
  for (size_t v : e) in[v] = true;
  std::vector<size_t> keep;
  for (size_t i = 0; i < a->dim(); ++i)
    if (in[a->basis[i].left] && in[a->basis[i].right]) keep.push_back(i);
  return keep;
}

Mat quotient_projection(const AlgebraPtr& a, const std::vector<size_t>& e0) {
  auto e = normalize_subset(a, e0);
  IdealReduction red = reduce_ideal(a, e);
  Mat p(a->field, red.complement.size(), a->dim());
  for (size_t i = 0; i < a->dim(); ++i)
    for (size_t t = 0; t < red.complement.size(); ++t) p.set(t, i, red.reduce[i][t]);
  return p;
}

std::vector<size_t> quotient_vertices(const AlgebraPtr& a, const std::vector<size_t>& e0) {
  auto e = normalize_subset(a, e0);
  std::vector<size_t> out;
  for (size_t v = 0; v < a->num_vertices(); ++v)
    if (!std::binary_search(e.begin(), e.end(), v)) out.push_back(v);
  return out;
}

AlgebraPtr make_endomorphism_algebra(Field f, std::vector<std::string> labels, std::vector<SparseVec> table) {
  auto e = std::make_shared<BasedAlgebra>();
  e->field = f;
  e->origin = BasedAlgebra::Origin::Endomorphism;
  e->vertex_basis = false;
  e->vertex_labels = {"1"};
  e->idempotents = {0};
  for (auto& l : labels) {
    BasisElement b;
    b.label = l;
    e->basis.push_back(b);
  }
  if (table.size() != labels.size() * labels.size()) throw DimError("table size mismatch");
  e->table = std::move(table);
  e->finalize();
  e->radical_cache = radical(e);
  return e;
}

// ---------------------------------------------------------------- radical and invariants

namespace {

Mat span_basis(const Field& f, size_t n, const std::vector<std::vector<Scalar>>& vecs) {
  if (vecs.empty()) return Mat(f, n, 0);
  Mat m(f, vecs.size(), n);
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = 0; j < n; ++j) m.set(i, j, vecs[i][j]);
  Echelon e = rref(m);
  return e.reduced.transpose();
}

std::vector<Scalar> col_vec(const Mat& m, size_t j) {
  std::vector<Scalar> v(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

// left regular matrix of an arbitrary element
Mat left_regular(const AlgebraPtr& a, const std::vector<Scalar>& x) {
  Mat m(a->field, a->dim(), a->dim());
  for (size_t i = 0; i < a->dim(); ++i) {
    if (x[i].is_zero()) continue;
    m = m + a->left_mult(i).scaled(x[i]);
  }
  return m;
}

int64_t ipow(int64_t b, size_t e) {
  int64_t r = 1;
  while (e--) r *= b;
  return r;
}

// (Tr(M~^{p^i}) / p^i) mod p with the matrix lifted to [0,p)
int64_t ptrace(const Mat& m, int64_t p, size_t i) {
  const size_t n = m.rows();
  const int64_t mod = ipow(p, i + 1);
  std::vector<__int128> a(n * n), r(n * n), t(n * n);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) a[x * n + y] = m.at(x, y).small_num();
  int64_t e = ipow(p, i);
  for (size_t x = 0; x < n; ++x) r[x * n + x] = 1;
  auto mulmat = [&](const std::vector<__int128>& u, const std::vector<__int128>& v) {
    std::vector<__int128> w(n * n);
    for (size_t x = 0; x < n; ++x)
      for (size_t k = 0; k < n; ++k) {
        if (!u[x * n + k]) continue;
        for (size_t y = 0; y < n; ++y) w[x * n + y] = (w[x * n + y] + u[x * n + k] * v[k * n + y]) % mod;
      }
    return w;
  };
  while (e > 0) {
    if (e & 1) r = mulmat(r, a);
    a = mulmat(a, a);
    e >>= 1;
  }
  __int128 tr = 0;
  for (size_t x = 0; x < n; ++x) tr = (tr + r[x * n + x]) % mod;
  int64_t pi = ipow(p, i);
  if (tr % pi != 0) throw InvariantViolation("p-trace not divisible");
  return static_cast<int64_t>((tr / pi) % p);
}

Mat trace_radical(const AlgebraPtr& a) {
  const size_t n = a->dim();
  const Field& f = a->field;
  if (!f.is_finite()) {
    Mat t(f, n, n);
    std::vector<Mat> L;
    for (size_t i = 0; i < n; ++i) L.push_back(a->left_mult(i));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Mat pr = L[i] * L[j];
        Scalar tr;
        for (size_t k = 0; k < n; ++k) tr = f.add(tr, pr.at(k, k));
        t.set(i, j, tr);
      }
    return kernel_basis(t.transpose());
  }
  const int64_t p = f.p;
  size_t l = 0;
  while (ipow(p, l + 1) <= static_cast<int64_t>(n)) ++l;
  Mat cur = Mat::identity(f, n);
  for (size_t i = 0; i <= l && cur.cols() > 0; ++i) {
    Mat g(f, n, cur.cols());
    for (size_t k = 0; k < cur.cols(); ++k) {
      auto x = col_vec(cur, k);
      for (size_t j = 0; j < n; ++j) {
        std::vector<Scalar> bj(n);
        bj[j] = Scalar(1);
        auto xy = a->mul(x, bj);
        g.set(j, k, f.from_int(ptrace(left_regular(a, xy), p, i)));
      }
    }
    Mat ker = kernel_basis(g);
    cur = cur * ker;
  }
  return cur;
}

}  // namespace

Mat radical(const AlgebraPtr& a) {
  if (a->vertex_basis) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < a->dim(); ++i)
      if (!a->is_idempotent_index(i)) idx.push_back(i);
    return Mat::identity(a->field, a->dim()).columns(idx);
  }
  if (a->radical_cache) return *a->radical_cache;
  return trace_radical(a);
}

std::vector<size_t> loewy_vector(const AlgebraPtr& a) {
  const size_t n = a->dim();
  Mat j = radical(a);
  std::vector<size_t> out{n - j.cols()};
  Mat cur = j;
  while (cur.cols() > 0) {
    std::vector<std::vector<Scalar>> prods;
    for (size_t x = 0; x < cur.cols(); ++x)
      for (size_t y = 0; y < j.cols(); ++y) prods.push_back(a->mul(col_vec(cur, x), col_vec(j, y)));
    Mat next = span_basis(a->field, n, prods);
    out.push_back(cur.cols() - next.cols());
    if (next.cols() == cur.cols()) throw InvariantViolation("radical is not nilpotent");
    cur = next;
  }
  return out;
}

size_t center_dim(const AlgebraPtr& a) {
  const size_t n = a->dim();
  Mat m(a->field, n * n, n);
  for (size_t j = 0; j < n; ++j) {
    Mat d = a->right_mult(j) - a->left_mult(j);
    m.set_block(j * n, 0, d);
  }
  return n - rank(m);
}

bool is_commutative(const AlgebraPtr& a) {
  const size_t n = a->dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      auto x = a->product(i, j), y = a->product(j, i);
      std::sort(x.begin(), x.end(), [](auto& u, auto& v) { return u.first < v.first; });
      std::sort(y.begin(), y.end(), [](auto& u, auto& v) { return u.first < v.first; });
      if (x != y) return false;
    }
  return true;
}

size_t num_simples(const AlgebraPtr& a) {
  if (a->vertex_basis) return a->num_vertices();
  const size_t n = a->dim();
  Mat j = radical(a);
  Echelon ej = rref(j.transpose());
  std::vector<bool> piv(n, false);
  for (size_t c : ej.pivots) piv[c] = true;
  std::vector<size_t> comp;
  for (size_t i = 0; i < n; ++i)
    if (!piv[i]) comp.push_back(i);
  auto reduce = [&](std::vector<Scalar> v) {
    for (size_t r = 0; r < ej.pivots.size(); ++r) {
      Scalar c = v[ej.pivots[r]];
      if (c.is_zero()) continue;
      for (size_t k = 0; k < n; ++k) v[k] = a->field.sub(v[k], a->field.mul(c, ej.reduced.at(r, k)));
    }
    std::vector<Scalar> out;
    for (size_t i : comp) out.push_back(v[i]);
    return out;
  };
  const size_t m = comp.size();
  Mat sys(a->field, m * m, m);
  for (size_t k = 0; k < m; ++k)
    for (size_t jj = 0; jj < m; ++jj) {
      std::vector<Scalar> bk(n), bj(n);
      bk[comp[k]] = Scalar(1);
      bj[comp[jj]] = Scalar(1);
      auto x = a->mul(bk, bj), y = a->mul(bj, bk);
      std::vector<Scalar> d(n);
      for (size_t t = 0; t < n; ++t) d[t] = a->field.sub(x[t], y[t]);
      auto rd = reduce(d);
      for (size_t t = 0; t < m; ++t) sys.set(jj * m + t, k, rd[t]);
    }
  return m - rank(sys);
}

std::vector<std::vector<int64_t>> cartan_matrix(const AlgebraPtr& a) {
  if (!a->vertex_basis) return {};
  const size_t r = a->num_vertices();
  std::vector<std::vector<int64_t>> c(r, std::vector<int64_t>(r, 0));
  for (const auto& b : a->basis) c[b.left][b.right] += 1;
  return c;
}

TriBool is_local(const AlgebraPtr& a, uint64_t seed) {
  const size_t n = a->dim();
  if (a->vertex_basis) {
    if (a->num_vertices() == 1) return TriBool::yes("one primitive idempotent, A/J = k");
    return TriBool::no(std::to_string(a->num_vertices()) + " orthogonal primitive idempotents");
  }
  Mat j = radical(a);
  if (n - j.cols() == 1) return TriBool::yes("dim A/J = 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Scalar>> trials;
  for (size_t i = 0; i < n; ++i) {
    std::vector<Scalar> x(n);
    x[i] = Scalar(1);
    trials.push_back(x);
  }
  for (int t = 0; t < 20; ++t) {
    std::vector<Scalar> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a->field.from_int(static_cast<int64_t>(rng() % 7) - 3);
    trials.push_back(x);
  }
  auto u = a->unit();
  for (const auto& x : trials) {
    Mat l = left_regular(a, x);
    Mat pw = Mat::identity(a->field, n);
    for (size_t k = 0; k < n; ++k) pw = pw * l;
    size_t rk = rank(pw);
    if (rk == 0 || rk == n) continue;
    Mat im = rref(pw.transpose()).reduced.transpose();
    Mat ker = kernel_basis(pw);
    Mat uvec(a->field, n, 1);
    for (size_t i = 0; i < n; ++i) uvec.set(i, 0, u[i]);
    auto sol = solve(hstack(im, ker), uvec);
    if (!sol) continue;
    Mat e = im * sol->block(0, 0, im.cols(), 1);
    std::vector<Scalar> ev = col_vec(e, 0);
    if (a->mul(ev, ev) != ev) continue;
    bool zero = true, one = true;
    for (size_t i = 0; i < n; ++i) {
      if (!ev[i].is_zero()) zero = false;
      if (ev[i] != u[i]) one = false;
    }
    if (!zero && !one) return TriBool::no("nontrivial idempotent " + a->element_str(ev));
  }
  return TriBool::unknown("dim A/J = " + std::to_string(n - j.cols()) + ", no idempotent exhibited");
}

bool check_associative(const AlgebraPtr& a) {
  const size_t n = a->dim();
  const Field& f = a->field;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        std::map<size_t, Scalar> lhs, rhs;
        for (const auto& [t, c] : a->product(i, j))
          for (const auto& [s, d] : a->product(t, k)) lhs[s] = f.add(lhs[s], f.mul(c, d));
        for (const auto& [t, c] : a->product(j, k))
          for (const auto& [s, d] : a->product(i, t)) rhs[s] = f.add(rhs[s], f.mul(c, d));
        for (auto it = lhs.begin(); it != lhs.end();)
          it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
        for (auto it = rhs.begin(); it != rhs.end();)
          it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
        if (lhs != rhs) return false;
      }
  return true;
}

namespace {

std::vector<std::vector<int64_t>> canonical_cartan(const std::vector<std::vector<int64_t>>& c) {
  const size_t r = c.size();
  if (r == 0) return c;
  std::vector<size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int64_t>> best;
  do {
    std::vector<std::vector<int64_t>> m(r, std::vector<int64_t>(r));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) m[i][j] = c[perm[i]][perm[j]];
    if (best.empty() || m < best) best = m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

AlgebraFingerprint fingerprint(const AlgebraPtr& a) {
  AlgebraFingerprint fp;
  fp.dim = a->dim();
  fp.loewy = loewy_vector(a);
  fp.r = num_simples(a);
  fp.commutative = is_commutative(a);
  fp.center = center_dim(a);
  fp.cartan = canonical_cartan(cartan_matrix(a));
  fp.local = is_local(a).name();
  return fp;
}

std::string AlgebraFingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " loewy=[";
  for (size_t i = 0; i < loewy.size(); ++i) os << (i ? "," : "") << loewy[i];
  os << "] r=" << r << " commutative=" << (commutative ? "yes" : "no") << " center=" << center
     << " local=" << local;
  if (!cartan.empty()) {
    os << " cartan=[";
    for (size_t i = 0; i < cartan.size(); ++i) {
      os << (i ? ",[" : "[");
      for (size_t j = 0; j < cartan[i].size(); ++j) os << (j ? "," : "") << cartan[i][j];
      os << "]";
    }
    os << "]";
  }
  return os.str();
}

}  // namespace recolle
