#include "recolle/fdmod.hpp"

#include <algorithm>
#include <random>

namespace recolle {

FDModule::FDModule(AlgebraPtr a, std::vector<Mat> act, std::vector<size_t> vert)
    : algebra(std::move(a)), action(std::move(act)), vertex(std::move(vert)) {
  if (action.size() != algebra->dim()) throw DimError("one action matrix per basis element expected");
  for (const auto& m : action)
    if (m.rows() != vertex.size() || m.cols() != vertex.size()) throw DimError("action matrix has wrong shape");
}

std::vector<size_t> FDModule::dim_vector() const {
  std::vector<size_t> d(algebra->num_vertices(), 0);
  for (size_t v : vertex) ++d[v];
  return d;
}

std::vector<size_t> FDModule::indices_at(size_t v) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < vertex.size(); ++i)
    if (vertex[i] == v) out.push_back(i);
  return out;
}

Mat FDModule::act(const AlgElem& x) const {
  Mat r(field(), dim(), dim());
  for (size_t b = 0; b < x.size(); ++b)
    if (!x[b].is_zero()) r = r + action[b].scaled(x[b]);
  return r;
}

bool FDModule::check_module_axioms() const {
  const auto& a = *algebra;
  if (!(act(a.unit()) == Mat::identity(field(), dim()))) return false;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      Mat lhs(field(), dim(), dim());
      for (const auto& [k, c] : a.product(i, j)) lhs = lhs + action[k].scaled(c);
      if (!(lhs == action[j] * action[i])) return false;
    }
  return true;
}

namespace {

void same_algebra(const FDModule& m, const FDModule& n) {
  if (m.algebra == n.algebra) return;
  if (m.algebra->dim() != n.algebra->dim() || m.algebra->field != n.algebra->field ||
      m.algebra->num_vertices() != n.algebra->num_vertices())
    throw AlgebraMismatch("modules over different algebras");
  for (size_t k = 0; k < m.algebra->table.size(); ++k) {
    const auto& x = m.algebra->table[k];
    const auto& y = n.algebra->table[k];
    if (x.size() != y.size()) throw AlgebraMismatch("modules over different algebras");
    for (size_t t = 0; t < x.size(); ++t)
      if (x[t].first != y[t].first || x[t].second != y[t].second)
        throw AlgebraMismatch("modules over different algebras");
  }
}

// left inverse of a full-column-rank matrix
Mat left_inverse(const Mat& s) {
  auto rows = independent_columns(s.transpose());
  Mat sq(s.field(), rows.size(), s.cols());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < s.cols(); ++j) sq.set(i, j, s.at(rows[i], j));
  auto inv = inverse(sq);
  if (!inv) throw InvariantViolation("left_inverse of a rank-deficient matrix");
  Mat sel(s.field(), rows.size(), s.rows());
  for (size_t i = 0; i < rows.size(); ++i) sel.set(i, rows[i], Scalar(1));
  return *inv * sel;
}

// vertex-adapted basis of an invariant subspace, vertex by vertex
std::pair<Mat, std::vector<size_t>> adapted_basis(const FDModule& m, const Mat& span) {
  const auto& a = *m.algebra;
  Mat out(m.field(), m.dim(), 0);
  std::vector<size_t> vert;
  for (size_t v = 0; v < a.num_vertices(); ++v) {
    Mat proj = a.vertex_basis ? m.action[a.idempotents[v]] * span : span;
    auto idx = independent_columns(proj);
    out = hstack(out, proj.columns(idx));
    vert.insert(vert.end(), idx.size(), v);
    if (!a.vertex_basis) break;
  }
  return {out, vert};
}

Mat closure(const FDModule& m, const Mat& span) {
  const auto& a = *m.algebra;
  Mat s = span.columns(independent_columns(span));
  for (;;) {
    Mat grown = s;
    for (size_t g : a.generators)
      if (!a.is_idempotent_index(g) || !a.vertex_basis) grown = hstack(grown, m.action[g] * s);
    if (a.vertex_basis)
      for (size_t e : a.idempotents) grown = hstack(grown, m.action[e] * s);
    auto idx = independent_columns(grown);
    if (idx.size() == s.cols()) return s;
    s = grown.columns(idx);
  }
}

FDModule induced_on(const FDModule& m, const Mat& basis, const std::vector<size_t>& vert) {
  Mat li = left_inverse(basis);
  std::vector<Mat> act;
  act.reserve(m.action.size());
  for (const auto& x : m.action) act.push_back(li * (x * basis));
  return FDModule(m.algebra, std::move(act), vert);
}

}  // namespace

FDModule zero_module(const AlgebraPtr& a) {
  return FDModule(a, std::vector<Mat>(a->dim(), Mat(a->field, 0, 0)), {});
}

FDModule projective_module(const AlgebraPtr& a, size_t v) {
  if (v >= a->num_vertices()) throw DimError("vertex out of range");
  const auto& idx = a->by_left[v];
  const size_t d = idx.size();
  std::vector<long> pos(a->dim(), -1);
  for (size_t k = 0; k < d; ++k) pos[idx[k]] = static_cast<long>(k);
  std::vector<Mat> act(a->dim(), Mat(a->field, d, d));
  for (size_t b = 0; b < a->dim(); ++b)
    for (size_t k = 0; k < d; ++k)
      for (const auto& [t, c] : a->product(idx[k], b)) {
        if (pos[t] < 0) throw InvariantViolation("e_v A not closed under right multiplication");
        act[b].add_to(static_cast<size_t>(pos[t]), k, c);
      }
  std::vector<size_t> vert(d, 0);
  if (a->vertex_basis)
    for (size_t k = 0; k < d; ++k) vert[k] = a->basis[idx[k]].right;
  return FDModule(a, std::move(act), std::move(vert));
}

FDModule simple_module(const AlgebraPtr& a, size_t v) {
  if (v >= a->num_vertices()) throw DimError("vertex out of range");
  if (a->vertex_basis) {
    std::vector<Mat> act(a->dim(), Mat(a->field, 1, 1));
    act[a->idempotents[v]].set(0, 0, Scalar(1));
    return FDModule(a, std::move(act), {v});
  }
  FDModule p = projective_module(a, v);
  return quotient(p, radical_submodule_basis(p));
}

FDModule direct_sum(const FDModule& m, const FDModule& n) {
  same_algebra(m, n);
  const size_t d = m.dim() + n.dim();
  std::vector<Mat> act;
  act.reserve(m.action.size());
  for (size_t b = 0; b < m.action.size(); ++b) {
    Mat x(m.field(), d, d);
    x.set_block(0, 0, m.action[b]);
    x.set_block(m.dim(), m.dim(), n.action[b]);
    act.push_back(std::move(x));
  }
  auto vert = m.vertex;
  vert.insert(vert.end(), n.vertex.begin(), n.vertex.end());
  return FDModule(m.algebra, std::move(act), std::move(vert));
}

FDModule free_module(const AlgebraPtr& a, const std::vector<size_t>& vertices) {
  FDModule out = zero_module(a);
  for (size_t v : vertices) out = direct_sum(out, projective_module(a, v));
  return out;
}

FDModule regular_module(const AlgebraPtr& a) {
  std::vector<size_t> all;
  for (size_t u = 0; u < a->num_vertices(); ++u) all.push_back(u);
  return free_module(a, all);
}

FDModule ideal_quotient_module(const AlgebraPtr& a, const std::vector<size_t>& e) {
  if (!a->vertex_basis) throw AlgebraMismatch("idempotent quotient needs a vertex basis");
  FDModule reg = regular_module(a);
  // AeA is generated by the basis elements ending at e
  Mat span(a->field, reg.dim(), 0);
  size_t off = 0;
  for (size_t u = 0; u < a->num_vertices(); ++u) {
    const auto& idx = a->by_left[u];
    for (size_t k = 0; k < idx.size(); ++k)
      if (std::find(e.begin(), e.end(), a->basis[idx[k]].right) != e.end()) {
        Mat c(a->field, reg.dim(), 1);
        c.set(off + k, 0, Scalar(1));
        span = hstack(span, c);
      }
    off += idx.size();
  }
  return quotient(reg, span);
}

FDModule submodule(const FDModule& m, const Mat& span, Mat* inclusion) {
  if (span.rows() != m.dim()) throw DimError("span has wrong row count");
  auto [basis, vert] = adapted_basis(m, closure(m, span));
  if (inclusion) *inclusion = basis;
  if (basis.cols() == 0) return zero_module(m.algebra);
  return induced_on(m, basis, vert);
}

FDModule quotient(const FDModule& m, const Mat& span, Mat* projection) {
  if (span.rows() != m.dim()) throw DimError("span has wrong row count");
  const auto& a = *m.algebra;
  Mat w = closure(m, span);
  Mat full = w;
  std::vector<size_t> keep;
  std::vector<size_t> vert;
  size_t rk = w.cols();
  for (size_t v = 0; v < a.num_vertices(); ++v)
    for (size_t i = 0; i < m.dim(); ++i) {
      if (m.vertex[i] != v) continue;
      Mat e(m.field(), m.dim(), 1);
      e.set(i, 0, Scalar(1));
      Mat trial = hstack(full, e);
      size_t nr = rank(trial);
      if (nr > rk) {
        full = trial;
        rk = nr;
        keep.push_back(i);
        vert.push_back(v);
      }
    }
  auto inv = inverse(full);
  if (!inv) throw InvariantViolation("quotient complement is not a basis");
  Mat proj = inv->block(w.cols(), 0, keep.size(), m.dim());
  if (projection) *projection = proj;
  Mat sec = Mat::identity(m.field(), m.dim()).columns(keep);
  std::vector<Mat> act;
  act.reserve(m.action.size());
  for (const auto& x : m.action) act.push_back(proj * (x * sec));
  return FDModule(m.algebra, std::move(act), std::move(vert));
}

FDModule dual(const FDModule& m, const AlgebraPtr& target) {
  if (target->dim() != m.algebra->dim() || target->field != m.field())
    throw AlgebraMismatch("dual needs the opposite algebra");
  std::vector<Mat> act;
  act.reserve(m.action.size());
  for (const auto& x : m.action) act.push_back(x.transpose());
  return FDModule(target, std::move(act), m.vertex);
}

FDModule restrict_to(const FDModule& m, const AlgebraPtr& target) {
  FDModule out = m;
  out.algebra = target;
  same_algebra(m, out);
  return out;
}

bool is_hom(const FDModule& m, const FDModule& n, const Mat& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (size_t g : m.algebra->generators)
    if (!(f * m.action[g] == n.action[g] * f)) return false;
  return true;
}

std::vector<ModuleHom> hom_space(const FDModule& m, const FDModule& n) {
  same_algebra(m, n);
  const auto& a = *m.algebra;
  const Field& f = m.field();
  // unknown F(i,j) for target index i, source index j at the same vertex
  std::vector<long> var(n.dim() * m.dim(), -1);
  std::vector<std::pair<size_t, size_t>> pos;
  for (size_t i = 0; i < n.dim(); ++i)
    for (size_t j = 0; j < m.dim(); ++j)
      if (n.vertex[i] == m.vertex[j]) {
        var[i * m.dim() + j] = static_cast<long>(pos.size());
        pos.emplace_back(i, j);
      }
  const size_t nv = pos.size();
  std::vector<ModuleHom> out;
  if (nv == 0) return out;

  std::vector<std::vector<Scalar>> rows;
  Mat reduced(f, 0, nv);
  auto flush = [&]() {
    Mat block(f, rows.size(), nv);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < nv; ++c)
        if (!rows[r][c].is_zero()) block.set(r, c, rows[r][c]);
    reduced = rref(vstack(reduced, block)).reduced;
    rows.clear();
  };
  for (size_t g : a.generators) {
    if (a.vertex_basis && a.is_idempotent_index(g)) continue;
    const Mat& am = m.action[g];
    const Mat& an = n.action[g];
    // (F am - an F)(i,k) = sum_j F(i,j) am(j,k) - sum_j an(i,j) F(j,k)
    for (size_t i = 0; i < n.dim(); ++i)
      for (size_t k = 0; k < m.dim(); ++k) {
        std::vector<Scalar> row(nv);
        bool nz = false;
        for (size_t j = 0; j < m.dim(); ++j) {
          long x = var[i * m.dim() + j];
          if (x < 0 || am.at(j, k).is_zero()) continue;
          row[x] = f.add(row[x], am.at(j, k));
          nz = true;
        }
        for (size_t j = 0; j < n.dim(); ++j) {
          long x = var[j * m.dim() + k];
          if (x < 0 || an.at(i, j).is_zero()) continue;
          row[x] = f.sub(row[x], an.at(i, j));
          nz = true;
        }
        if (nz) rows.push_back(std::move(row));
        if (rows.size() >= 2 * nv + 16) flush();
      }
  }
  flush();
  Mat ker = kernel_basis(reduced);
  for (size_t t = 0; t < ker.cols(); ++t) {
    Mat h(f, n.dim(), m.dim());
    for (size_t x = 0; x < nv; ++x)
      if (!ker.at(x, t).is_zero()) h.set(pos[x].first, pos[x].second, ker.at(x, t));
    out.push_back({std::move(h)});
  }
  return out;
}

Mat radical_submodule_basis(const FDModule& m) {
  const auto& a = *m.algebra;
  Mat span(m.field(), m.dim(), 0);
  if (a.vertex_basis) {
    for (size_t b = 0; b < a.dim(); ++b)
      if (!a.is_idempotent_index(b)) span = hstack(span, m.action[b]);
  } else {
    Mat j = radical(m.algebra);
    for (size_t c = 0; c < j.cols(); ++c) {
      AlgElem x(a.dim());
      for (size_t r = 0; r < a.dim(); ++r) x[r] = j.at(r, c);
      span = hstack(span, m.act(x));
    }
  }
  return span.columns(independent_columns(span));
}

std::vector<std::vector<size_t>> radical_filtration(const FDModule& m) {
  const auto& a = *m.algebra;
  std::vector<Mat> rad_ops;
  if (a.vertex_basis) {
    for (size_t b = 0; b < a.dim(); ++b)
      if (!a.is_idempotent_index(b)) rad_ops.push_back(m.action[b]);
  } else {
    Mat j = radical(m.algebra);
    for (size_t c = 0; c < j.cols(); ++c) {
      AlgElem x(a.dim());
      for (size_t r = 0; r < a.dim(); ++r) x[r] = j.at(r, c);
      rad_ops.push_back(m.act(x));
    }
  }
  auto per_vertex = [&](const Mat& w) {
    std::vector<size_t> d(a.num_vertices(), 0);
    if (!a.vertex_basis) {
      d[0] = w.cols();
      return d;
    }
    for (size_t v = 0; v < a.num_vertices(); ++v) d[v] = rank(m.action[a.idempotents[v]] * w);
    return d;
  };
  std::vector<std::vector<size_t>> layers;
  Mat w = Mat::identity(m.field(), m.dim());
  auto cur = per_vertex(w);
  while (w.cols() > 0) {
    Mat next(m.field(), m.dim(), 0);
    for (const auto& op : rad_ops) next = hstack(next, op * w);
    next = next.columns(independent_columns(next));
    auto nd = per_vertex(next);
    std::vector<size_t> layer(a.num_vertices());
    for (size_t v = 0; v < layer.size(); ++v) layer[v] = cur[v] - nd[v];
    layers.push_back(layer);
    w = next;
    cur = nd;
  }
  return layers;
}

std::vector<size_t> top_vector(const FDModule& m) {
  auto l = radical_filtration(m);
  if (l.empty()) return std::vector<size_t>(m.algebra->num_vertices(), 0);
  return l.front();
}

namespace {

Mat combine(const std::vector<ModuleHom>& basis, const std::vector<Scalar>& c, const Field& f, size_t r,
            size_t k) {
  Mat out(f, r, k);
  for (size_t t = 0; t < basis.size(); ++t)
    if (!c[t].is_zero()) out = out + basis[t].matrix.scaled(c[t]);
  return out;
}

IsoResult found(const Mat& iso) {
  auto inv = inverse(iso);
  return {TriBool::yes("invertible homomorphism exhibited"), iso, inv};
}

}  // namespace

IsoResult is_isomorphic(const FDModule& m, const FDModule& n, uint64_t seed, size_t samples) {
  same_algebra(m, n);
  const Field& f = m.field();
  if (m.dim() != n.dim()) return {TriBool::no("dimensions differ"), {}, {}};
  if (m.dim_vector() != n.dim_vector()) return {TriBool::no("dimension vectors differ"), {}, {}};
  if (m.dim() == 0) return found(Mat(f, 0, 0));
  if (radical_filtration(m) != radical_filtration(n)) return {TriBool::no("radical layers differ"), {}, {}};
  auto h = hom_space(m, n);
  if (h.empty()) return {TriBool::no("Hom(m,n) = 0"), {}, {}};
  const size_t d = m.dim();
  if (hom_space(m, m).size() != h.size() || hom_space(n, n).size() != h.size() ||
      hom_space(n, m).size() != h.size())
    return {TriBool::no("Hom dimensions between m and n are not balanced"), {}, {}};
  for (const auto& x : h)
    if (rank(x.matrix) == d) return found(x.matrix);

  std::mt19937_64 rng(seed);
  std::vector<Scalar> c(h.size());
  for (size_t s = 0; s < samples; ++s) {
    for (auto& x : c) {
      if (f.is_finite())
        x = Scalar(static_cast<int64_t>(rng() % static_cast<uint64_t>(f.p)));
      else
        x = Scalar(static_cast<int64_t>(rng() % 2001) - 1000);
    }
    Mat t = combine(h, c, f, d, d);
    if (rank(t) == d) return found(t);
  }
  if (f.is_finite()) {
    // exhaustive when the whole Hom space is small
    long double total = 1;
    for (size_t i = 0; i < h.size(); ++i) total *= static_cast<long double>(f.p);
    if (total <= 65536.0L) {
      const uint64_t lim = static_cast<uint64_t>(total);
      for (uint64_t code = 1; code < lim; ++code) {
        uint64_t x = code;
        for (auto& ci : c) {
          ci = Scalar(static_cast<int64_t>(x % static_cast<uint64_t>(f.p)));
          x /= static_cast<uint64_t>(f.p);
        }
        Mat t = combine(h, c, f, d, d);
        if (rank(t) == d) return found(t);
      }
      return {TriBool::no("exhaustive search: no invertible homomorphism"), {}, {}};
    }
  }
  return {TriBool::unknown("no invertible homomorphism among " + std::to_string(samples) + " samples"), {}, {}};
}

}  // namespace recolle
