#include "recolle/homology.hpp"

namespace recolle {

std::string PdStatus::str() const {
  switch (kind) {
    case Kind::Finite:
      return "Finite(" + std::to_string(n) + ")";
    case Kind::Periodic:
      return "Periodic(" + std::to_string(pre) + "," + std::to_string(period) + ")";
    default:
      return "DepthExceeded(" + std::to_string(n) + ")";
  }
}

std::string GlDimStatus::str() const {
  if (kind == Kind::Finite) return "Finite(" + std::to_string(n) + ")";
  return kind == Kind::Infinite ? "Infinite" : "Unknown";
}

size_t default_depth(const AlgebraPtr& a) { return 2 * a->dim() + 4; }

namespace {

size_t basis_vertex(const AlgebraPtr& a, size_t b) { return a->vertex_basis ? a->basis[b].right : 0; }

Mat unit_column(const Field& f, size_t n, size_t i) {
  Mat c(f, n, 1);
  c.set(i, 0, Scalar(1));
  return c;
}

// entries of a preimage of y under lin : free(verts) -> V, restricted to free(verts) e_u
std::optional<std::vector<AlgElem>> preimage_at(const AlgebraPtr& a, const std::vector<size_t>& verts,
                                                const Mat& lin, const Mat& y, size_t u) {
  auto off = free_offsets(a, verts);
  std::vector<size_t> cols;
  for (size_t i = 0; i < verts.size(); ++i) {
    const auto& idx = a->by_left[verts[i]];
    for (size_t k = 0; k < idx.size(); ++k)
      if (basis_vertex(a, idx[k]) == u) cols.push_back(off[i] + k);
  }
  std::vector<AlgElem> out(verts.size(), AlgElem(a->dim()));
  if (y.is_zero()) return out;
  if (cols.empty()) return std::nullopt;
  auto z = solve(lin.columns(cols), y);
  if (!z) return std::nullopt;
  Mat full(a->field, lin.cols(), 1);
  for (size_t t = 0; t < cols.size(); ++t) full.set(cols[t], 0, z->at(t, 0));
  for (size_t i = 0; i < verts.size(); ++i) out[i] = element_from_summand(a, verts[i], full, off[i]);
  return out;
}

Mat generator_column(const AlgebraPtr& a, const std::vector<size_t>& verts, size_t j) {
  auto off = free_offsets(a, verts);
  return unit_column(a->field, free_dim(a, verts), off[j] + idempotent_position(a, verts[j]));
}

}  // namespace

ProjectiveCover projective_cover(const FDModule& m) {
  if (m.dim() == 0) throw ZeroModule("projective cover of the zero module");
  const auto& a = m.algebra;
  Mat span = radical_submodule_basis(m);
  size_t rk = span.cols();
  ProjectiveCover pc{{}, Mat(m.field(), m.dim(), 0)};
  for (size_t v = 0; v < a->num_vertices(); ++v)
    for (size_t i : m.indices_at(v)) {
      Mat e = unit_column(m.field(), m.dim(), i);
      Mat trial = hstack(span, e);
      if (rank(trial) == rk) continue;
      span = trial;
      ++rk;
      pc.vertices.push_back(v);
      for (size_t b : a->by_left[v]) pc.map = hstack(pc.map, m.action[b] * e);
    }
  return pc;
}

std::vector<size_t> ResolutionReport::multiplicity(size_t k) const {
  std::vector<size_t> out(module.algebra->num_vertices(), 0);
  if (k < terms.size())
    for (size_t v : terms[k]) ++out[v];
  return out;
}

ResolutionReport min_resolution(const FDModule& m, size_t depth, bool detect_period) {
  if (depth == 0) throw DimError("resolution depth must be positive");
  const auto& a = m.algebra;
  ResolutionReport r;
  r.module = m;
  r.syzygies.push_back(m);
  if (m.dim() == 0) {
    r.status = PdStatus::finite(0);
    r.augmentation = Mat(m.field(), 0, 0);
    return r;
  }
  for (size_t k = 0; k < depth; ++k) {
    auto pc = projective_cover(r.syzygies[k]);
    r.terms.push_back(pc.vertices);
    if (k == 0)
      r.augmentation = pc.map;
    else
      r.maps.push_back(from_linear(a, r.terms[k - 1], r.terms[k], r.inclusions[k - 1] * pc.map));
    Mat ker = kernel_basis(pc.map);
    Mat inc;
    FDModule omega = submodule(free_module(a, pc.vertices), ker, &inc);
    r.inclusions.push_back(inc);
    r.syzygies.push_back(omega);
    if (omega.dim() == 0) {
      r.status = PdStatus::finite(k);
      return r;
    }
    if (!detect_period) continue;
    for (size_t j = 0; j <= k; ++j) {
      if (r.syzygies[j].dim_vector() != omega.dim_vector()) continue;
      auto iso = is_isomorphic(r.syzygies[j], omega);
      if (iso.verdict.is_true()) {
        r.status = PdStatus::periodic(j, k + 1 - j);
        r.period_certificate = iso.iso;
        return r;
      }
    }
  }
  r.status = PdStatus::exceeded(depth);
  return r;
}

PdStatus pd(const FDModule& m, size_t depth) { return min_resolution(m, depth).status; }

GlDimStatus gldim(const AlgebraPtr& a, size_t depth) {
  GlDimStatus g{GlDimStatus::Kind::Finite, 0};
  bool unknown = false;
  for (size_t v = 0; v < a->num_vertices(); ++v) {
    auto s = pd(simple_module(a, v), depth);
    if (s.is_periodic()) return {GlDimStatus::Kind::Infinite, 0};
    if (s.is_finite())
      g.n = std::max(g.n, s.n);
    else
      unknown = true;
  }
  if (unknown) return {GlDimStatus::Kind::Unknown, 0};
  return g;
}

namespace {

// Hom(P_k, N) -> Hom(P_{k+1}, N) induced by d : P_{k+1} -> P_k
Mat hom_dual(const ProjMat& d, const FDModule& n) {
  std::vector<size_t> ro, co;
  size_t R = 0, C = 0;
  for (size_t v : d.col_vertices) ro.push_back(R), R += n.indices_at(v).size();
  for (size_t v : d.row_vertices) co.push_back(C), C += n.indices_at(v).size();
  Mat out(n.field(), R, C);
  for (size_t i = 0; i < d.rows(); ++i) {
    auto src = n.indices_at(d.row_vertices[i]);
    for (size_t j = 0; j < d.cols(); ++j) {
      auto dst = n.indices_at(d.col_vertices[j]);
      Mat x = n.act(d.at(i, j));
      for (size_t r = 0; r < dst.size(); ++r)
        for (size_t c = 0; c < src.size(); ++c)
          if (!x.at(dst[r], src[c]).is_zero()) out.add_to(ro[j] + r, co[i] + c, x.at(dst[r], src[c]));
    }
  }
  return out;
}

// P_{k+1} (x) N -> P_k (x) N; the left action of x on n_left is its right action over the opposite
Mat tensor_map(const ProjMat& d, const FDModule& n_left) {
  std::vector<size_t> ro, co;
  size_t R = 0, C = 0;
  for (size_t v : d.row_vertices) ro.push_back(R), R += n_left.indices_at(v).size();
  for (size_t v : d.col_vertices) co.push_back(C), C += n_left.indices_at(v).size();
  Mat out(n_left.field(), R, C);
  for (size_t i = 0; i < d.rows(); ++i) {
    auto dst = n_left.indices_at(d.row_vertices[i]);
    for (size_t j = 0; j < d.cols(); ++j) {
      auto src = n_left.indices_at(d.col_vertices[j]);
      Mat x = n_left.act(d.at(i, j));
      for (size_t r = 0; r < dst.size(); ++r)
        for (size_t c = 0; c < src.size(); ++c)
          if (!x.at(dst[r], src[c]).is_zero()) out.add_to(ro[i] + r, co[j] + c, x.at(dst[r], src[c]));
    }
  }
  return out;
}

size_t hom_term_dim(const std::vector<size_t>& verts, const FDModule& n) {
  size_t s = 0;
  for (size_t v : verts) s += n.indices_at(v).size();
  return s;
}

}  // namespace

std::optional<size_t> ext_dim(const FDModule& m, const FDModule& n, size_t i, size_t depth) {
  if (i >= depth) return std::nullopt;
  auto res = min_resolution(m, i + 2, false);
  if (i >= res.terms.size()) return 0;
  size_t d = hom_term_dim(res.terms[i], n);
  size_t out_rank = i < res.maps.size() ? rank(hom_dual(res.maps[i], n)) : 0;
  size_t in_rank = i > 0 ? rank(hom_dual(res.maps[i - 1], n)) : 0;
  return d - out_rank - in_rank;
}

std::optional<size_t> tor_dim(const FDModule& m, const FDModule& n_left, size_t i, size_t depth) {
  if (m.algebra->dim() != n_left.algebra->dim()) throw AlgebraMismatch("tor needs A and its opposite");
  if (i >= depth) return std::nullopt;
  auto res = min_resolution(m, i + 2, false);
  if (i >= res.terms.size()) return 0;
  size_t d = hom_term_dim(res.terms[i], n_left);
  size_t out_rank = i > 0 ? rank(tensor_map(res.maps[i - 1], n_left)) : 0;
  size_t in_rank = i < res.maps.size() ? rank(tensor_map(res.maps[i], n_left)) : 0;
  return d - out_rank - in_rank;
}

std::optional<ProjMat> lift_through(const ProjMat& d, const ProjMat& rhs) {
  const auto& a = d.algebra;
  ProjMat x(a, d.col_vertices, rhs.col_vertices);
  Mat ld = to_linear(d), lr = to_linear(rhs);
  for (size_t j = 0; j < rhs.cols(); ++j) {
    Mat y = lr * generator_column(a, rhs.col_vertices, j);
    auto pre = preimage_at(a, d.col_vertices, ld, y, rhs.col_vertices[j]);
    if (!pre) return std::nullopt;
    for (size_t i = 0; i < x.rows(); ++i) x.at(i, j) = (*pre)[i];
  }
  return x;
}

std::vector<ProjMat> lift_map(const ResolutionReport& src, const ResolutionReport& dst, const Mat& phi,
                              size_t len) {
  const auto& a = src.module.algebra;
  std::vector<ProjMat> out;
  len = std::min(len, src.terms.size());
  if (len == 0) return out;
  static const std::vector<size_t> none;
  const auto& t0 = dst.terms.empty() ? none : dst.terms[0];
  ProjMat f0(a, t0, src.terms[0]);
  Mat img = phi * src.augmentation;
  for (size_t j = 0; j < src.terms[0].size(); ++j) {
    Mat y = img * generator_column(a, src.terms[0], j);
    if (t0.empty()) {
      if (!y.is_zero()) throw LiftInconsistent("map into the zero module is nonzero");
      continue;
    }
    auto pre = preimage_at(a, t0, dst.augmentation, y, src.terms[0][j]);
    if (!pre) throw LiftInconsistent("no lift through the augmentation");
    for (size_t i = 0; i < t0.size(); ++i) f0.at(i, j) = (*pre)[i];
  }
  out.push_back(f0);
  for (size_t k = 1; k < len; ++k) {
    ProjMat rhs = out[k - 1] * src.maps[k - 1];
    if (k >= dst.terms.size()) {
      if (!rhs.is_zero()) throw LiftInconsistent("lift does not vanish past the target resolution");
      out.emplace_back(a, std::vector<size_t>{}, src.terms[k]);
      continue;
    }
    auto x = lift_through(dst.maps[k - 1], rhs);
    if (!x) throw LiftInconsistent("no lift in degree " + std::to_string(k));
    out.push_back(*x);
  }
  return out;
}

std::vector<ProjMat> lift_action(const ResolutionReport& res, const Mat& phi) {
  return lift_map(res, res, phi, res.terms.size());
}

}  // namespace recolle
