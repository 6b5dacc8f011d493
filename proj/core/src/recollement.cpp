#include "recolle/recollement.hpp"

#include <algorithm>
#include <sstream>

namespace recolle {

namespace {

std::vector<std::vector<size_t>> by_right(const BasedAlgebra& a) {
  std::vector<std::vector<size_t>> out(a.num_vertices());
  for (size_t i = 0; i < a.dim(); ++i) out[a.basis[i].right].push_back(i);
  return out;
}

Mat mult_matrix(const BasedAlgebra& a, const std::vector<size_t>& space, const std::vector<long>& pos,
                size_t b, bool on_left) {
  Mat m(a.field, space.size(), space.size());
  for (size_t c = 0; c < space.size(); ++c) {
    const auto& pr = on_left ? a.product(b, space[c]) : a.product(space[c], b);
    for (const auto& [t, v] : pr) {
      if (pos[t] < 0) throw InvariantViolation("product leaves the subspace");
      m.add_to(static_cast<size_t>(pos[t]), c, v);
    }
  }
  return m;
}

std::vector<long> positions(size_t n, const std::vector<size_t>& space) {
  std::vector<long> pos(n, -1);
  for (size_t k = 0; k < space.size(); ++k) pos[space[k]] = static_cast<long>(k);
  return pos;
}

// cohomology of a cochain complex given by consecutive differentials; reps[k] are cocycle representatives
struct Cohomology {
  std::vector<Mat> reps;   // columns
  std::vector<Mat> solve;  // [reps | boundaries]
};

Cohomology cohomology(const std::vector<size_t>& dims, const std::vector<Mat>& diffs, const Field& f) {
  Cohomology out;
  for (size_t k = 0; k < dims.size(); ++k) {
    Mat z = k < diffs.size() ? kernel_basis(diffs[k]) : Mat::identity(f, dims[k]);
    Mat bnd(f, dims[k], 0);
    if (k > 0 && diffs[k - 1].cols() > 0) bnd = diffs[k - 1].columns(independent_columns(diffs[k - 1]));
    Mat cur = bnd;
    Mat reps(f, dims[k], 0);
    for (size_t c = 0; c < z.cols(); ++c) {
      Mat trial = hstack(cur, z.column(c));
      if (rank(trial) == cur.cols()) continue;
      cur = trial;
      reps = hstack(reps, z.column(c));
    }
    out.reps.push_back(reps);
    out.solve.push_back(hstack(reps, bnd));
  }
  return out;
}

Mat induced(const Cohomology& h, size_t k, const Mat& op) {
  const Mat& r = h.reps[k];
  Mat out(op.field(), r.cols(), r.cols());
  if (r.cols() == 0) return out;
  Mat img = op * r;
  auto c = solve(h.solve[k], img);
  if (!c) throw InvariantViolation("operator does not preserve cocycles");
  return c->block(0, 0, r.cols(), r.cols());
}

}  // namespace

// ------------------------------------------------------------------ bimodules

FDModule Bimodule::as_right() const { return FDModule(right, right_action, right_vertex); }

FDModule Bimodule::as_left() const { return FDModule(left_op, left_action, left_vertex); }

bool Bimodule::check() const {
  if (!as_right().check_module_axioms() || !as_left().check_module_axioms()) return false;
  for (const auto& l : left_action)
    for (const auto& r : right_action)
      if (!(l * r == r * l)) return false;
  return true;
}

Bimodule make_bimodule(AlgebraPtr left, AlgebraPtr left_op, AlgebraPtr right, AlgebraPtr right_op,
                       std::vector<Mat> left_action, std::vector<Mat> right_action, int degree) {
  Bimodule m;
  m.left = std::move(left);
  m.left_op = std::move(left_op);
  m.right = std::move(right);
  m.right_op = std::move(right_op);
  m.degree = degree;
  const Field& f = m.right->field;
  const size_t n = right_action.empty() ? 0 : right_action[0].rows();
  Mat q(f, n, 0);
  for (size_t u = 0; u < m.left->num_vertices(); ++u)
    for (size_t w = 0; w < m.right->num_vertices(); ++w) {
      Mat p = left_action[m.left->idempotents[u]] * right_action[m.right->idempotents[w]];
      if (p.is_zero()) continue;
      q = hstack(q, p.columns(independent_columns(p)));
      size_t r = rank(p);
      for (size_t t = 0; t < r; ++t) {
        m.left_vertex.push_back(u);
        m.right_vertex.push_back(w);
      }
    }
  if (q.cols() != n) throw InvariantViolation("idempotents do not decompose the bimodule");
  auto inv = inverse(q);
  if (!inv) throw InvariantViolation("basis change is singular");
  const Mat& qi = *inv;
  for (auto& l : left_action) m.left_action.push_back(qi * l * q);
  for (auto& r : right_action) m.right_action.push_back(qi * r * q);
  return m;
}

Bimodule flip(const Bimodule& v) {
  Bimodule m;
  m.left = v.right_op;
  m.left_op = v.right;
  m.right = v.left_op;
  m.right_op = v.left;
  m.left_action = v.right_action;
  m.right_action = v.left_action;
  m.left_vertex = v.right_vertex;
  m.right_vertex = v.left_vertex;
  m.degree = v.degree;
  return m;
}

DualResult dual_right(const Bimodule& v, size_t depth) {
  DualResult out;
  const auto& s = v.right;
  const BasedAlgebra& sa = *s;
  const Field& f = sa.field;
  if (v.dim() == 0) {
    out.status = PdStatus::finite(0);
    out.note = "zero bimodule";
    return out;
  }
  ResolutionReport res = min_resolution(v.as_right(), depth);
  out.status = res.status;
  if (!res.status.is_finite()) {
    out.note = "one-sided resolution is not finite: " + res.status.str();
    return out;
  }
  const size_t len = res.status.n + 1;
  auto br = by_right(sa);
  // coordinates of Hom(P_k, S) = (+) S e_u
  std::vector<std::vector<size_t>> offs(len);
  std::vector<size_t> dims(len, 0);
  for (size_t k = 0; k < len; ++k)
    for (size_t u : res.terms[k]) {
      offs[k].push_back(dims[k]);
      dims[k] += br[u].size();
    }
  std::vector<std::vector<long>> pos(sa.num_vertices());
  for (size_t u = 0; u < sa.num_vertices(); ++u) pos[u] = positions(sa.dim(), br[u]);
  // y -> (sum_i y_i F(i,j))_j for F : P_l -> P_k, a map Hom(P_k,S) -> Hom(P_l,S)
  auto precompose = [&](const ProjMat& fm, size_t k, size_t l) {
    Mat m(f, dims[l], dims[k]);
    for (size_t i = 0; i < fm.rows(); ++i) {
      size_t u = res.terms[k][i];
      for (size_t t = 0; t < br[u].size(); ++t) {
        size_t col = offs[k][i] + t;
        for (size_t j = 0; j < fm.cols(); ++j) {
          const AlgElem& x = fm.at(i, j);
          size_t w = res.terms[l][j];
          for (size_t q = 0; q < x.size(); ++q) {
            if (x[q].is_zero()) continue;
            for (const auto& [r, c] : sa.product(br[u][t], q)) {
              if (pos[w][r] < 0) throw InvariantViolation("Hom value left its corner");
              m.add_to(offs[l][j] + static_cast<size_t>(pos[w][r]), col, f.mul(c, x[q]));
            }
          }
        }
      }
    }
    return m;
  };
  std::vector<Mat> diffs;
  for (size_t k = 0; k + 1 < len; ++k) diffs.push_back(precompose(res.maps[k], k, k + 1));
  Cohomology h = cohomology(dims, diffs, f);
  std::vector<size_t> nonzero;
  for (size_t k = 0; k < len; ++k) {
    out.cohomology[static_cast<int>(k) - v.degree] = h.reps[k].cols();
    if (h.reps[k].cols() > 0) nonzero.push_back(k);
  }
  if (nonzero.size() != 1) {
    out.note = nonzero.empty() ? "RHom vanishes" : "RHom is not concentrated in one degree";
    return out;
  }
  const size_t k = nonzero[0];
  // left S-action on the values
  std::vector<Mat> left;
  for (size_t b = 0; b < sa.dim(); ++b) {
    Mat m(f, dims[k], dims[k]);
    for (size_t i = 0; i < res.terms[k].size(); ++i) {
      size_t u = res.terms[k][i];
      for (size_t t = 0; t < br[u].size(); ++t)
        for (const auto& [r, c] : sa.product(b, br[u][t])) {
          if (pos[u][r] < 0) throw InvariantViolation("left action left its corner");
          m.add_to(offs[k][i] + static_cast<size_t>(pos[u][r]), offs[k][i] + t, c);
        }
    }
    left.push_back(induced(h, k, m));
  }
  // right action of the old left algebra through lifted chain maps
  std::vector<Mat> right;
  for (size_t b = 0; b < v.left->dim(); ++b) {
    auto lifted = lift_action(res, v.left_action[b]);
    right.push_back(induced(h, k, precompose(lifted[k], k, k)));
  }
  out.dual = make_bimodule(v.right, v.right_op, v.left, v.left_op, std::move(left), std::move(right),
                           static_cast<int>(k) - v.degree);
  return out;
}

DualResult dual_left(const Bimodule& v, size_t depth) {
  DualResult r = dual_right(flip(v), depth);
  if (r.dual) r.dual = flip(*r.dual);
  return r;
}

TriBool compact_status(const PdStatus& s, const std::string& what) {
  switch (s.kind) {
    case PdStatus::Kind::Finite:
      return TriBool::yes(what + ": " + s.str());
    case PdStatus::Kind::Periodic:
      return TriBool::no(what + ": " + s.str());
    default:
      return TriBool::unknown(what + ": " + s.str());
  }
}

// ------------------------------------------------------------------ stratifying ideals

std::string StratStatus::str() const {
  switch (kind) {
    case Kind::Certified:
      return "Certified(" + resolution.str() + ")";
    case Kind::Refuted:
      return "Refuted(" + std::to_string(tor_degree) + ")";
    default:
      return "Unknown";
  }
}

StratStatus stratifying_status(const AlgebraPtr& a, const std::vector<size_t>& e0, size_t depth) {
  std::vector<size_t> e = e0;
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  if (e.empty() || e.size() >= a->num_vertices()) throw TrivialIdempotent("idempotent subset must be proper");
  StratStatus st;
  FDModule bm = ideal_quotient_module(a, e);
  ResolutionReport r = min_resolution(bm, depth);
  st.resolution = r.status;
  for (size_t k = 0; k < r.length(); ++k) st.terms.push_back(r.multiplicity(k));
  if (r.status.kind != PdStatus::Kind::DepthExceeded) {
    bool inside = true;
    for (size_t k = 1; k < r.terms.size(); ++k)
      for (size_t v : r.terms[k])
        if (!std::binary_search(e.begin(), e.end(), v)) inside = false;
    if (inside) {
      st.kind = StratStatus::Kind::Certified;
      st.evidence = "resolution of A/AeA " + r.status.str() + " with higher terms in add(eA)";
      return st;
    }
  }
  FDModule bl = ideal_quotient_module(opposite(a), e);
  for (size_t i = 1; i <= depth; ++i) {
    auto t = tor_dim(bm, bl, i, depth + 1);
    if (t && *t != 0) {
      st.kind = StratStatus::Kind::Refuted;
      st.tor_degree = i;
      st.tor_value = *t;
      st.evidence = "Tor_" + std::to_string(i) + "(A/AeA, A/AeA) has dimension " + std::to_string(*t);
      return st;
    }
  }
  st.evidence = "no certificate within depth " + std::to_string(depth);
  return st;
}

// ------------------------------------------------------------------ recollements

IdempotentRecollement build_recollement(const AlgebraPtr& a, const std::vector<size_t>& e0, size_t depth) {
  IdempotentRecollement rec;
  rec.strat = stratifying_status(a, e0, depth);
  if (!rec.strat.certified()) throw NotStratifying(rec.strat.str());
  rec.e = e0;
  std::sort(rec.e.begin(), rec.e.end());
  rec.e.erase(std::unique(rec.e.begin(), rec.e.end()), rec.e.end());
  const auto& e = rec.e;
  rec.a = a;
  rec.b = quotient_by_idempotent_ideal(a, e);
  rec.c = corner(a, e);
  if (rec.b->num_vertices() + rec.c->num_vertices() != a->num_vertices())
    throw InvariantViolation("rank additivity fails");
  auto aop = opposite(a), bop = opposite(rec.b), cop = opposite(rec.c);
  auto keep = corner_embedding(a, e);
  std::vector<bool> in(a->num_vertices(), false);
  for (size_t v : e) in[v] = true;

  std::vector<size_t> ea, ae;
  for (size_t i = 0; i < a->dim(); ++i) {
    if (in[a->basis[i].left]) ea.push_back(i);
    if (in[a->basis[i].right]) ae.push_back(i);
  }
  auto pea = positions(a->dim(), ea), pae = positions(a->dim(), ae);
  std::vector<Mat> lx, rx, lt, rt;
  for (size_t t : keep) lx.push_back(mult_matrix(*a, ea, pea, t, true));
  for (size_t b = 0; b < a->dim(); ++b) rx.push_back(mult_matrix(*a, ea, pea, b, false));
  for (size_t b = 0; b < a->dim(); ++b) lt.push_back(mult_matrix(*a, ae, pae, b, true));
  for (size_t t : keep) rt.push_back(mult_matrix(*a, ae, pae, t, false));
  rec.x = make_bimodule(rec.c, cop, a, aop, lx, rx);
  rec.xtr = make_bimodule(a, aop, rec.c, cop, lt, rt);

  // A/AeA with B on the left and A acting through the projection
  const BasedAlgebra& bb = *rec.b;
  Mat proj = quotient_projection(a, e);
  std::vector<Mat> ly, ry;
  for (size_t b = 0; b < bb.dim(); ++b) ly.push_back(bb.left_mult(b));
  for (size_t b = 0; b < a->dim(); ++b) {
    Mat m(a->field, bb.dim(), bb.dim());
    for (size_t t = 0; t < bb.dim(); ++t) {
      const Scalar& c = proj.at(t, b);
      if (!c.is_zero()) m = m + bb.right_mult(t).scaled(c);
    }
    ry.push_back(m);
  }
  rec.y = make_bimodule(rec.b, bop, a, aop, ly, ry);
  return rec;
}

TriBool jstar_compact(const IdempotentRecollement& rec, size_t depth) {
  DualResult d = dual_right(rec.xtr, depth);
  if (d.dual) return compact_status(pd(d.dual->as_right(), depth), "j_*(C) = RHom_C(Ae, C) over A");
  if (!d.status.is_finite()) return TriBool::unknown("Ae is not perfect over C: " + d.status.str());
  GlDimStatus g = gldim(rec.a, depth);
  if (g.kind == GlDimStatus::Kind::Finite) return TriBool::yes("gldim A = " + g.str());
  return TriBool::unknown("RHom_C(Ae, C) is not concentrated in one degree");
}

TriBool ishriek_compact(const IdempotentRecollement& rec, size_t depth) {
  GlDimStatus gb = gldim(rec.b, depth);
  DualResult d = dual_right(rec.y, depth);
  if (d.dual) return compact_status(pd(d.dual->as_right(), depth), "i^!(A) = RHom_A(B, A) over B");
  if (gb.kind == GlDimStatus::Kind::Finite) {
    if (d.status.is_finite()) return TriBool::yes("bounded RHom over B with gldim B = " + gb.str());
    if (d.status.is_periodic()) {
      // Ext^k(B, A) repeats with the syzygies, so one period decides boundedness
      FDModule bm = rec.y.as_right();
      FDModule reg = regular_module(rec.a);
      const size_t from = d.status.pre + 1, to = d.status.pre + d.status.period;
      for (size_t k = from; k <= to; ++k) {
        auto x = ext_dim(bm, reg, k, to + 2);
        if (!x) return TriBool::unknown("Ext beyond depth");
        if (*x != 0) return TriBool::no("Ext^" + std::to_string(k) + "(B, A) recurs periodically");
      }
      return TriBool::yes("Ext^*(B, A) bounded and gldim B = " + gb.str());
    }
  }
  return TriBool::unknown("i^!(A) not represented: " + d.note);
}

bool RestrictionReport::consistent() const {
  TriBool dm = compact_status(pd_b, ""), rc = compact_status(pd_right_c, "");
  if (!dm.is_unknown() && !rc.is_unknown() && dm.value != rc.value) return false;
  if (kbproj.is_true() && !dminus.is_true()) return false;
  if (dbmod.is_true() && !dminus.is_true()) return false;
  if (dm.is_true() && !jstar_compact.is_unknown() && !ishriek_compact.is_unknown() &&
      jstar_compact.value != ishriek_compact.value)
    return false;
  return true;
}

RestrictionReport restriction_report(const IdempotentRecollement& rec, size_t depth) {
  RestrictionReport r;
  r.pd_b = pd(rec.y.as_right(), depth);
  r.pd_left_c = pd(rec.x.as_left(), depth);
  r.pd_right_c = pd(rec.xtr.as_right(), depth);
  r.dminus = compact_status(r.pd_b, "pd_A(A/AeA)");
  TriBool left_c = compact_status(r.pd_left_c, "pd of eA over C on the left");
  TriBool right_c = compact_status(r.pd_right_c, "pd of Ae over C on the right");
  r.dbmod = tri_and(r.dminus, left_c);
  r.dbMod = r.dbmod;
  r.jstar_compact = jstar_compact(rec, depth);
  r.ishriek_compact = ishriek_compact(rec, depth);
  r.kbproj = tri_and(right_c, r.jstar_compact);
  if (!r.consistent()) throw InvariantViolation("restriction flags contradict each other");
  return r;
}

// ------------------------------------------------------------------ canonical triangles

TriangleCheck verify_canonical_triangle(const AlgebraPtr& a, const ProjComplex& t, const ProjComplex& tprime,
                                        const ChainMap& g, const std::optional<ProjComplex>& candidate) {
  TriangleCheck out;
  if (!g.is_chain_map()) {
    out.detail = "g is not a chain map";
    return out;
  }
  ProjComplex left = minimalize(shift(cone(g), -1));
  if (candidate) {
    out.candidate_iso = kb_isomorphic(left, minimalize(*candidate)).is_true();
  } else {
    std::vector<bool> allowed(a->num_vertices(), false);
    for (const auto& term : t.terms)
      for (size_t v : term) allowed[v] = true;
    out.candidate_iso = true;
    for (const auto& term : left.terms)
      for (size_t v : term)
        if (!allowed[v]) out.candidate_iso = false;
  }
  auto orth = [&](const ProjComplex& x) {
    int span = std::max(x.amplitude(), tprime.amplitude()) + std::abs(x.lo - tprime.lo) + 1;
    for (int n = -span; n <= span; ++n)
      if (hom_dim(x, tprime, n).dim != 0) return false;
    return true;
  };
  out.t_orthogonal = orth(t);
  out.cone_orthogonal = orth(left);
  out.ok = out.candidate_iso && out.t_orthogonal && out.cone_orthogonal;
  std::ostringstream os;
  os << "cone(g)[-1] = " << left.str() << "; candidate " << (out.candidate_iso ? "matches" : "differs")
     << "; T left-orthogonal " << out.t_orthogonal << "; cone left-orthogonal " << out.cone_orthogonal;
  out.detail = os.str();
  return out;
}

std::vector<std::vector<size_t>> proper_vertex_subsets(const AlgebraPtr& a) {
  std::vector<std::vector<size_t>> out;
  const size_t n = a->num_vertices();
  if (n > 20) throw TooLarge("too many vertices to enumerate idempotent subsets");
  for (uint64_t mask = 1; mask + 1 < (1ull << n); ++mask) {
    std::vector<size_t> e;
    for (size_t v = 0; v < n; ++v)
      if (mask >> v & 1) e.push_back(v);
    out.push_back(e);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return out;
}

std::string subset_str(const AlgebraPtr& a, const std::vector<size_t>& e) {
  std::string s;
  for (size_t v : e) s += (s.empty() ? "e" : "+e") + a->vertex_labels[v];
  return s;
}

}  // namespace recolle
