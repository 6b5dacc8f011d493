#include "recolle/ladder.hpp"

#include <sstream>

#include "recolle/errors.hpp"

namespace recolle {

TriBool extend_down(const IdempotentRecollement& rec, size_t depth) {
  return compact_status(pd(rec.y.as_right(), depth), "pd_A(A/AeA)");
}

TriBool extend_up(const IdempotentRecollement& rec, size_t depth) {
  return compact_status(pd(rec.x.as_left(), depth), "pd of eA over C on the left");
}

DualResult derived_dual(const Bimodule& x, Side side, size_t depth) {
  DualResult d = side == Side::Right ? dual_right(x, depth) : dual_left(x, depth);
  if (!d.status.is_finite()) throw NotPerfect(d.status.str());
  return d;
}

std::string LadderReport::str() const {
  std::ostringstream os;
  auto steps = [&](const char* tag, const std::vector<LadderStep>& v, const TriBool& done) {
    os << tag << " [";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].verdict.name();
    os << "] complete " << done.name();
  };
  os << "e = " << subset_str(base.a, base.e) << "; ";
  steps("up", up_steps, complete_up);
  os << "; ";
  steps("down", down_steps, complete_down);
  os << "; height >= " << height_lower_bound;
  return os.str();
}

namespace {

struct Gl {
  const AlgebraPtr& a;
  size_t depth;
  std::optional<GlDimStatus> g;
  bool finite() {
    if (!g) g = gldim(a, depth);
    return g->kind == GlDimStatus::Kind::Finite;
  }
};

// fills steps until m, a False or an Unknown; returns the completeness flag (False: no end exists)
TriBool run_chain(std::vector<LadderStep>& out, size_t m, size_t depth, Gl& gl, const Bimodule& x0, bool down) {
  Bimodule prev = x0;
  for (size_t k = 1; k <= m; ++k) {
    LadderStep st;
    Bimodule cur = prev;
    if (down || k > 1) {
      DualResult d = down ? dual_right(prev, depth) : dual_left(prev, depth);
      if (!d.dual) {
        if (gl.finite()) {
          for (; k <= m; ++k) {
            LadderStep g;
            g.verdict = TriBool::yes("gldim A = " + gl.g->str() + " gives an unbounded ladder");
            g.status = PdStatus::finite(gl.g->n);
            out.push_back(g);
          }
          return TriBool::no("gldim A = " + gl.g->str() + ": the ladder is unbounded");
        }
        st.verdict = TriBool::unknown("X_n not represented by a bimodule: " + d.note);
        st.status = d.status;
        out.push_back(st);
        return st.verdict;
      }
      cur = *d.dual;
    }
    const bool over_c = k % 2 == 1;
    st.side = std::string(over_c ? "C" : "A") + (down ? ", right" : ", left");
    st.status = pd(down ? cur.as_right() : cur.as_left(), depth);
    st.verdict = compact_status(st.status, "X_" + std::to_string(down ? static_cast<int>(k) : 1 - static_cast<int>(k)) +
                                               " over " + st.side);
    st.dual = cur;
    out.push_back(st);
    if (st.verdict.is_false()) return TriBool::yes("step " + std::to_string(k) + " fails");
    if (st.verdict.is_unknown()) return TriBool::unknown("step " + std::to_string(k) + " undecided");
    prev = cur;
  }
  if (gl.finite()) return TriBool::no("gldim A = " + gl.g->str() + ": the ladder is unbounded");
  return TriBool::unknown("bound of " + std::to_string(m) + " steps reached");
}

}  // namespace

LadderReport ladder_heights(const IdempotentRecollement& rec, size_t m, size_t depth) {
  if (m == 0) throw DimError("ladder_heights needs m >= 1");
  LadderReport r;
  r.base = rec;
  Gl gl{rec.a, depth, {}};
  r.complete_down = run_chain(r.down_steps, m, depth, gl, rec.x, true);
  r.complete_up = run_chain(r.up_steps, m, depth, gl, rec.x, false);
  for (const auto* v : {&r.up_steps, &r.down_steps})
    for (const auto& s : *v)
      if (s.verdict.is_true()) ++r.height_lower_bound;
  return r;
}

// ------------------------------------------------------------------ Nakayama

FDModule injective_module(const AlgebraPtr& a, size_t v) {
  return dual(projective_module(opposite(a), v), a);
}

namespace {

// Ae_v -> Ae_u, y -> y x, in the basis of e_v A^op
Mat right_mult_between(const AlgebraPtr& a, const AlgebraPtr& aop, size_t v, size_t u, const AlgElem& x) {
  const auto& src = aop->by_left[v];
  const auto& dst = aop->by_left[u];
  std::vector<long> pos(a->dim(), -1);
  for (size_t k = 0; k < dst.size(); ++k) pos[dst[k]] = static_cast<long>(k);
  Mat m(a->field, dst.size(), src.size());
  for (size_t k = 0; k < src.size(); ++k)
    for (size_t q = 0; q < x.size(); ++q) {
      if (x[q].is_zero()) continue;
      for (const auto& [t, c] : a->product(src[k], q)) {
        if (pos[t] < 0) throw InvariantViolation("entry outside its corner");
        m.add_to(static_cast<size_t>(pos[t]), k, a->field.mul(c, x[q]));
      }
    }
  return m;
}

}  // namespace

ProjComplex nakayama(const AlgebraPtr& a, const ProjComplex& x, size_t depth) {
  GlDimStatus g = gldim(a, depth);
  if (g.kind != GlDimStatus::Kind::Finite) throw InfiniteGlobalDimension(g.str());
  if (x.is_zero()) return ProjComplex(a);
  auto aop = opposite(a);
  std::vector<FDModule> inj;
  for (size_t v = 0; v < a->num_vertices(); ++v) inj.push_back(injective_module(a, v));
  auto sum = [&](const std::vector<size_t>& verts, std::vector<size_t>& offs) {
    FDModule m = zero_module(a);
    offs.clear();
    for (size_t v : verts) {
      offs.push_back(m.dim());
      m = direct_sum(m, inj[v]);
    }
    return m;
  };
  ModuleComplex mc;
  mc.algebra = a;
  mc.lo = x.lo;
  std::vector<std::vector<size_t>> offs(x.terms.size());
  for (size_t k = 0; k < x.terms.size(); ++k) mc.modules.push_back(sum(x.terms[k], offs[k]));
  for (size_t k = 0; k + 1 < x.terms.size(); ++k) {
    const ProjMat& d = x.diffs[k];
    Mat m(a->field, mc.modules[k + 1].dim(), mc.modules[k].dim());
    for (size_t i = 0; i < d.rows(); ++i)
      for (size_t j = 0; j < d.cols(); ++j) {
        Mat blk = right_mult_between(a, aop, d.row_vertices[i], d.col_vertices[j], d.at(i, j)).transpose();
        m.set_block(offs[k + 1][i], offs[k][j], blk);
      }
    mc.diffs.push_back(m);
  }
  if (!mc.check_d2()) throw InvariantViolation("Nakayama image is not a complex");
  ComplexResolution res = proj_resolve_complex(mc, depth);
  if (!res.complex) throw InvariantViolation("finite gldim but no finite resolution: " + res.status.str());
  return *res.complex;
}

// ------------------------------------------------------------------ simplicity

const char* LevelVerdict::name() const {
  switch (kind) {
    case Kind::SimpleCertified:
      return "SimpleCertified";
    case Kind::NotSimple:
      return "NotSimple";
    default:
      return "NoWitnessFound";
  }
}

SimplicityReport simplicity_report(const AlgebraPtr& a, const SearchBounds& bounds) {
  SimplicityReport r;
  const size_t depth = bounds.depth ? bounds.depth : default_depth(a);
  TriBool local = is_local(a);
  if (local.is_true()) {
    LevelVerdict v{LevelVerdict::Kind::SimpleCertified,
                   "local algebra: rank 1, so every recollement has a trivial side (" + local.evidence + ")"};
    r.dmod = r.dminus = r.kb = v;
    return r;
  }
  std::string best;
  size_t undecided = 0;
  for (const auto& e : proper_vertex_subsets(a)) {
    StratStatus s = stratifying_status(a, e, depth);
    if (!s.certified()) {
      if (s.kind == StratStatus::Kind::Unknown) ++undecided;
      continue;
    }
    LadderReport lr = ladder_heights(build_recollement(a, e, depth), bounds.ladder_steps, depth);
    r.witnesses.emplace_back(subset_str(a, e), lr.height_lower_bound);
    if (lr.height_lower_bound > r.best_height) {
      r.best_height = lr.height_lower_bound;
      best = lr.str();
    }
  }
  std::ostringstream bd;
  bd << "idempotent recollements only, depth " << depth << ", " << bounds.ladder_steps
     << " ladder steps each way, " << undecided << " undecided idempotents";
  auto level = [&](size_t h) {
    if (r.best_height >= h) return LevelVerdict{LevelVerdict::Kind::NotSimple, best};
    return LevelVerdict{LevelVerdict::Kind::NoWitnessFound, bd.str()};
  };
  r.dmod = level(1);
  r.dminus = level(2);
  r.kb = level(3);
  return r;
}

}  // namespace recolle
