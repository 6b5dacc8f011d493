#include "recolle/kbproj.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace recolle {

namespace {

const std::vector<size_t> kNone;

bool elem_zero(const AlgElem& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

Scalar sign_of(int n) { return (n % 2 == 0) ? Scalar(1) : Scalar(-1); }

// coordinates of maps (+)P_cols -> (+)P_rows: one block per entry, spanned by corner basis elements
struct Layout {
  std::vector<size_t> rows, cols;
  std::vector<size_t> offset;               // per entry
  std::vector<std::vector<size_t>> basis;   // per entry
  std::vector<std::vector<long>> pos;       // per entry, basis index -> local coordinate
  size_t size = 0;

  size_t entry(size_t i, size_t j) const { return i * cols.size() + j; }
};

Layout make_layout(const AlgebraPtr& a, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
  Layout l;
  l.rows = rows;
  l.cols = cols;
  std::vector<size_t> all(a->dim());
  for (size_t b = 0; b < a->dim(); ++b) all[b] = b;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) {
      auto idx = a->vertex_basis ? a->corner_indices(rows[i], cols[j]) : all;
      std::vector<long> p(a->dim(), -1);
      for (size_t t = 0; t < idx.size(); ++t) p[idx[t]] = static_cast<long>(t);
      l.offset.push_back(l.size);
      l.size += idx.size();
      l.basis.push_back(std::move(idx));
      l.pos.push_back(std::move(p));
    }
  return l;
}

// sparse accumulation of b * x or x * b
void mul_basis_left(const BasedAlgebra& a, size_t b, const AlgElem& x, const Scalar& c, AlgElem& acc) {
  const Field& f = a.field;
  for (size_t q = 0; q < x.size(); ++q) {
    if (x[q].is_zero()) continue;
    Scalar s = f.mul(c, x[q]);
    for (const auto& [t, v] : a.product(b, q)) acc[t] = f.add(acc[t], f.mul(s, v));
  }
}

void mul_basis_right(const BasedAlgebra& a, const AlgElem& x, size_t b, const Scalar& c, AlgElem& acc) {
  const Field& f = a.field;
  for (size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    Scalar s = f.mul(c, x[p]);
    for (const auto& [t, v] : a.product(p, b)) acc[t] = f.add(acc[t], f.mul(s, v));
  }
}

// writes an algebra element into a column of coordinates
void scatter(const Layout& l, size_t entry, size_t base, const AlgElem& x, Mat& m, size_t col) {
  for (size_t t = 0; t < x.size(); ++t) {
    if (x[t].is_zero()) continue;
    long p = l.pos[entry][t];
    if (p < 0) throw InvariantViolation("product left its corner space");
    m.add_to(base + l.offset[entry] + static_cast<size_t>(p), col, x[t]);
  }
}

struct DegreeLayouts {
  int lo = 0;
  std::vector<Layout> blocks;
  std::vector<size_t> base;
  size_t size = 0;

  const Layout* at(int deg) const {
    if (deg < lo || deg >= lo + static_cast<int>(blocks.size())) return nullptr;
    return &blocks[static_cast<size_t>(deg - lo)];
  }
  size_t base_at(int deg) const { return base[static_cast<size_t>(deg - lo)]; }
};

// layouts of maps X^k -> Y^{k+off} for k over the support of x
DegreeLayouts degree_layouts(const ProjComplex& x, const ProjComplex& y, int off) {
  DegreeLayouts d;
  d.lo = x.lo;
  if (x.is_zero()) return d;
  for (int k = x.lo; k <= x.hi(); ++k) {
    d.base.push_back(d.size);
    d.blocks.push_back(make_layout(x.algebra, y.at(k + off), x.at(k)));
    d.size += d.blocks.back().size;
  }
  return d;
}

std::vector<ProjMat> coords_to_maps(const ProjComplex& x, const ProjComplex& y, const DegreeLayouts& dl,
                                    const Mat& v, size_t col) {
  std::vector<ProjMat> out;
  const auto& a = x.algebra;
  for (size_t k = 0; k < dl.blocks.size(); ++k) {
    const Layout& l = dl.blocks[k];
    ProjMat m(a, l.rows, l.cols);
    for (size_t i = 0; i < l.rows.size(); ++i)
      for (size_t j = 0; j < l.cols.size(); ++j) {
        size_t e = l.entry(i, j);
        for (size_t t = 0; t < l.basis[e].size(); ++t) {
          const Scalar& s = v.at(dl.base[k] + l.offset[e] + t, col);
          if (!s.is_zero()) m.at(i, j)[l.basis[e][t]] = s;
        }
      }
    out.push_back(std::move(m));
  }
  (void)y;
  return out;
}

Mat maps_to_coords(const DegreeLayouts& dl, const std::vector<ProjMat>& maps, const Field& f) {
  Mat v(f, dl.size, 1);
  for (size_t k = 0; k < dl.blocks.size(); ++k) {
    const Layout& l = dl.blocks[k];
    for (size_t i = 0; i < l.rows.size(); ++i)
      for (size_t j = 0; j < l.cols.size(); ++j) scatter(l, l.entry(i, j), dl.base[k], maps[k].at(i, j), v, 0);
  }
  return v;
}

struct HomSystem {
  DegreeLayouts f, eq, h;
  Mat phi;  // chain-map condition, eq x f
  Mat psi;  // homotopy boundary, f x h
};

HomSystem hom_system(const ProjComplex& x, const ProjComplex& y, int n) {
  const auto& a = *x.algebra;
  HomSystem s;
  s.f = degree_layouts(x, y, n);
  s.eq = degree_layouts(x, y, n + 1);
  s.h = degree_layouts(x, y, n - 1);
  const Scalar sg = sign_of(n);
  const Field& fld = a.field;
  s.phi = Mat(fld, s.eq.size, s.f.size);
  s.psi = Mat(fld, s.f.size, s.h.size);
  if (x.is_zero()) return s;
  for (int k = x.lo; k <= x.hi(); ++k) {
    const Layout& fl = *s.f.at(k);
    ProjMat dxm = x.d(k - 1);     // X^{k-1} -> X^k
    ProjMat dy = y.d(k + n);      // Y^{k+n} -> Y^{k+n+1}
    for (size_t i = 0; i < fl.rows.size(); ++i)
      for (size_t j = 0; j < fl.cols.size(); ++j) {
        size_t e = fl.entry(i, j);
        for (size_t t = 0; t < fl.basis[e].size(); ++t) {
          size_t b = fl.basis[e][t];
          size_t col = s.f.base_at(k) + fl.offset[e] + t;
          // f^k d_X^{k-1} lands in equation degree k-1
          if (k - 1 >= x.lo) {
            const Layout& el = *s.eq.at(k - 1);
            for (size_t l = 0; l < dxm.cols(); ++l) {
              if (elem_zero(dxm.at(j, l))) continue;
              AlgElem acc(a.dim());
              mul_basis_left(a, b, dxm.at(j, l), Scalar(1), acc);
              scatter(el, el.entry(i, l), s.eq.base_at(k - 1), acc, s.phi, col);
            }
          }
          // -sign d_Y f^k in equation degree k
          const Layout& el = *s.eq.at(k);
          for (size_t m = 0; m < dy.rows(); ++m) {
            if (elem_zero(dy.at(m, i))) continue;
            AlgElem acc(a.dim());
            mul_basis_right(a, dy.at(m, i), b, fld.neg(sg), acc);
            scatter(el, el.entry(m, j), s.eq.base_at(k), acc, s.phi, col);
          }
        }
      }
    // homotopy h^k : X^k -> Y^{k+n-1}
    const Layout& hl = *s.h.at(k);
    ProjMat dyh = y.d(k + n - 1);  // Y^{k+n-1} -> Y^{k+n}
    for (size_t i = 0; i < hl.rows.size(); ++i)
      for (size_t j = 0; j < hl.cols.size(); ++j) {
        size_t e = hl.entry(i, j);
        for (size_t t = 0; t < hl.basis[e].size(); ++t) {
          size_t b = hl.basis[e][t];
          size_t col = s.h.base_at(k) + hl.offset[e] + t;
          for (size_t m = 0; m < dyh.rows(); ++m) {
            if (elem_zero(dyh.at(m, i))) continue;
            AlgElem acc(a.dim());
            mul_basis_right(a, dyh.at(m, i), b, sg, acc);
            scatter(fl, fl.entry(m, j), s.f.base_at(k), acc, s.psi, col);
          }
          if (k - 1 >= x.lo) {
            const Layout& gl = *s.f.at(k - 1);
            for (size_t l = 0; l < dxm.cols(); ++l) {
              if (elem_zero(dxm.at(j, l))) continue;
              AlgElem acc(a.dim());
              mul_basis_left(a, b, dxm.at(j, l), Scalar(1), acc);
              scatter(gl, gl.entry(i, l), s.f.base_at(k - 1), acc, s.psi, col);
            }
          }
        }
      }
  }
  return s;
}

void same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b && (a->dim() != b->dim() || a->table != b->table))
    throw AlgebraMismatch("complexes over different algebras");
}

// inverse of a unit x of e_v A e_v inside that corner
std::optional<AlgElem> corner_inverse(const AlgebraPtr& a, const AlgElem& x, size_t v) {
  const size_t n = a->dim();
  Mat m(a->field, n, n);
  for (size_t c = 0; c < n; ++c) {
    AlgElem acc(n);
    mul_basis_right(*a, x, c, Scalar(1), acc);
    for (size_t r = 0; r < n; ++r) m.set(r, c, acc[r]);
  }
  Mat rhs(a->field, n, 1);
  rhs.set(a->idempotents[v], 0, Scalar(1));
  auto y = solve(m, rhs);
  if (!y) return std::nullopt;
  AlgElem e(n), out(n);
  e[a->idempotents[v]] = Scalar(1);
  AlgElem yv(n);
  for (size_t r = 0; r < n; ++r) yv[r] = y->at(r, 0);
  out = a->mul(a->mul(e, yv), e);
  if (a->mul(out, x) != e || a->mul(x, out) != e) return std::nullopt;
  return out;
}

bool is_unit_entry(const AlgebraPtr& a, size_t row_v, size_t col_v, const AlgElem& x) {
  if (a->vertex_basis) return row_v == col_v && !x[a->idempotents[row_v]].is_zero();
  return !is_radical_element(a, x);
}

std::vector<size_t> all_but(size_t n, size_t skip) {
  std::vector<size_t> out;
  for (size_t i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

std::vector<size_t> iota(size_t n) {
  std::vector<size_t> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

// ------------------------------------------------------------------ ProjComplex

bool ProjComplex::is_zero() const {
  for (const auto& t : terms)
    if (!t.empty()) return false;
  return true;
}

const std::vector<size_t>& ProjComplex::at(int deg) const {
  if (deg < lo || deg > hi()) return kNone;
  return terms[static_cast<size_t>(deg - lo)];
}

ProjMat ProjComplex::d(int deg) const {
  if (deg >= lo && deg < hi()) return diffs[static_cast<size_t>(deg - lo)];
  return ProjMat(algebra, at(deg + 1), at(deg));
}

std::vector<size_t> ProjComplex::multiplicity(int deg) const {
  std::vector<size_t> m(algebra->num_vertices(), 0);
  for (size_t v : at(deg)) ++m[v];
  return m;
}

size_t ProjComplex::total_dim() const {
  size_t s = 0;
  for (const auto& t : terms) s += free_dim(algebra, t);
  return s;
}

bool ProjComplex::check_d2() const {
  for (size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!(diffs[k + 1] * diffs[k]).is_zero()) return false;
  return true;
}

bool ProjComplex::is_minimal() const {
  for (const auto& d : diffs)
    if (!d.is_radical()) return false;
  return true;
}

void ProjComplex::trim() {
  while (!terms.empty() && terms.front().empty()) {
    terms.erase(terms.begin());
    if (!diffs.empty()) diffs.erase(diffs.begin());
    ++lo;
  }
  while (!terms.empty() && terms.back().empty()) {
    terms.pop_back();
    if (!diffs.empty()) diffs.pop_back();
  }
  if (terms.empty()) lo = 0;
}

std::string ProjComplex::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (int k = lo; k <= hi(); ++k) {
    if (k > lo) {
      os << " --[";
      ProjMat m = d(k - 1);
      for (size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << algebra->element_str(m.at(i, j));
      }
      os << "]--> ";
    }
    os << "(";
    const auto& t = at(k);
    if (t.empty()) os << "0";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "+" : "") << "P" << algebra->vertex_labels[t[i]];
    os << ")@" << k;
  }
  return os.str();
}

ProjComplex stalk(const AlgebraPtr& a, const std::vector<size_t>& verts, int deg) {
  ProjComplex x(a);
  x.lo = deg;
  x.terms = {verts};
  x.trim();
  return x;
}

ProjComplex two_term(const AlgebraPtr& a, size_t source, size_t target, const AlgElem& e, int deg) {
  ProjComplex x(a);
  x.lo = deg;
  x.terms = {{source}, {target}};
  ProjMat d(a, {target}, {source});
  d.at(0, 0) = e;
  x.diffs = {d};
  return x;
}

// ------------------------------------------------------------------ chain maps

const ProjMat* ChainMap::at(int deg) const {
  if (deg < source.lo || deg > source.hi() || source.is_zero()) return nullptr;
  return &comps[static_cast<size_t>(deg - source.lo)];
}

bool ChainMap::is_chain_map() const {
  if (source.is_zero()) return true;
  const Scalar sg = sign_of(shift);
  for (int k = source.lo - 1; k <= source.hi(); ++k) {
    ProjMat lhs = target.d(k + shift).scaled(sg);
    const ProjMat* fk = at(k);
    const ProjMat* fk1 = at(k + 1);
    ProjMat left = fk ? lhs * *fk : ProjMat(source.algebra, target.at(k + shift + 1), source.at(k));
    ProjMat right = fk1 ? *fk1 * source.d(k) : ProjMat(source.algebra, target.at(k + shift + 1), source.at(k));
    if (!(left == right)) return false;
  }
  return true;
}

ChainMap zero_map(const ProjComplex& x, const ProjComplex& y, int shift) {
  ChainMap f{x, y, shift, {}};
  if (!x.is_zero())
    for (int k = x.lo; k <= x.hi(); ++k) f.comps.emplace_back(x.algebra, y.at(k + shift), x.at(k));
  return f;
}

ChainMap identity_map(const ProjComplex& x) {
  ChainMap f{x, x, 0, {}};
  if (!x.is_zero())
    for (int k = x.lo; k <= x.hi(); ++k) f.comps.push_back(ProjMat::identity(x.algebra, x.at(k)));
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (f.shift != 0 || g.shift != 0) throw ShiftMismatch("compose expects degree-0 maps");
  ChainMap out = zero_map(f.source, g.target, 0);
  if (f.source.is_zero()) return out;
  for (int k = f.source.lo; k <= f.source.hi(); ++k) {
    const ProjMat* fk = f.at(k);
    const ProjMat* gk = g.at(k);
    if (fk && gk) out.comps[static_cast<size_t>(k - f.source.lo)] = *gk * *fk;
  }
  return out;
}

// ------------------------------------------------------------------ shift, cone, sum

ProjComplex shift(const ProjComplex& x, int n) {
  ProjComplex y = x;
  y.lo = x.lo - n;
  if (n % 2 != 0)
    for (auto& d : y.diffs) d = d.scaled(Scalar(-1));
  if (y.is_zero()) y.lo = 0;
  return y;
}

ProjComplex cone(const ChainMap& f) {
  if (f.shift != 0) throw ShiftMismatch("cone needs a degree-0 chain map");
  const ProjComplex& x = f.source;
  const ProjComplex& y = f.target;
  same_algebra(x.algebra, y.algebra);
  const auto& a = y.algebra;
  if (x.is_zero()) return y;
  int lo = y.is_zero() ? x.lo - 1 : std::min(y.lo, x.lo - 1);
  int hi = y.is_zero() ? x.hi() - 1 : std::max(y.hi(), x.hi() - 1);
  ProjComplex c(a);
  c.lo = lo;
  auto term = [&](int k) {
    auto t = y.at(k);
    const auto& s = x.at(k + 1);
    t.insert(t.end(), s.begin(), s.end());
    return t;
  };
  for (int k = lo; k <= hi; ++k) c.terms.push_back(term(k));
  for (int k = lo; k < hi; ++k) {
    const ProjMat* fk1 = f.at(k + 1);
    ProjMat fm = fk1 ? *fk1 : ProjMat(a, y.at(k + 1), x.at(k + 1));
    ProjMat top = hstack(y.d(k), fm);
    ProjMat bottom = hstack(ProjMat(a, x.at(k + 2), y.at(k)), x.d(k + 1).scaled(Scalar(-1)));
    c.diffs.push_back(vstack(top, bottom));
  }
  c.trim();
  return c;
}

ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  same_algebra(x.algebra, y.algebra);
  ProjComplex s(x.algebra);
  s.lo = std::min(x.lo, y.lo);
  int hi = std::max(x.hi(), y.hi());
  for (int k = s.lo; k <= hi; ++k) {
    auto t = x.at(k);
    t.insert(t.end(), y.at(k).begin(), y.at(k).end());
    s.terms.push_back(t);
  }
  for (int k = s.lo; k < hi; ++k) s.diffs.push_back(block_diag(x.d(k), y.d(k)));
  return s;
}

// ------------------------------------------------------------------ minimalize

Minimalized minimalize_with_count(const ProjComplex& x0) {
  Minimalized out{x0, 0};
  ProjComplex& x = out.complex;
  const auto& a = x.algebra;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < x.diffs.size() && !changed; ++k) {
      ProjMat& d = x.diffs[k];
      for (size_t i = 0; i < d.rows() && !changed; ++i)
        for (size_t j = 0; j < d.cols() && !changed; ++j) {
          if (!is_unit_entry(a, d.row_vertices[i], d.col_vertices[j], d.at(i, j))) continue;
          size_t v = d.row_vertices[i];
          auto inv = corner_inverse(a, d.at(i, j), v);
          if (!inv) continue;
          auto ro = all_but(d.rows(), i), co = all_but(d.cols(), j);
          ProjMat eps = d.submatrix(ro, co);
          ProjMat gam = d.submatrix(ro, {j});
          ProjMat del = d.submatrix({i}, co);
          ProjMat pinv(a, {v}, {v});
          pinv.at(0, 0) = *inv;
          ProjMat nd = eps - gam * pinv * del;
          if (k > 0) {
            ProjMat& prev = x.diffs[k - 1];
            prev = prev.submatrix(co, iota(prev.cols()));
          }
          if (k + 1 < x.diffs.size()) {
            ProjMat& next = x.diffs[k + 1];
            next = next.submatrix(iota(next.rows()), ro);
          }
          d = nd;
          x.terms[k].erase(x.terms[k].begin() + static_cast<long>(j));
          x.terms[k + 1].erase(x.terms[k + 1].begin() + static_cast<long>(i));
          ++out.cancelled;
          changed = true;
        }
    }
  }
  x.trim();
  return out;
}

ProjComplex minimalize(const ProjComplex& x) { return minimalize_with_count(x).complex; }

// ------------------------------------------------------------------ Hom in K^b

HomotopyClassSpace hom_dim(const ProjComplex& x, const ProjComplex& y, int n, bool with_basis) {
  same_algebra(x.algebra, y.algebra);
  HomotopyClassSpace out;
  if (x.is_zero() || y.is_zero()) return out;
  HomSystem s = hom_system(x, y, n);
  size_t rphi = s.phi.rows() ? rank(s.phi) : 0;
  out.chain_dim = s.f.size - rphi;
  out.nullhomotopic_dim = (s.psi.cols() && s.psi.rows()) ? rank(s.psi) : 0;
  out.dim = out.chain_dim - out.nullhomotopic_dim;
  if (!with_basis || out.dim == 0) return out;
  Mat z = kernel_basis(s.phi.rows() ? s.phi : Mat(s.phi.field(), 1, s.f.size));
  Mat b = s.psi.cols() ? s.psi.columns(independent_columns(s.psi)) : Mat(s.phi.field(), s.f.size, 0);
  Mat cur = b;
  size_t rk = b.cols();
  for (size_t c = 0; c < z.cols() && out.chainmap_basis.size() < out.dim; ++c) {
    Mat trial = hstack(cur, z.column(c));
    if (rank(trial) == rk) continue;
    cur = trial;
    ++rk;
    out.chainmap_basis.push_back({x, y, n, coords_to_maps(x, y, s.f, z, c)});
  }
  return out;
}

// ------------------------------------------------------------------ endomorphism algebra

EndAlgebra end_algebra(const ProjComplex& x, uint64_t seed) {
  if (x.is_zero()) throw ZeroModule("endomorphism algebra of the zero complex");
  HomSystem s = hom_system(x, x, 0);
  const Field& f = x.algebra->field;
  Mat z = kernel_basis(s.phi.rows() ? s.phi : Mat(f, 1, s.f.size));
  Mat b = s.psi.cols() ? s.psi.columns(independent_columns(s.psi)) : Mat(f, s.f.size, 0);
  ChainMap id = identity_map(x);
  Mat idv = maps_to_coords(s.f, id.comps, f);
  Mat cur = b;
  if (rank(hstack(cur, idv)) == cur.cols()) throw ZeroModule("contractible complex");
  std::vector<Mat> reps{idv};
  cur = hstack(cur, idv);
  for (size_t c = 0; c < z.cols(); ++c) {
    Mat trial = hstack(cur, z.column(c));
    if (rank(trial) == cur.cols()) continue;
    cur = trial;
    reps.push_back(z.column(c));
  }
  const size_t d = reps.size();
  Mat basis(f, s.f.size, 0);
  for (const auto& r : reps) basis = hstack(basis, r);
  Mat full = hstack(basis, b);
  EndAlgebra out;
  for (size_t i = 0; i < d; ++i) out.reps.push_back({x, x, 0, coords_to_maps(x, x, s.f, reps[i], 0)});

  auto product_coords = [&](const ChainMap& p, const ChainMap& q) {
    Mat v = maps_to_coords(s.f, compose(p, q).comps, f);
    auto c = solve(full, v);
    if (!c) throw InvariantViolation("composite of chain maps is not a chain map");
    return c->block(0, 0, d, 1);
  };
  std::vector<SparseVec> table(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Mat c = product_coords(out.reps[i], out.reps[j]);
      for (size_t t = 0; t < d; ++t)
        if (!c.at(t, 0).is_zero()) table[i * d + j].emplace_back(t, c.at(t, 0));
    }
  // products must not depend on the representatives
  if (b.cols() > 0) {
    std::mt19937_64 rng(seed);
    auto perturb = [&](size_t i) {
      Mat v = reps[i];
      for (size_t c = 0; c < b.cols(); ++c) {
        Scalar s = f.is_finite() ? Scalar(static_cast<int64_t>(rng() % static_cast<uint64_t>(f.p)))
                                 : Scalar(static_cast<int64_t>(rng() % 7) - 3);
        v = v + b.column(c).scaled(s);
      }
      return ChainMap{x, x, 0, coords_to_maps(x, x, s.f, v, 0)};
    };
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Mat c = product_coords(perturb(i), perturb(j));
        Mat ref(f, d, 1);
        for (const auto& [t, v] : table[i * d + j]) ref.set(t, 0, v);
        if (!(c == ref)) throw InvariantViolation("endomorphism product depends on representatives");
      }
  }
  std::vector<std::string> labels;
  for (size_t i = 0; i < d; ++i) labels.push_back(i == 0 ? "id" : "f" + std::to_string(i));
  out.algebra = make_endomorphism_algebra(f, labels, table);
  if (!check_associative(out.algebra)) throw InvariantViolation("endomorphism algebra is not associative");
  return out;
}

bool is_exceptional(const ProjComplex& x) {
  int amp = x.amplitude();
  for (int m = amp; m >= 1; --m)
    for (int n : {-m, m})
      if (hom_dim(x, x, n).dim != 0) return false;
  return true;
}

// ------------------------------------------------------------------ K^b isomorphism

TriBool kb_isomorphic(const ProjComplex& x, const ProjComplex& y, uint64_t seed, size_t samples) {
  same_algebra(x.algebra, y.algebra);
  if (x.is_zero() && y.is_zero()) return TriBool::yes("both zero");
  if (x.is_zero() != y.is_zero()) return TriBool::no("exactly one complex is zero");
  if (x.lo != y.lo || x.hi() != y.hi()) return TriBool::no("supports differ");
  for (int k = x.lo; k <= x.hi(); ++k)
    if (x.multiplicity(k) != y.multiplicity(k)) return TriBool::no("term multiplicities differ in degree " + std::to_string(k));
  if (x.terms == y.terms) {
    bool same = true;
    for (size_t k = 0; k < x.diffs.size() && same; ++k) same = x.diffs[k] == y.diffs[k];
    if (same) return TriBool::yes("identical complexes");
  }
  size_t hxy = hom_dim(x, y, 0).dim, hyx = hom_dim(y, x, 0).dim;
  size_t hxx = hom_dim(x, x, 0).dim, hyy = hom_dim(y, y, 0).dim;
  if (hxy != hxx || hyx != hxx || hyy != hxx) return TriBool::no("Hom dimensions are not balanced");
  const auto& a = x.algebra;
  const Field& f = a->field;
  HomSystem s = hom_system(x, y, 0);
  Mat z = kernel_basis(s.phi.rows() ? s.phi : Mat(f, 1, s.f.size));
  if (z.cols() == 0) return TriBool::no("no chain maps");
  // a chain map between minimal complexes is a homotopy equivalence iff it is invertible degreewise,
  // which is decided on the tops
  auto invertible = [&](const std::vector<ProjMat>& maps) {
    for (const auto& m : maps) {
      if (m.rows() != m.cols()) return false;
      Mat top(f, m.rows(), m.cols());
      for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
          if (a->vertex_basis) {
            if (m.row_vertices[i] == m.col_vertices[j]) top.set(i, j, m.at(i, j)[a->idempotents[m.row_vertices[i]]]);
          } else {
            top.set(i, j, m.at(i, j)[0]);
          }
        }
      if (!a->vertex_basis) return rank(to_linear(m)) == free_dim(a, m.row_vertices);
      if (rank(top) != m.rows()) return false;
    }
    return true;
  };
  std::mt19937_64 rng(seed);
  const size_t h = z.cols();
  auto try_vec = [&](const Mat& c) { return invertible(coords_to_maps(x, y, s.f, z * c, 0)); };
  for (size_t t = 0; t < h; ++t) {
    Mat c(f, h, 1);
    c.set(t, 0, Scalar(1));
    if (try_vec(c)) return TriBool::yes("degreewise invertible chain map");
  }
  // small fields make invertible samples rare
  const size_t draws = f.is_finite() && f.p < 5 ? samples * 16 : samples;
  for (size_t t = 0; t < draws; ++t) {
    Mat c(f, h, 1);
    for (size_t i = 0; i < h; ++i)
      c.set(i, 0, f.is_finite() ? Scalar(static_cast<int64_t>(rng() % static_cast<uint64_t>(f.p)))
                                : Scalar(static_cast<int64_t>(rng() % 2001) - 1000));
    if (try_vec(c)) return TriBool::yes("degreewise invertible chain map");
  }
  if (f.is_finite()) {
    long double total = 1;
    for (size_t i = 0; i < h; ++i) total *= static_cast<long double>(f.p);
    if (total <= 65536.0L) {
      for (uint64_t code = 1; code < static_cast<uint64_t>(total); ++code) {
        Mat c(f, h, 1);
        uint64_t v = code;
        for (size_t i = 0; i < h; ++i) {
          c.set(i, 0, Scalar(static_cast<int64_t>(v % static_cast<uint64_t>(f.p))));
          v /= static_cast<uint64_t>(f.p);
        }
        if (try_vec(c)) return TriBool::yes("degreewise invertible chain map");
      }
      return TriBool::no("exhaustive search: no chain isomorphism");
    }
  }
  return TriBool::unknown("no chain isomorphism among samples");
}

// ------------------------------------------------------------------ module complexes

bool ModuleComplex::check_d2() const {
  for (size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!(diffs[k + 1] * diffs[k]).is_zero()) return false;
  return true;
}

ModuleComplex stalk_module(const FDModule& m, int deg) {
  ModuleComplex c{m.algebra, deg, {m}, {}};
  return c;
}

ModuleComplex as_module_complex(const ProjComplex& x) {
  ModuleComplex c{x.algebra, x.lo, {}, {}};
  for (const auto& t : x.terms) c.modules.push_back(free_module(x.algebra, t));
  for (const auto& d : x.diffs) c.diffs.push_back(to_linear(d));
  return c;
}

std::map<int, size_t> total_cohomology_dims(const ModuleComplex& c) {
  std::map<int, size_t> out;
  for (size_t k = 0; k < c.modules.size(); ++k) {
    size_t dim = c.modules[k].dim();
    size_t out_rank = k < c.diffs.size() ? rank(c.diffs[k]) : 0;
    size_t in_rank = k > 0 ? rank(c.diffs[k - 1]) : 0;
    out[c.lo + static_cast<int>(k)] = dim - out_rank - in_rank;
  }
  return out;
}

std::map<int, size_t> total_cohomology_dims(const ProjComplex& x) {
  return total_cohomology_dims(as_module_complex(x));
}

namespace {

Mat zero_mat(const Field& f, size_t r, size_t c) { return Mat(f, r, c); }

}  // namespace

ComplexResolution proj_resolve_complex(const ModuleComplex& c, size_t depth) {
  const auto& a = c.algebra;
  const Field& fld = a->field;
  const int clo = c.lo, chi = c.hi();
  auto module_at = [&](int k) -> FDModule {
    if (k < clo || k > chi) return zero_module(a);
    return c.modules[static_cast<size_t>(k - clo)];
  };
  auto dc = [&](int k) -> Mat {  // C^k -> C^{k+1}
    if (k >= clo && k < chi) return c.diffs[static_cast<size_t>(k - clo)];
    return zero_mat(fld, module_at(k + 1).dim(), module_at(k).dim());
  };
  std::map<int, std::vector<size_t>> pterms;
  std::map<int, ProjMat> dp;  // P^k -> P^{k+1}
  std::map<int, Mat> eps;     // free(P^k) -> C^k
  auto pt = [&](int k) -> const std::vector<size_t>& {
    auto it = pterms.find(k);
    return it == pterms.end() ? kNone : it->second;
  };
  auto eps_at = [&](int k) -> Mat {
    auto it = eps.find(k);
    if (it != eps.end()) return it->second;
    return zero_mat(fld, module_at(k).dim(), free_dim(a, pt(k)));
  };
  auto dp_lin = [&](int k) -> Mat {
    auto it = dp.find(k);
    if (it != dp.end()) return to_linear(it->second);
    return zero_mat(fld, free_dim(a, pt(k + 1)), free_dim(a, pt(k)));
  };

  std::vector<FDModule> syz;  // cycles below the complex
  ComplexResolution res;
  int k = chi;
  for (;; --k) {
    FDModule ck = module_at(k);
    const auto& p1 = pt(k + 1);
    FDModule cone_mod = direct_sum(ck, free_module(a, p1));
    const size_t dck = ck.dim(), dp1 = free_dim(a, p1);
    const size_t dck1 = module_at(k + 1).dim(), dp2 = free_dim(a, pt(k + 2));
    Mat dcone(fld, dck1 + dp2, dck + dp1);
    dcone.set_block(0, 0, dc(k));
    dcone.set_block(0, dck, eps_at(k + 1));
    dcone.set_block(dck1, dck, dp_lin(k + 1).scaled(Scalar(-1)));
    Mat inc;
    FDModule z = submodule(cone_mod, kernel_basis(dcone), &inc);
    if (k < clo) {
      if (z.dim() == 0) {
        res.status = PdStatus::finite(static_cast<size_t>(clo - 1 - k));
        break;
      }
      for (size_t j = 0; j < syz.size(); ++j) {
        if (syz[j].dim_vector() != z.dim_vector()) continue;
        if (is_isomorphic(syz[j], z).verdict.is_true()) {
          res.status = PdStatus::periodic(j + 1, syz.size() - j);
          return res;
        }
      }
      syz.push_back(z);
      if (static_cast<size_t>(clo - k) > depth) {
        res.status = PdStatus::exceeded(depth);
        return res;
      }
    }
    // boundaries coming from C^{k-1}
    Mat bnd(fld, z.dim(), 0);
    if (z.dim() > 0 && k - 1 >= clo) {
      Mat img = dc(k - 1);
      Mat emb(fld, dck + dp1, img.cols());
      emb.set_block(0, 0, img);
      auto w = solve(inc, emb);
      if (!w) throw InvariantViolation("boundary is not a cycle");
      bnd = *w;
    }
    Mat proj;
    FDModule q = z.dim() ? quotient(z, bnd, &proj) : z;
    std::vector<size_t> verts;
    Mat e(fld, dck, 0);
    std::vector<AlgElem> entries;
    if (q.dim() > 0) {
      auto pc = projective_cover(q);
      verts = pc.vertices;
      auto off = free_offsets(a, verts);
      ProjMat d(a, p1, verts);
      auto p1off = free_offsets(a, p1);
      for (size_t j = 0; j < verts.size(); ++j) {
        size_t v = verts[j];
        Mat y = pc.map.column(off[j] + idempotent_position(a, v));
        std::vector<size_t> cols;
        for (size_t t = 0; t < z.dim(); ++t)
          if (z.vertex[t] == v) cols.push_back(t);
        auto x = solve(proj.columns(cols), y);
        if (!x) throw InvariantViolation("generator does not lift to the cycles");
        Mat zz(fld, z.dim(), 1);
        for (size_t t = 0; t < cols.size(); ++t) zz.set(cols[t], 0, x->at(t, 0));
        Mat w = inc * zz;
        Mat cpart = w.block(0, 0, dck, 1);
        Mat ppart = w.block(dck, 0, dp1, 1).scaled(Scalar(-1));
        for (size_t b : a->by_left[v]) e = hstack(e, ck.action[b] * cpart);
        for (size_t i = 0; i < p1.size(); ++i) d.at(i, j) = element_from_summand(a, p1[i], ppart, p1off[i]);
      }
      pterms[k] = verts;
      dp.emplace(k, d);
      eps[k] = e;
    }
  }
  ProjComplex p(a);
  int lowest = k + 1;
  p.lo = lowest;
  for (int t = lowest; t <= chi; ++t) p.terms.push_back(pt(t));
  for (int t = lowest; t < chi; ++t) {
    auto it = dp.find(t);
    p.diffs.push_back(it != dp.end() ? it->second : ProjMat(a, pt(t + 1), pt(t)));
  }
  p.trim();
  res.complex = minimalize(p);
  return res;
}

StrictAction strict_action(const ProjComplex& x, const EndAlgebra& e) {
  StrictAction out;
  const auto& ea = e.algebra;
  const size_t d = ea->dim();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      ChainMap prod = compose(e.reps[i], e.reps[j]);
      ChainMap expect = zero_map(x, x, 0);
      for (const auto& [t, c] : ea->product(i, j))
        for (size_t k = 0; k < expect.comps.size(); ++k)
          expect.comps[k] = expect.comps[k] + e.reps[t].comps[k].scaled(c);
      for (size_t k = 0; k < expect.comps.size(); ++k)
        if (!(prod.comps[k] == expect.comps[k])) {
          out.obstruction = "representatives " + std::to_string(i) + "," + std::to_string(j) +
                            " multiply only up to homotopy";
          return out;
        }
    }
  auto eop = opposite(ea);
  ModuleComplex mc{eop, x.lo, {}, {}};
  for (size_t k = 0; k < x.terms.size(); ++k) {
    size_t dim = free_dim(x.algebra, x.terms[k]);
    std::vector<Mat> act;
    for (size_t b = 0; b < d; ++b) act.push_back(to_linear(e.reps[b].comps[k]));
    mc.modules.emplace_back(eop, std::move(act), std::vector<size_t>(dim, 0));
  }
  for (const auto& dd : x.diffs) mc.diffs.push_back(to_linear(dd));
  out.complex = mc;
  return out;
}

ProjComplex resolution_complex(const ResolutionReport& r) {
  if (!r.status.is_finite()) throw NotPerfect(r.status.str());
  ProjComplex x(r.module.algebra);
  const size_t len = r.status.n + 1;
  x.lo = -static_cast<int>(r.status.n);
  for (size_t k = len; k-- > 0;) x.terms.push_back(r.terms[k]);
  for (size_t k = len - 1; k-- > 0;) x.diffs.push_back(r.maps[k]);
  x.trim();
  return x;
}

}  // namespace recolle
