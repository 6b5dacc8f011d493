#include "recolle/projmat.hpp"

#include <sstream>

namespace recolle {

namespace {

void check_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b && (a->dim() != b->dim() || a->table != b->table))
    throw AlgebraMismatch("projective matrices over different algebras");
}

bool elem_zero(const AlgElem& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

ProjMat::ProjMat(AlgebraPtr a, std::vector<size_t> rows, std::vector<size_t> cols)
    : algebra(std::move(a)), row_vertices(std::move(rows)), col_vertices(std::move(cols)) {
  entries.assign(row_vertices.size() * col_vertices.size(), AlgElem(algebra->dim()));
}

ProjMat ProjMat::identity(const AlgebraPtr& a, const std::vector<size_t>& verts) {
  ProjMat m(a, verts, verts);
  for (size_t i = 0; i < verts.size(); ++i) m.at(i, i)[a->idempotents[verts[i]]] = Scalar(1);
  return m;
}

bool ProjMat::is_zero() const {
  for (const auto& e : entries)
    if (!elem_zero(e)) return false;
  return true;
}

bool is_radical_element(const AlgebraPtr& a, const AlgElem& x) {
  if (a->vertex_basis) {
    for (size_t e : a->idempotents)
      if (!x[e].is_zero()) return false;
    return true;
  }
  if (elem_zero(x)) return true;
  Mat j = radical(a);
  Mat col(a->field, a->dim(), 1);
  for (size_t i = 0; i < a->dim(); ++i) col.set(i, 0, x[i]);
  return rank(hstack(j, col)) == j.cols();
}

bool ProjMat::is_radical() const {
  for (const auto& e : entries)
    if (!is_radical_element(algebra, e)) return false;
  return true;
}

ProjMat ProjMat::scaled(const Scalar& s) const {
  ProjMat out = *this;
  const Field& f = algebra->field;
  for (auto& e : out.entries)
    for (auto& c : e) c = f.mul(c, s);
  return out;
}

ProjMat ProjMat::submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
  std::vector<size_t> rv, cv;
  for (size_t i : rows) rv.push_back(row_vertices[i]);
  for (size_t j : cols) cv.push_back(col_vertices[j]);
  ProjMat out(algebra, rv, cv);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  return out;
}

ProjMat operator*(const ProjMat& x, const ProjMat& y) {
  check_same(x.algebra, y.algebra);
  if (x.cols() != y.rows()) throw DimError("projective matrix product shape mismatch");
  const auto& a = *x.algebra;
  const Field& f = a.field;
  const size_t n = a.dim();
  ProjMat out(x.algebra, x.row_vertices, y.col_vertices);
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t k = 0; k < x.cols(); ++k) {
      const auto& u = x.at(i, k);
      if (elem_zero(u)) continue;
      for (size_t j = 0; j < y.cols(); ++j) {
        const auto& v = y.at(k, j);
        auto& acc = out.at(i, j);
        for (size_t p = 0; p < n; ++p) {
          if (u[p].is_zero()) continue;
          for (size_t q = 0; q < n; ++q) {
            if (v[q].is_zero()) continue;
            Scalar c = f.mul(u[p], v[q]);
            for (const auto& [t, s] : a.product(p, q)) acc[t] = f.add(acc[t], f.mul(c, s));
          }
        }
      }
    }
  return out;
}

ProjMat operator+(const ProjMat& x, const ProjMat& y) {
  check_same(x.algebra, y.algebra);
  if (x.row_vertices != y.row_vertices || x.col_vertices != y.col_vertices)
    throw DimError("projective matrix sum shape mismatch");
  ProjMat out = x;
  const Field& f = x.algebra->field;
  for (size_t e = 0; e < out.entries.size(); ++e)
    for (size_t t = 0; t < out.entries[e].size(); ++t) out.entries[e][t] = f.add(out.entries[e][t], y.entries[e][t]);
  return out;
}

ProjMat operator-(const ProjMat& x, const ProjMat& y) { return x + y.scaled(Scalar(-1)); }

bool operator==(const ProjMat& x, const ProjMat& y) {
  return x.row_vertices == y.row_vertices && x.col_vertices == y.col_vertices && x.entries == y.entries;
}

std::string ProjMat::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows(); ++i) {
    os << "[";
    for (size_t j = 0; j < cols(); ++j) os << (j ? ", " : "") << algebra->element_str(at(i, j));
    os << "]\n";
  }
  return os.str();
}

ProjMat block_diag(const ProjMat& x, const ProjMat& y) {
  check_same(x.algebra, y.algebra);
  auto rv = x.row_vertices, cv = x.col_vertices;
  rv.insert(rv.end(), y.row_vertices.begin(), y.row_vertices.end());
  cv.insert(cv.end(), y.col_vertices.begin(), y.col_vertices.end());
  ProjMat out(x.algebra, rv, cv);
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j);
  for (size_t i = 0; i < y.rows(); ++i)
    for (size_t j = 0; j < y.cols(); ++j) out.at(x.rows() + i, x.cols() + j) = y.at(i, j);
  return out;
}

ProjMat hstack(const ProjMat& x, const ProjMat& y) {
  check_same(x.algebra, y.algebra);
  if (x.row_vertices != y.row_vertices) throw DimError("hstack row mismatch");
  auto cv = x.col_vertices;
  cv.insert(cv.end(), y.col_vertices.begin(), y.col_vertices.end());
  ProjMat out(x.algebra, x.row_vertices, cv);
  for (size_t i = 0; i < x.rows(); ++i) {
    for (size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j);
    for (size_t j = 0; j < y.cols(); ++j) out.at(i, x.cols() + j) = y.at(i, j);
  }
  return out;
}

ProjMat vstack(const ProjMat& x, const ProjMat& y) {
  check_same(x.algebra, y.algebra);
  if (x.col_vertices != y.col_vertices) throw DimError("vstack column mismatch");
  auto rv = x.row_vertices;
  rv.insert(rv.end(), y.row_vertices.begin(), y.row_vertices.end());
  ProjMat out(x.algebra, rv, x.col_vertices);
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j);
  for (size_t i = 0; i < y.rows(); ++i)
    for (size_t j = 0; j < y.cols(); ++j) out.at(x.rows() + i, j) = y.at(i, j);
  return out;
}

size_t free_dim(const AlgebraPtr& a, const std::vector<size_t>& verts) {
  size_t d = 0;
  for (size_t v : verts) d += a->by_left[v].size();
  return d;
}

std::vector<size_t> free_offsets(const AlgebraPtr& a, const std::vector<size_t>& verts) {
  std::vector<size_t> off;
  size_t d = 0;
  for (size_t v : verts) {
    off.push_back(d);
    d += a->by_left[v].size();
  }
  return off;
}

size_t idempotent_position(const AlgebraPtr& a, size_t v) {
  const auto& idx = a->by_left[v];
  for (size_t k = 0; k < idx.size(); ++k)
    if (idx[k] == a->idempotents[v]) return k;
  throw InvariantViolation("idempotent missing from its projective");
}

Mat to_linear(const ProjMat& x) {
  const auto& a = *x.algebra;
  const AlgebraPtr& ap = x.algebra;
  auto ro = free_offsets(ap, x.row_vertices), co = free_offsets(ap, x.col_vertices);
  Mat out(a.field, free_dim(ap, x.row_vertices), free_dim(ap, x.col_vertices));
  std::vector<std::vector<long>> pos(a.num_vertices(), std::vector<long>(a.dim(), -1));
  for (size_t v = 0; v < a.num_vertices(); ++v)
    for (size_t k = 0; k < a.by_left[v].size(); ++k) pos[v][a.by_left[v][k]] = static_cast<long>(k);
  for (size_t j = 0; j < x.cols(); ++j) {
    const auto& src = a.by_left[x.col_vertices[j]];
    for (size_t i = 0; i < x.rows(); ++i) {
      const auto& e = x.at(i, j);
      const auto& tp = pos[x.row_vertices[i]];
      for (size_t p = 0; p < a.dim(); ++p) {
        if (e[p].is_zero()) continue;
        for (size_t k = 0; k < src.size(); ++k)
          for (const auto& [t, c] : a.product(p, src[k])) {
            if (tp[t] < 0) throw InvariantViolation("entry outside its corner space");
            out.add_to(ro[i] + static_cast<size_t>(tp[t]), co[j] + k, a.field.mul(e[p], c));
          }
      }
    }
  }
  return out;
}

AlgElem element_from_summand(const AlgebraPtr& a, size_t v, const Mat& column, size_t offset) {
  AlgElem x(a->dim());
  const auto& idx = a->by_left[v];
  for (size_t k = 0; k < idx.size(); ++k) x[idx[k]] = column.at(offset + k, 0);
  return x;
}

ProjMat from_linear(const AlgebraPtr& a, const std::vector<size_t>& rows, const std::vector<size_t>& cols,
                    const Mat& m) {
  ProjMat out(a, rows, cols);
  auto ro = free_offsets(a, rows), co = free_offsets(a, cols);
  for (size_t j = 0; j < cols.size(); ++j) {
    Mat col = m.column(co[j] + idempotent_position(a, cols[j]));
    for (size_t i = 0; i < rows.size(); ++i) out.at(i, j) = element_from_summand(a, rows[i], col, ro[i]);
  }
  return out;
}

}  // namespace recolle
