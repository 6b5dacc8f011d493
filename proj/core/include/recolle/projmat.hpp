#pragma once

#include <vector>

#include "recolle/algebra.hpp"

namespace recolle {

// Map between finitely generated free modules P = (+) P_{col_vertices[j]} -> (+) P_{row_vertices[i]}.
// Entry (i,j) lies in e_{row i} A e_{col j} and acts by left multiplication.
class ProjMat {
 public:
  AlgebraPtr algebra;
  std::vector<size_t> row_vertices;
  std::vector<size_t> col_vertices;
  std::vector<AlgElem> entries;  // row-major

  ProjMat() = default;
  ProjMat(AlgebraPtr a, std::vector<size_t> rows, std::vector<size_t> cols);

  size_t rows() const { return row_vertices.size(); }
  size_t cols() const { return col_vertices.size(); }
  AlgElem& at(size_t i, size_t j) { return entries[i * cols() + j]; }
  const AlgElem& at(size_t i, size_t j) const { return entries[i * cols() + j]; }

  static ProjMat identity(const AlgebraPtr& a, const std::vector<size_t>& verts);
  bool is_zero() const;
  // every entry lies in the Jacobson radical
  bool is_radical() const;
  ProjMat scaled(const Scalar& s) const;
  ProjMat submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;

  friend ProjMat operator*(const ProjMat& x, const ProjMat& y);
  friend ProjMat operator+(const ProjMat& x, const ProjMat& y);
  friend ProjMat operator-(const ProjMat& x, const ProjMat& y);
  friend bool operator==(const ProjMat& x, const ProjMat& y);

  std::string str() const;
};

ProjMat block_diag(const ProjMat& x, const ProjMat& y);
ProjMat hstack(const ProjMat& x, const ProjMat& y);
ProjMat vstack(const ProjMat& x, const ProjMat& y);

// dimension and summand offsets of (+) P_v in by_left coordinates
size_t free_dim(const AlgebraPtr& a, const std::vector<size_t>& verts);
std::vector<size_t> free_offsets(const AlgebraPtr& a, const std::vector<size_t>& verts);
// position of the idempotent e_v inside by_left[v]
size_t idempotent_position(const AlgebraPtr& a, size_t v);

// the k-linear map of x in by_left coordinates
Mat to_linear(const ProjMat& x);
// inverse of to_linear for a linear map that is a module homomorphism
ProjMat from_linear(const AlgebraPtr& a, const std::vector<size_t>& rows, const std::vector<size_t>& cols,
                    const Mat& m);
// coordinates of the element of P_v given in by_left[v] coordinates, as a dense algebra element
AlgElem element_from_summand(const AlgebraPtr& a, size_t v, const Mat& column, size_t offset);

bool is_radical_element(const AlgebraPtr& a, const AlgElem& x);

}  // namespace recolle
