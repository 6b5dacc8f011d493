#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "recolle/algebra.hpp"

namespace recolle {

// Finite-dimensional right module. Vectors are columns; v.b is action[b] * v, so
// action(b1 b2) = action(b2) action(b1). The basis is vertex-adapted: v e_{vertex[i]} = v.
class FDModule {
 public:
  AlgebraPtr algebra;
  std::vector<Mat> action;
  std::vector<size_t> vertex;

  FDModule() = default;
  FDModule(AlgebraPtr a, std::vector<Mat> act, std::vector<size_t> vert);

  size_t dim() const { return vertex.size(); }
  const Field& field() const { return algebra->field; }
  std::vector<size_t> dim_vector() const;
  std::vector<size_t> indices_at(size_t v) const;
  // action of an arbitrary algebra element
  Mat act(const AlgElem& x) const;
  bool check_module_axioms() const;
};

struct ModuleHom {
  Mat matrix;  // target.dim x source.dim
};

FDModule simple_module(const AlgebraPtr& a, size_t v);
FDModule projective_module(const AlgebraPtr& a, size_t v);
// direct sum of P_v over the listed vertices; basis ordered summand by summand
FDModule free_module(const AlgebraPtr& a, const std::vector<size_t>& vertices);
FDModule zero_module(const AlgebraPtr& a);
// A as a right module over itself
FDModule regular_module(const AlgebraPtr& a);
// A/AeA as a right A-module, e given by vertex indices
FDModule ideal_quotient_module(const AlgebraPtr& a, const std::vector<size_t>& e);
FDModule direct_sum(const FDModule& m, const FDModule& n);
// columns of span generate an invariant subspace; basis is re-chosen vertex-adapted.
// If inclusion is given it receives the matrix of the new basis inside m.
FDModule submodule(const FDModule& m, const Mat& span, Mat* inclusion = nullptr);
// quotient by an invariant subspace; projection receives the quotient map
FDModule quotient(const FDModule& m, const Mat& span, Mat* projection = nullptr);
// k-dual of m, a right module over target (which must be opposite to m's algebra)
FDModule dual(const FDModule& m, const AlgebraPtr& target);
// same space regarded over another algebra with an identical multiplication table
FDModule restrict_to(const FDModule& m, const AlgebraPtr& target);

std::vector<ModuleHom> hom_space(const FDModule& m, const FDModule& n);
bool is_hom(const FDModule& m, const FDModule& n, const Mat& f);

struct IsoResult {
  TriBool verdict;
  std::optional<Mat> iso;      // m -> n
  std::optional<Mat> inverse;  // n -> m, verified
};

IsoResult is_isomorphic(const FDModule& m, const FDModule& n, uint64_t seed = 1, size_t samples = 20);

// layers m J^i / m J^{i+1} as vertex multiplicity vectors
std::vector<std::vector<size_t>> radical_filtration(const FDModule& m);
// basis (columns) of m J
Mat radical_submodule_basis(const FDModule& m);
std::vector<size_t> top_vector(const FDModule& m);

}  // namespace recolle
