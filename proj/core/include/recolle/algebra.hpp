#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recolle/exactla.hpp"
#include "recolle/tribool.hpp"

namespace recolle {

struct Arrow {
  std::string name;
  size_t source = 0;
  size_t target = 0;
};

struct RelationTerm {
  Scalar coeff;
  std::vector<size_t> path;  // arrow indices, traversal order
};

struct QuiverPresentation {
  Field field;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<RelationTerm>> relations;

  size_t arrow_index(const std::string& name) const;
  size_t default_cap() const;
  bool is_monomial() const;
};

struct BasisElement {
  std::string label;
  size_t left = 0;   // e_left * b = b
  size_t right = 0;  // b * e_right = b
  size_t degree = 0;
  std::vector<size_t> path;  // traversal order, Path origin only
};

using SparseVec = std::vector<std::pair<size_t, Scalar>>;
using AlgElem = std::vector<Scalar>;  // dense coordinates over the basis

class BasedAlgebra;
using AlgebraPtr = std::shared_ptr<const BasedAlgebra>;

class BasedAlgebra {
 public:
  enum class Origin { Path, Corner, Quotient, Opposite, Endomorphism };

  Field field;
  std::vector<BasisElement> basis;
  std::vector<std::string> vertex_labels;  // one per primitive idempotent
  std::vector<size_t> idempotents;         // basis index of e_v
  Origin origin = Origin::Path;
  // vertex basis: idempotents are basis elements, every other basis element is radical and
  // vertex-homogeneous. Endomorphism-origin algebras have a single pseudo-vertex (the unit).
  bool vertex_basis = true;
  std::optional<QuiverPresentation> presentation;
  std::vector<SparseVec> table;  // table[i*dim+j] = b_i * b_j
  std::vector<size_t> generators;  // idempotents plus a lift of a basis of J/J^2
  std::vector<std::vector<size_t>> by_left;  // basis indices of e_v A, per vertex
  std::optional<Mat> radical_cache;          // set for non-vertex bases

  size_t dim() const { return basis.size(); }
  size_t num_vertices() const { return idempotents.size(); }
  const SparseVec& product(size_t i, size_t j) const { return table[i * dim() + j]; }

  // dense coordinates helpers
  std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<Scalar> unit() const;
  Mat left_mult(size_t i) const;   // matrix of y -> b_i y
  Mat right_mult(size_t i) const;  // matrix of y -> y b_i
  // indices of basis elements b with e_u b e_w = b
  std::vector<size_t> corner_indices(size_t u, size_t w) const;
  bool is_idempotent_index(size_t i) const;
  std::string element_str(const std::vector<Scalar>& x) const;
  // fills generators and by_left; called by every constructor
  void finalize();
};

struct BuildOptions {
  std::optional<size_t> cap;  // path-length cap
};

AlgebraPtr build_algebra(const QuiverPresentation& q, const BuildOptions& opt = {});
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr corner(const AlgebraPtr& a, const std::vector<size_t>& e);
AlgebraPtr quotient_by_idempotent_ideal(const AlgebraPtr& a, const std::vector<size_t>& e);
// basis indices of A spanned by the corner eAe, in the order used by corner()
std::vector<size_t> corner_embedding(const AlgebraPtr& a, const std::vector<size_t>& e);
// matrix of the projection A -> A/AeA in the bases of build and quotient_by_idempotent_ideal
Mat quotient_projection(const AlgebraPtr& a, const std::vector<size_t>& e);
// vertices of A that survive in A/AeA, in quotient order
std::vector<size_t> quotient_vertices(const AlgebraPtr& a, const std::vector<size_t>& e);
// dimension of the two-sided ideal AeA
size_t ideal_dim(const AlgebraPtr& a, const std::vector<size_t>& e);

// columns span the Jacobson radical (basis coordinates)
Mat radical(const AlgebraPtr& a);
// radical layer dimensions J^i / J^{i+1}
std::vector<size_t> loewy_vector(const AlgebraPtr& a);
size_t center_dim(const AlgebraPtr& a);
bool is_commutative(const AlgebraPtr& a);
// number of simple modules over a splitting field: dim Z(A/J)
size_t num_simples(const AlgebraPtr& a);
std::vector<std::vector<int64_t>> cartan_matrix(const AlgebraPtr& a);
TriBool is_local(const AlgebraPtr& a, uint64_t seed = 1);
// exhaustive associativity check on basis triples
bool check_associative(const AlgebraPtr& a);

struct AlgebraFingerprint {
  size_t dim = 0;
  std::vector<size_t> loewy;
  size_t r = 0;
  bool commutative = false;
  size_t center = 0;
  std::vector<std::vector<int64_t>> cartan;  // canonical under vertex permutation; empty if not basic-vertex
  std::string local;                         // True/False/Unknown

  std::string str() const;
  friend bool operator==(const AlgebraFingerprint& a, const AlgebraFingerprint& b) {
    return a.dim == b.dim && a.loewy == b.loewy && a.r == b.r && a.commutative == b.commutative &&
           a.center == b.center && a.cartan == b.cartan && a.local == b.local;
  }
  friend bool operator<(const AlgebraFingerprint& a, const AlgebraFingerprint& b) { return a.str() < b.str(); }
};

AlgebraFingerprint fingerprint(const AlgebraPtr& a);

// Construct an Endomorphism-origin algebra from a multiplication table; basis 0 must be the unit.
AlgebraPtr make_endomorphism_algebra(Field f, std::vector<std::string> labels, std::vector<SparseVec> table);

std::string path_label(const QuiverPresentation& q, const std::vector<size_t>& path);

}  // namespace recolle
