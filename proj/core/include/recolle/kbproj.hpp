#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recolle/homology.hpp"
#include "recolle/projmat.hpp"

namespace recolle {

// Bounded cochain complex of finitely generated projectives. terms[k] sits in degree lo + k and
// diffs[k] : terms[k] -> terms[k+1].
class ProjComplex {
 public:
  AlgebraPtr algebra;
  int lo = 0;
  std::vector<std::vector<size_t>> terms;
  std::vector<ProjMat> diffs;

  ProjComplex() = default;
  explicit ProjComplex(AlgebraPtr a) : algebra(std::move(a)) {}

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool is_zero() const;
  // empty vertex list outside the support
  const std::vector<size_t>& at(int deg) const;
  // differential out of degree deg (zero map outside the support)
  ProjMat d(int deg) const;
  std::vector<size_t> multiplicity(int deg) const;
  size_t total_dim() const;  // sum of k-dimensions of the terms
  int amplitude() const { return is_zero() ? 0 : hi() - lo; }
  bool check_d2() const;
  bool is_minimal() const;
  // drops zero terms at both ends
  void trim();
  std::string str() const;
};

ProjComplex stalk(const AlgebraPtr& a, const std::vector<size_t>& verts, int deg = 0);
// P_source --x--> P_target placed in degrees deg, deg+1
ProjComplex two_term(const AlgebraPtr& a, size_t source, size_t target, const AlgElem& x, int deg = -1);

// f^k : X^k -> Y^{k+shift}; components indexed from source.lo
struct ChainMap {
  ProjComplex source, target;
  int shift = 0;
  std::vector<ProjMat> comps;

  const ProjMat* at(int deg) const;
  bool is_chain_map() const;
};

ChainMap zero_map(const ProjComplex& x, const ProjComplex& y, int shift = 0);
ChainMap identity_map(const ProjComplex& x);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f, shift 0 only

ProjComplex shift(const ProjComplex& x, int n);
ProjComplex cone(const ChainMap& f);
ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y);

struct Minimalized {
  ProjComplex complex;
  size_t cancelled = 0;  // number of invertible entries cancelled
};
Minimalized minimalize_with_count(const ProjComplex& x);
ProjComplex minimalize(const ProjComplex& x);

struct HomotopyClassSpace {
  size_t dim = 0;
  size_t chain_dim = 0;
  size_t nullhomotopic_dim = 0;
  std::vector<ChainMap> chainmap_basis;  // representatives of a basis of classes
};
// Hom_K(x, y[n]); with_basis = false skips representatives
HomotopyClassSpace hom_dim(const ProjComplex& x, const ProjComplex& y, int n, bool with_basis = false);

struct EndAlgebra {
  AlgebraPtr algebra;         // Endomorphism origin, basis 0 = identity
  std::vector<ChainMap> reps; // chain-map representative per basis element
};
EndAlgebra end_algebra(const ProjComplex& x, uint64_t seed = 1);

bool is_exceptional(const ProjComplex& x);

// isomorphism in K^b of two minimal complexes
TriBool kb_isomorphic(const ProjComplex& x, const ProjComplex& y, uint64_t seed = 1, size_t samples = 24);

// Bounded cochain complex of modules; diffs[k] : modules[k] -> modules[k+1]
struct ModuleComplex {
  AlgebraPtr algebra;
  int lo = 0;
  std::vector<FDModule> modules;
  std::vector<Mat> diffs;

  int hi() const { return lo + static_cast<int>(modules.size()) - 1; }
  bool check_d2() const;
};

ModuleComplex stalk_module(const FDModule& m, int deg = 0);
ModuleComplex as_module_complex(const ProjComplex& x);
std::map<int, size_t> total_cohomology_dims(const ModuleComplex& c);
std::map<int, size_t> total_cohomology_dims(const ProjComplex& x);

struct ComplexResolution {
  PdStatus status;
  std::optional<ProjComplex> complex;  // minimal, present when Finite
};
ComplexResolution proj_resolve_complex(const ModuleComplex& c, size_t depth);
// a finite minimal resolution as a complex in degrees -n..0
ProjComplex resolution_complex(const ResolutionReport& r);

// left E-module structure on the components of x; modules over opposite(E)
struct StrictAction {
  std::optional<ModuleComplex> complex;
  std::string obstruction;
};
StrictAction strict_action(const ProjComplex& x, const EndAlgebra& e);

}  // namespace recolle
