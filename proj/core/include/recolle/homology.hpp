#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolle/fdmod.hpp"
#include "recolle/projmat.hpp"

namespace recolle {

struct PdStatus {
  enum class Kind { Finite, Periodic, DepthExceeded };
  Kind kind = Kind::DepthExceeded;
  size_t n = 0;       // Finite: projective dimension; DepthExceeded: depth reached
  size_t pre = 0;     // Periodic: Omega^pre = Omega^(pre+period)
  size_t period = 0;

  static PdStatus finite(size_t n) { return {Kind::Finite, n, 0, 0}; }
  static PdStatus periodic(size_t pre, size_t period) { return {Kind::Periodic, 0, pre, period}; }
  static PdStatus exceeded(size_t depth) { return {Kind::DepthExceeded, depth, 0, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_periodic() const { return kind == Kind::Periodic; }
  std::string str() const;
  friend bool operator==(const PdStatus& a, const PdStatus& b) {
    return a.kind == b.kind && a.n == b.n && a.pre == b.pre && a.period == b.period;
  }
};

struct ProjectiveCover {
  std::vector<size_t> vertices;  // summands of the cover
  Mat map;                       // free_module(vertices) -> m, by_left coordinates
};

ProjectiveCover projective_cover(const FDModule& m);

struct ResolutionReport {
  FDModule module;
  std::vector<std::vector<size_t>> terms;  // summand vertices of P_k
  std::vector<ProjMat> maps;               // maps[k] : P_{k+1} -> P_k
  Mat augmentation;                        // P_0 -> module
  std::vector<FDModule> syzygies;          // syzygies[k] = Omega^k, Omega^0 = module
  std::vector<Mat> inclusions;             // inclusions[k] : Omega^{k+1} -> P_k
  PdStatus status;
  std::optional<Mat> period_certificate;   // Omega^pre -> Omega^(pre+period), invertible

  std::vector<size_t> multiplicity(size_t k) const;
  size_t length() const { return terms.size(); }
};

size_t default_depth(const AlgebraPtr& a);

// depth counts projective terms computed; detect_period = false runs to full depth
ResolutionReport min_resolution(const FDModule& m, size_t depth, bool detect_period = true);
PdStatus pd(const FDModule& m, size_t depth);

struct GlDimStatus {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  size_t n = 0;
  std::string str() const;
};
GlDimStatus gldim(const AlgebraPtr& a, size_t depth);

// nullopt means Unknown
std::optional<size_t> ext_dim(const FDModule& m, const FDModule& n, size_t i, size_t depth);
// n is a left A-module given as a right module over opposite(A)
std::optional<size_t> tor_dim(const FDModule& m, const FDModule& n_left, size_t i, size_t depth);

// chain map P -> P' over phi : res.module -> target.module, degrees 0..len-1
std::vector<ProjMat> lift_map(const ResolutionReport& src, const ResolutionReport& dst, const Mat& phi,
                              size_t len);
std::vector<ProjMat> lift_action(const ResolutionReport& res, const Mat& phi);

// solves x with d x = rhs for maps of free modules (lift along d), or nullopt
std::optional<ProjMat> lift_through(const ProjMat& d, const ProjMat& rhs);

}  // namespace recolle
