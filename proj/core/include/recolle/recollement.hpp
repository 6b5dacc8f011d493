#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recolle/kbproj.hpp"

namespace recolle {

// Finite-dimensional bimodule concentrated in one cohomological degree.
// left_action[b] is v -> b v, right_action[b] is v -> v b; the basis is bigraded.
struct Bimodule {
  AlgebraPtr left, right, left_op, right_op;
  std::vector<Mat> left_action, right_action;
  std::vector<size_t> left_vertex, right_vertex;
  int degree = 0;

  size_t dim() const { return left_vertex.size(); }
  FDModule as_right() const;
  // left module as a right module over left_op
  FDModule as_left() const;
  bool check() const;
};

// rebases arbitrary commuting actions onto a bigraded basis
Bimodule make_bimodule(AlgebraPtr left, AlgebraPtr left_op, AlgebraPtr right, AlgebraPtr right_op,
                       std::vector<Mat> left_action, std::vector<Mat> right_action, int degree = 0);
// same space over the opposite algebras with the sides exchanged
Bimodule flip(const Bimodule& v);

struct DualResult {
  PdStatus status;                    // of the side being dualized
  std::map<int, size_t> cohomology;   // of RHom, when computed
  std::optional<Bimodule> dual;       // present when the side is perfect and RHom is concentrated
  std::string note;
};

// RHom over the right algebra into itself, as a right-left bimodule
DualResult dual_right(const Bimodule& v, size_t depth);
// RHom over the left algebra into itself, as a right-left bimodule
DualResult dual_left(const Bimodule& v, size_t depth);

TriBool compact_status(const PdStatus& s, const std::string& what);

struct StratStatus {
  enum class Kind { Certified, Refuted, Unknown };
  Kind kind = Kind::Unknown;
  PdStatus resolution;
  std::vector<std::vector<size_t>> terms;  // multiplicities of the resolution of A/AeA
  size_t tor_degree = 0;                   // Refuted: first nonvanishing Tor
  size_t tor_value = 0;
  std::string evidence;

  bool certified() const { return kind == Kind::Certified; }
  std::string str() const;
};

StratStatus stratifying_status(const AlgebraPtr& a, const std::vector<size_t>& e, size_t depth);

struct IdempotentRecollement {
  AlgebraPtr a, b, c;
  std::vector<size_t> e;
  Bimodule x;    // eA, C-A
  Bimodule xtr;  // Ae, A-C
  Bimodule y;    // A/AeA, B-A
  StratStatus strat;
};

IdempotentRecollement build_recollement(const AlgebraPtr& a, const std::vector<size_t>& e, size_t depth);

struct RestrictionReport {
  TriBool dminus, dbMod, dbmod, kbproj;
  PdStatus pd_b;        // pd_A(A/AeA)
  PdStatus pd_left_c;   // eA as a left C-module
  PdStatus pd_right_c;  // Ae as a right C-module
  TriBool jstar_compact, ishriek_compact;
  std::string note;

  // the implications between flags that hold whenever they are decided
  bool consistent() const;
};

RestrictionReport restriction_report(const IdempotentRecollement& rec, size_t depth);
TriBool jstar_compact(const IdempotentRecollement& rec, size_t depth);
TriBool ishriek_compact(const IdempotentRecollement& rec, size_t depth);

struct TriangleCheck {
  bool ok = false;
  bool candidate_iso = false, t_orthogonal = false, cone_orthogonal = false;
  std::string detail;
};

// g : stalk of A -> tprime. With no candidate, condition (i) only asks that the
// minimal cone(g)[-1] has its terms in add of the terms of t.
TriangleCheck verify_canonical_triangle(const AlgebraPtr& a, const ProjComplex& t, const ProjComplex& tprime,
                                        const ChainMap& g, const std::optional<ProjComplex>& candidate = {});

std::vector<std::vector<size_t>> proper_vertex_subsets(const AlgebraPtr& a);
std::string subset_str(const AlgebraPtr& a, const std::vector<size_t>& e);

}  // namespace recolle
