#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recolle/recollement.hpp"

namespace recolle {

// RECOLLE_BUDGET, or 2^22
uint64_t search_budget();

struct ExceptionalEntry {
  ProjComplex complex;       // minimal, lowest term in degree 0
  size_t end_dim = 0;
  AlgebraFingerprint end_fingerprint;
  std::string certificate;
};

struct ExceptionalCatalog {
  AlgebraPtr algebra;
  size_t max_len = 0, max_mult = 0;
  std::vector<ExceptionalEntry> entries;
  // bookkeeping
  size_t shapes = 0, pruned_shapes = 0;
  uint64_t search_space = 0, complexes = 0, exceptional_raw = 0;
  std::vector<std::string> evidence;  // pairwise non-isomorphism and dedup notes
  std::string note;
};

// a must be over a finite field; budget 0 means search_budget()
ExceptionalCatalog enumerate_exceptional(const AlgebraPtr& a, size_t max_len, size_t max_mult, uint64_t seed = 1,
                                         uint64_t budget = 0);

struct StratNode {
  AlgebraPtr algebra;
  AlgebraFingerprint fp;
  enum class Kind { Internal, SimpleCertified, Unresolved };
  Kind kind = Kind::Unresolved;
  std::string edge;        // idempotent used at an internal node
  std::string evidence;
  int quotient = -1;       // child A/AeA
  int corner = -1;         // child eAe
};

struct StratificationTree {
  std::vector<StratNode> nodes;   // nodes[0] is the root
  std::string signature() const;
  std::vector<const StratNode*> leaves() const;
  bool resolved() const;
};

std::vector<StratificationTree> stratification_trees(const AlgebraPtr& a, size_t depth, size_t recursion_limit = 8);

struct JHVerdict {
  enum class Kind { Holds, Fails, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<std::string> first, second;   // sorted leaf fingerprints
  std::string reason;
  const char* name() const;
};

JHVerdict jh_compare(const StratificationTree& t1, const StratificationTree& t2);

std::string to_dot(const StratificationTree& t, const std::string& name = "stratification");

}  // namespace recolle
