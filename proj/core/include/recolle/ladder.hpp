#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recolle/recollement.hpp"

namespace recolle {

TriBool extend_down(const IdempotentRecollement& rec, size_t depth);
TriBool extend_up(const IdempotentRecollement& rec, size_t depth);

enum class Side { Left, Right };

// RHom over the chosen side into its ring; throws NotPerfect unless that side has a finite resolution
DualResult derived_dual(const Bimodule& x, Side side, size_t depth);

struct LadderStep {
  TriBool verdict;
  PdStatus status;                // one-sided resolution deciding the step
  std::optional<Bimodule> dual;   // the bimodule X_n whose side was resolved
  std::string side;               // "A" or "C", and left/right
};

struct LadderReport {
  IdempotentRecollement base;
  std::vector<LadderStep> up_steps, down_steps;
  size_t height_lower_bound = 1;
  TriBool complete_up, complete_down;

  std::string str() const;
};

LadderReport ladder_heights(const IdempotentRecollement& rec, size_t m, size_t depth);

// derived Nakayama functor on K^b(proj A), gldim A finite
ProjComplex nakayama(const AlgebraPtr& a, const ProjComplex& x, size_t depth);
// D(Ae_v) as a right A-module
FDModule injective_module(const AlgebraPtr& a, size_t v);

struct SearchBounds {
  size_t depth = 0;   // 0: default_depth of the algebra
  size_t ladder_steps = 3;
};

struct LevelVerdict {
  enum class Kind { SimpleCertified, NotSimple, NoWitnessFound };
  Kind kind = Kind::NoWitnessFound;
  std::string detail;   // reason, witness or bounds
  const char* name() const;
};

struct SimplicityReport {
  LevelVerdict dmod, dminus, kb;   // D(Mod), D^-(Mod), K^b(proj) / D^b
  size_t best_height = 0;
  std::vector<std::pair<std::string, size_t>> witnesses;   // idempotent, certified height
};

SimplicityReport simplicity_report(const AlgebraPtr& a, const SearchBounds& bounds);

}  // namespace recolle
