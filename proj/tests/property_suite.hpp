#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "recolle/kbproj.hpp"

namespace props {

using namespace recolle;

struct Tally {
  size_t instances = 0;
  size_t d2_checks = 0;
  size_t hom_checks = 0;
  size_t periodic = 0;
  size_t determinism_checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  std::string str() const {
    return std::to_string(instances) + " instances, " + std::to_string(d2_checks) + " d^2 checks, " +
           std::to_string(hom_checks) + " hom probes, " + std::to_string(periodic) + " periodic certificates, " +
           std::to_string(determinism_checks) + " reruns, " + std::to_string(failures.size()) + " failures";
  }
};

inline const std::vector<std::string>& panel() {
  static const std::vector<std::string> names{"ex43", "ex54", "jh7", "qh3", "a2", "kxk", "dual_numbers", "local4"};
  return names;
}

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  size_t below(size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 1; }

  // random element of e_t A e_s
  AlgElem element(const AlgebraPtr& a, size_t t, size_t s) {
    AlgElem x(a->dim());
    for (size_t i = 0; i < a->dim(); ++i)
      if (a->basis[i].left == t && a->basis[i].right == s && coin()) x[i] = Scalar(1);
    return x;
  }

  ProjMat map(const AlgebraPtr& a, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
    ProjMat m(a, rows, cols);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) m.at(i, j) = element(a, rows[i], cols[j]);
    return m;
  }

  std::vector<size_t> term(const AlgebraPtr& a) {
    std::vector<size_t> t(1 + below(2));
    for (auto& v : t) v = below(a->num_vertices());
    return t;
  }

  ProjComplex complex(const AlgebraPtr& a) {
    ProjComplex x(a);
    x.lo = -static_cast<int>(below(2));
    size_t len = 1 + below(3);
    for (size_t k = 0; k < len; ++k) x.terms.push_back(term(a));
    for (size_t k = 0; k + 1 < len; ++k) {
      ProjMat d = map(a, x.terms[k + 1], x.terms[k]);
      for (int tries = 0; k > 0 && tries < 8 && !(d * x.diffs[k - 1]).is_zero(); ++tries)
        d = map(a, x.terms[k + 1], x.terms[k]);
      if (k > 0 && !(d * x.diffs[k - 1]).is_zero()) d = ProjMat(a, x.terms[k + 1], x.terms[k]);
      x.diffs.push_back(d);
    }
    return x;
  }

  // random combination of a basis of homotopy classes
  ChainMap chain_map(const ProjComplex& x, const ProjComplex& y) {
    auto h = hom_dim(x, y, 0, true);
    ChainMap f = zero_map(x, y);
    for (const auto& b : h.chainmap_basis)
      if (coin())
        for (size_t k = 0; k < f.comps.size(); ++k) f.comps[k] = f.comps[k] + b.comps[k];
    return f;
  }

  FDModule module(const AlgebraPtr& a) {
    size_t v = below(a->num_vertices());
    switch (below(3)) {
      case 0:
        return simple_module(a, v);
      case 1:
        return ideal_quotient_module(a, {v});
      default:
        return dual(projective_module(opposite(a), v), a);
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline bool same_hom_against_probes(const ProjComplex& x, const ProjComplex& y, size_t& checks) {
  const auto& a = x.algebra;
  for (size_t v = 0; v < a->num_vertices(); ++v) {
    auto p = stalk(a, {v});
    for (int n = -1; n <= 1; ++n) {
      checks += 2;
      if (hom_dim(p, x, n).dim != hom_dim(p, y, n).dim) return false;
      if (hom_dim(x, p, n).dim != hom_dim(y, p, n).dim) return false;
    }
  }
  return true;
}

inline bool certificate_verified(const ResolutionReport& r) {
  if (!r.period_certificate) return false;
  const auto& s = r.status;
  if (s.pre + s.period >= r.syzygies.size()) return false;
  const auto& from = r.syzygies[s.pre];
  const auto& to = r.syzygies[s.pre + s.period];
  const Mat& c = *r.period_certificate;
  return from.dim() == to.dim() && c.rows() == to.dim() && c.cols() == from.dim() && rank(c) == from.dim() &&
         is_hom(from, to, c);
}

// Randomized structural checks over F2 on the small example panel.
inline Tally run(uint64_t seed, size_t count) {
  std::vector<AlgebraPtr> algs;
  for (const auto& n : panel()) algs.push_back(fixtures::algebra(n, fixtures::F2()));
  Gen g(seed);
  Tally t;
  auto fail = [&](size_t i, const std::string& what) {
    t.failures.push_back("instance " + std::to_string(i) + ": " + what);
  };
  for (size_t i = 0; i < count; ++i) {
    const auto& a = algs[g.below(algs.size())];
    ++t.instances;
    auto x = g.complex(a);
    auto y = g.complex(a);
    auto f = g.chain_map(x, y);
    if (!f.is_chain_map()) fail(i, "random map is not a chain map");
    auto c = cone(f);
    auto s = shift(c, static_cast<int>(g.below(5)) - 2);
    auto m = minimalize(c);
    t.d2_checks += 4;
    if (!x.check_d2() || !c.check_d2()) fail(i, "d^2 != 0 after cone");
    if (!s.check_d2()) fail(i, "d^2 != 0 after shift");
    if (!m.check_d2() || !m.is_minimal()) fail(i, "minimalize output not a minimal complex");
    if (!same_hom_against_probes(c, m, t.hom_checks)) fail(i, "minimalize changed hom_dim");

    auto mod = g.module(a);
    auto r = min_resolution(mod, default_depth(a));
    if (r.status.is_periodic()) {
      ++t.periodic;
      if (!certificate_verified(r)) fail(i, "periodic status without a verified certificate");
    }

    if (i % 10 == 0) {
      ++t.determinism_checks;
      auto m2 = minimalize(c);
      auto r2 = min_resolution(mod, default_depth(a));
      if (m2.str() != m.str() || r2.status.str() != r.status.str()) fail(i, "rerun differs");
      if (!m.is_zero() && fingerprint(end_algebra(m, seed).algebra) != fingerprint(end_algebra(m, seed).algebra))
        fail(i, "end_algebra rerun differs");
      if (!kb_isomorphic(m, minimalize(shift(s, s.lo - c.lo))).is_true()) fail(i, "shift round trip");
    }
  }
  return t;
}

}  // namespace props
