#include <map>

#include "recolle/fdmod.hpp"
#include "recolle/oracle.hpp"

namespace recolle {

namespace {

struct BarTerm {
  std::vector<std::vector<size_t>> tuples;  // (m index, radical basis..., n index)
  std::map<std::vector<size_t>, size_t> index;
};

BarTerm bar_term(const FDModule& m, const FDModule& n, const std::vector<size_t>& rad, size_t i) {
  const auto& a = *m.algebra;
  BarTerm t;
  std::vector<size_t> cur;
  // extend a partial tuple whose last vertex is v
  auto rec = [&](auto&& self, size_t depth_left, size_t v) -> void {
    if (depth_left == 0) {
      for (size_t y = 0; y < n.dim(); ++y)
        if (n.vertex[y] == v) {
          cur.push_back(y);
          t.index[cur] = t.tuples.size();
          t.tuples.push_back(cur);
          cur.pop_back();
        }
      return;
    }
    for (size_t b : rad)
      if (a.basis[b].left == v) {
        cur.push_back(b);
        self(self, depth_left - 1, a.basis[b].right);
        cur.pop_back();
      }
  };
  for (size_t x = 0; x < m.dim(); ++x) {
    cur = {x};
    rec(rec, i, m.vertex[x]);
  }
  return t;
}

// differential B_i -> B_{i-1}
Mat bar_differential(const FDModule& m, const FDModule& n, const BarTerm& src, const BarTerm& dst, size_t i) {
  const auto& a = *m.algebra;
  const Field& f = m.field();
  Mat d(f, dst.tuples.size(), src.tuples.size());
  for (size_t c = 0; c < src.tuples.size(); ++c) {
    const auto& tup = src.tuples[c];
    // m a_1 (x) a_2 ... (x) n
    {
      const Mat& act = m.action[tup[1]];
      for (size_t x = 0; x < m.dim(); ++x) {
        const Scalar& s = act.at(x, tup[0]);
        if (s.is_zero()) continue;
        auto nt = tup;
        nt.erase(nt.begin() + 1);
        nt[0] = x;
        auto it = dst.index.find(nt);
        if (it != dst.index.end()) d.add_to(it->second, c, s);
      }
    }
    // inner products a_k a_{k+1}, sign (-1)^k
    for (size_t k = 1; k < i; ++k) {
      Scalar sign = (k % 2) ? Scalar(-1) : Scalar(1);
      for (const auto& [t, s] : a.product(tup[k], tup[k + 1])) {
        auto nt = tup;
        nt.erase(nt.begin() + static_cast<long>(k) + 1);
        nt[k] = t;
        auto it = dst.index.find(nt);
        if (it != dst.index.end()) d.add_to(it->second, c, f.mul(sign, s));
      }
    }
    // a_i n with sign (-1)^i
    {
      Scalar sign = (i % 2) ? Scalar(-1) : Scalar(1);
      const Mat& act = n.action[tup[i]];
      for (size_t y = 0; y < n.dim(); ++y) {
        const Scalar& s = act.at(y, tup[i + 1]);
        if (s.is_zero()) continue;
        auto nt = tup;
        nt.erase(nt.begin() + static_cast<long>(i));
        nt.back() = y;
        auto it = dst.index.find(nt);
        if (it != dst.index.end()) d.add_to(it->second, c, f.mul(sign, s));
      }
    }
  }
  return d;
}

}  // namespace

size_t bar_tor(const FDModule& m, const FDModule& n_left, size_t i) {
  const auto& a = *m.algebra;
  if (!a.vertex_basis) throw AlgebraMismatch("bar oracle needs a vertex basis");
  std::vector<size_t> rad;
  for (size_t b = 0; b < a.dim(); ++b)
    if (!a.is_idempotent_index(b)) rad.push_back(b);
  BarTerm ti = bar_term(m, n_left, rad, i);
  size_t out = ti.tuples.size();
  if (i > 0) {
    BarTerm lo = bar_term(m, n_left, rad, i - 1);
    out -= rank(bar_differential(m, n_left, ti, lo, i));
  }
  BarTerm hi = bar_term(m, n_left, rad, i + 1);
  out -= rank(bar_differential(m, n_left, hi, ti, i + 1));
  return out;
}

}  // namespace recolle
