#include <unordered_set>

#include "recolle/kbproj.hpp"
#include "recolle/oracle.hpp"

namespace recolle {

namespace {

using Mask = uint64_t;

// one unknown: coefficient of basis element b in entry (row, col) of the map out of degree deg
struct Slot {
  int deg;
  size_t row, col, b;
};

struct F2Complex {
  int lo = 0, hi = -1;
  std::vector<std::vector<size_t>> terms;
  std::vector<std::vector<std::vector<Mask>>> diffs;  // diffs[k][i][j]

  const std::vector<size_t>& at(int k) const {
    static const std::vector<size_t> none;
    return (k < lo || k > hi) ? none : terms[static_cast<size_t>(k - lo)];
  }
  Mask d(int k, size_t i, size_t j) const {
    if (k < lo || k >= hi) return 0;
    return diffs[static_cast<size_t>(k - lo)][i][j];
  }
};

Mask to_mask(const AlgElem& x) {
  Mask m = 0;
  for (size_t t = 0; t < x.size(); ++t)
    if (x[t].small_num() % 2 != 0) m |= Mask(1) << t;
  return m;
}

F2Complex convert(const ProjComplex& x) {
  F2Complex c;
  if (x.is_zero()) return c;
  c.lo = x.lo;
  c.hi = x.hi();
  c.terms = x.terms;
  for (const auto& d : x.diffs) {
    std::vector<std::vector<Mask>> m(d.rows(), std::vector<Mask>(d.cols()));
    for (size_t i = 0; i < d.rows(); ++i)
      for (size_t j = 0; j < d.cols(); ++j) m[i][j] = to_mask(d.at(i, j));
    c.diffs.push_back(std::move(m));
  }
  return c;
}

struct Table {
  size_t n;
  std::vector<Mask> prod;  // prod[p*n+q]
  Mask mul(Mask x, Mask y) const {
    Mask r = 0;
    for (size_t p = 0; p < n; ++p)
      if (x >> p & 1)
        for (size_t q = 0; q < n; ++q)
          if (y >> q & 1) r ^= prod[p * n + q];
    return r;
  }
};

std::vector<Slot> slots(const BasedAlgebra& a, const F2Complex& x, const F2Complex& y, int off) {
  std::vector<Slot> s;
  for (int k = x.lo; k <= x.hi; ++k)
    for (size_t i = 0; i < y.at(k + off).size(); ++i)
      for (size_t j = 0; j < x.at(k).size(); ++j)
        for (size_t b = 0; b < a.dim(); ++b) {
          bool inside = false;
          for (size_t u : a.corner_indices(y.at(k + off)[i], x.at(k)[j]))
            if (u == b) inside = true;
          if (inside) s.push_back({k, i, j, b});
        }
  return s;
}

// degreewise maps as dense entry masks: maps[deg - x.lo][i][j]
using Maps = std::vector<std::vector<std::vector<Mask>>>;

Maps blank(const F2Complex& x, const F2Complex& y, int off) {
  Maps m;
  for (int k = x.lo; k <= x.hi; ++k)
    m.emplace_back(y.at(k + off).size(), std::vector<Mask>(x.at(k).size(), 0));
  return m;
}

Maps decode(const F2Complex& x, const F2Complex& y, int off, const std::vector<Slot>& s, uint64_t code) {
  Maps m = blank(x, y, off);
  for (size_t t = 0; t < s.size(); ++t)
    if (code >> t & 1) m[static_cast<size_t>(s[t].deg - x.lo)][s[t].row][s[t].col] |= Mask(1) << s[t].b;
  return m;
}

Mask entry(const Maps& m, const F2Complex& x, int k, size_t i, size_t j) {
  if (k < x.lo || k > x.hi) return 0;
  return m[static_cast<size_t>(k - x.lo)][i][j];
}

}  // namespace

size_t hom_bruteforce(const ProjComplex& xc, const ProjComplex& yc, int n, unsigned long long budget) {
  const auto& a = *xc.algebra;
  if (!a.field.is_finite() || a.field.p != 2) throw FieldMismatch("brute force runs over F2");
  if (a.dim() > 64) throw TooLarge("algebra too large for the brute-force oracle");
  if (xc.is_zero() || yc.is_zero()) return 0;
  Table tb{a.dim(), std::vector<Mask>(a.dim() * a.dim(), 0)};
  for (size_t p = 0; p < a.dim(); ++p)
    for (size_t q = 0; q < a.dim(); ++q)
      for (const auto& [t, v] : a.product(p, q))
        if (v.small_num() % 2 != 0) tb.prod[p * a.dim() + q] ^= Mask(1) << t;
  F2Complex x = convert(xc), y = convert(yc);
  auto fs = slots(a, x, y, n);
  auto hs = slots(a, x, y, n - 1);
  if (fs.size() >= 40 || hs.size() >= 40 ||
      (1ull << fs.size()) + (1ull << hs.size()) > budget)
    throw CapTooLarge("brute force needs 2^" + std::to_string(fs.size()) + " + 2^" +
                      std::to_string(hs.size()) + " candidates");

  // chain maps: f^{k+1} d_X^k = d_Y^{k+n} f^k (signs vanish over F2)
  auto is_chain = [&](const Maps& f) {
    for (int k = x.lo - 1; k <= x.hi; ++k) {
      const auto& src = x.at(k);
      const auto& tgt = y.at(k + n + 1);
      for (size_t i = 0; i < tgt.size(); ++i)
        for (size_t j = 0; j < src.size(); ++j) {
          Mask acc = 0;
          for (size_t l = 0; l < x.at(k + 1).size(); ++l)
            acc ^= tb.mul(entry(f, x, k + 1, i, l), x.d(k, l, j));
          for (size_t l = 0; l < y.at(k + n).size(); ++l)
            acc ^= tb.mul(y.d(k + n, i, l), entry(f, x, k, l, j));
          if (acc) return false;
        }
    }
    return true;
  };
  size_t chains = 0;
  for (uint64_t code = 0; code < (1ull << fs.size()); ++code)
    if (is_chain(decode(x, y, n, fs, code))) ++chains;

  // null-homotopic maps d_Y h + h d_X, encoded back into f coordinates
  std::unordered_set<uint64_t> bounds;
  for (uint64_t code = 0; code < (1ull << hs.size()); ++code) {
    Maps h = decode(x, y, n - 1, hs, code);
    uint64_t img = 0;
    for (size_t t = 0; t < fs.size(); ++t) {
      const Slot& s = fs[t];
      Mask acc = 0;
      for (size_t l = 0; l < y.at(s.deg + n - 1).size(); ++l)
        acc ^= tb.mul(y.d(s.deg + n - 1, s.row, l), entry(h, x, s.deg, l, s.col));
      for (size_t l = 0; l < x.at(s.deg + 1).size(); ++l)
        acc ^= tb.mul(entry(h, x, s.deg + 1, s.row, l), x.d(s.deg, l, s.col));
      if (acc >> s.b & 1) img |= 1ull << t;
    }
    bounds.insert(img);
  }
  size_t lz = 0, lb = 0;
  while ((1ull << lz) < chains) ++lz;
  while ((1ull << lb) < bounds.size()) ++lb;
  return lz - lb;
}

}  // namespace recolle
