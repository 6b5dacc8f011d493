#include <algorithm>

#include "recolle/oracle.hpp"

namespace recolle {

size_t path_count(const QuiverPresentation& q, size_t cap) {
  if (!q.is_monomial()) throw NonMonomial("relations are not single paths");
  if (cap == 0) cap = q.default_cap();
  std::vector<std::vector<size_t>> forbidden;
  for (const auto& rel : q.relations)
    for (const auto& t : rel)
      if (!t.coeff.is_zero()) forbidden.push_back(t.path);
  auto ends_forbidden = [&](const std::vector<size_t>& p) {
    for (const auto& f : forbidden)
      if (f.size() <= p.size() && std::equal(f.rbegin(), f.rend(), p.rbegin())) return true;
    return false;
  };
  size_t total = q.vertices.size();
  std::vector<std::vector<size_t>> layer;
  for (size_t a = 0; a < q.arrows.size(); ++a) layer.push_back({a});
  for (size_t len = 1; !layer.empty(); ++len) {
    if (len > cap) throw InfiniteDimensional("paths of length " + std::to_string(len) + " survive");
    std::vector<std::vector<size_t>> next;
    for (const auto& p : layer) {
      if (ends_forbidden(p)) continue;
      ++total;
      for (size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == q.arrows[p.back()].target) {
          auto np = p;
          np.push_back(a);
          next.push_back(std::move(np));
        }
    }
    layer = std::move(next);
  }
  return total;
}

}  // namespace recolle
