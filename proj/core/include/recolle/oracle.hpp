#pragma once

#include <string>

#include "recolle/algebra.hpp"

namespace recolle {

class ProjComplex;
class FDModule;

struct OracleReport {
  std::string target;
  std::string instance;
  long long oracle_value = 0;
  long long main_value = 0;
  bool agree() const { return oracle_value == main_value; }
};

// number of paths avoiding every relation path as a contiguous subpath
size_t path_count(const QuiverPresentation& q, size_t cap = 0);

// dim Hom_K(x, y[n]) over F2 by enumerating every degreewise map and every homotopy
size_t hom_bruteforce(const ProjComplex& x, const ProjComplex& y, int n, unsigned long long budget = 1ull << 24);

// dim Tor_i^A(m, n) from the normalized bar resolution over the semisimple part
size_t bar_tor(const FDModule& m, const FDModule& n_left, size_t i);

}  // namespace recolle
