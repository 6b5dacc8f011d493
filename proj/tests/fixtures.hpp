#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "recolle/algebra.hpp"
#include "recolle/io.hpp"

#ifndef RECOLLE_DATA_DIR
#define RECOLLE_DATA_DIR "data"
#endif

namespace fixtures {

inline recolle::QuiverPresentation quiver(const std::string& name, std::optional<recolle::Field> f = {}) {
  return recolle::load_presentation(std::string(RECOLLE_DATA_DIR) + "/" + name + ".json", f);
}

inline recolle::AlgebraPtr algebra(const std::string& name, std::optional<recolle::Field> f = {}) {
  return recolle::build_algebra(quiver(name, f));
}

inline recolle::Field F2() { return recolle::Field::prime(2); }

}  // namespace fixtures

namespace fixtures {

// basis element with the given label as a dense element
inline recolle::AlgElem elem(const recolle::AlgebraPtr& a, const std::string& label) {
  recolle::AlgElem x(a->dim());
  for (size_t i = 0; i < a->dim(); ++i)
    if (a->basis[i].label == label) {
      x[i] = recolle::Scalar(1);
      return x;
    }
  throw std::invalid_argument("no basis element " + label);
}

}  // namespace fixtures
