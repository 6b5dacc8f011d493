#pragma once

#include <optional>
#include <string>

#include "recolle/algebra.hpp"
#include "recolle/kbproj.hpp"

namespace recolle {

QuiverPresentation parse_presentation(const std::string& json_text, std::optional<Field> field_override = {});
QuiverPresentation load_presentation(const std::string& path, std::optional<Field> field_override = {});
std::string presentation_to_json(const QuiverPresentation& q);
Field parse_field(const std::string& spec);  // "Q", "F2", "Fp:3", "3"

// {"lo": int, "terms": [[vertex label, ...], ...], "diffs": [[[entry, ...], ...], ...]}; an entry is a
// dense coefficient list over the algebra basis or an object {basis label: coefficient}
std::string complex_to_json(const ProjComplex& x);
ProjComplex parse_complex(const AlgebraPtr& a, const std::string& json_text);
// "P2" (stalk at a vertex label), "P1+P2", or a path to a complex JSON file
ProjComplex load_complex(const AlgebraPtr& a, const std::string& spec);

}  // namespace recolle
