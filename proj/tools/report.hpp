#pragma once

#include <string>

#include "json.hpp"
#include "recolle/ladder.hpp"
#include "recolle/oracle.hpp"
#include "recolle/search.hpp"

namespace recolle::cli {

using Json = nlohmann::ordered_json;

// set when a report contains an undecided verdict
struct Flags {
  bool unknown = false;
  bool disagreement = false;
};
Flags& flags();

Json to_json(const TriBool& t);
Json to_json(const PdStatus& s);
Json to_json(const GlDimStatus& g);
Json to_json(const AlgebraFingerprint& f);
Json to_json(const ProjComplex& x);
Json to_json(const StratStatus& s);
Json to_json(const RestrictionReport& r);
Json to_json(const LadderReport& r);
Json to_json(const SimplicityReport& r);
Json to_json(const ExceptionalCatalog& c);
Json to_json(const StratificationTree& t);
Json to_json(const JHVerdict& v);
Json to_json(const OracleReport& r);

std::string labels(const AlgebraPtr& a, const std::vector<size_t>& mult);

}  // namespace recolle::cli
