#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cancelkit/conics.hpp"
#include "cancelkit/conjugacy.hpp"
#include "cancelkit/decider.hpp"
#include "cancelkit/polyring.hpp"
#include "cancelkit/witness.hpp"

namespace cancelkit {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::json;  // std::map objects: keys come out sorted

struct RunConfig {
  std::string command;
  std::string field = "t";
  std::string generators;
  int depth = 3;
  long degree_cap = 10000;
  long word_cap = 100000;
  long height_bound = 3;
  int pairs = 5;
  int iterate_j = 1;
  bool prover = true;
  unsigned threads = 1;
  std::optional<std::string> output_path;
};

Json to_json(const RunConfig& c);
Json to_json(const FieldElement& a);
Json to_json(const KPoly& f);
Json to_json(const Point& p);
Json to_json(const NormalFormReport& r);
Json to_json(const Conic& c);
Json to_json(const ConicVerdict& v);
Json to_json(const ObstructionWitness& w);
Json to_json(const AbsenceProof& p);
Json to_json(const DecisionReport& r);
Json to_json(const PairSample& p);
Json to_json(const ChebyshevExpansion<FieldElement>& e);

/// Two-space indented dump with a trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace cancelkit
