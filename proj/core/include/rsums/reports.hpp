#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rsums/analysis.hpp"
#include "rsums/search.hpp"

namespace rsums {

/**
 * Machine-readable report formats. Every document is a JSON object with
 * "schema_version" (currently 1) and "kind"; keys are emitted sorted, so
 * identical values serialize to identical bytes. Each serializer has a
 * matching parser and parse(serialize(x)) == x.
 */

inline constexpr int kReportSchemaVersion = 1;

/// A triple on disk: the group presentation plus three index arrays.
struct TripleFile {
  std::string group;
  std::vector<uint32_t> a;
  std::vector<uint32_t> b;
  std::vector<uint32_t> s;

  bool operator==(const TripleFile&) const = default;
};

std::string serialize_triple(const TripleFile& triple);
TripleFile parse_triple(std::string_view json_text);
TripleFile to_triple_file(const GSubset& a, const GSubset& b, const GSubset& s);
CriticalTriple materialize(const TripleFile& triple);

/// A construction recipe: everything lift_critical_triple needs. The
/// classifier's witness serializes to a superset of these fields, so a
/// witness file is also a valid recipe.
struct Recipe {
  std::string group;
  std::vector<uint32_t> sigma;
  uint32_t s = 0;
  uint32_t b_s = 0;
  uint32_t b = 0;
  uint32_t k = 0;
  uint32_t l = 0;
  std::vector<uint32_t> reps;

  bool operator==(const Recipe&) const = default;
};

std::string serialize_recipe(const Recipe& recipe);
Recipe parse_recipe(std::string_view json_text);
CriticalTriple build_from_recipe(const Recipe& recipe);

std::string serialize_bound_report(const BoundReport& report);
BoundReport parse_bound_report(std::string_view json_text);

/// Witnesses serialize only over product groups (the CLI surface).
std::string serialize_witness(const CriticalWitness& witness);
CriticalWitness parse_witness(std::string_view json_text);
Recipe witness_recipe(const CriticalWitness& witness);

std::string serialize_survey(const SurveyReport& report);
SurveyReport parse_survey(std::string_view json_text);

const char* regime_name(Regime regime);

}  // namespace rsums
