#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsums/analysis.hpp"

namespace rsums {

/**
 * Sweep configuration. Identical configs (including the seed) reproduce
 * identical reports byte for byte; `jobs` only distributes the work and is
 * deliberately excluded from the report echo.
 */
struct SearchConfig {
  std::vector<std::string> groups;  // presentations; used when max_order == 0
  uint32_t max_order = 0;           // enumerate all Abelian groups up to this
  uint32_t s_size_cap = 0;          // 0: no cap beyond |G|
  enum class Mode { Exhaustive, Random } mode = Mode::Random;
  uint64_t samples = 0;  // per group, random mode
  uint64_t seed = 0;
  bool at_threshold_only = true;
  uint64_t triple_cap = uint64_t{1} << 30;  // exhaustive-mode work guard
  uint64_t time_budget_ms = 0;              // 0: unlimited
  uint32_t jobs = 1;
};

struct GroupTally {
  std::string group;
  uint64_t checked = 0;
  uint64_t at_threshold = 0;
  uint64_t above_threshold = 0;
  uint64_t below_threshold = 0;
  uint64_t infeasible = 0;  // random mode: no size split exists
  uint64_t tight = 0;
  uint64_t violations = 0;
};

/// A tight triple found by a sweep, with the classifier's summary.
struct TightFingerprint {
  std::string group;
  std::vector<uint32_t> a;
  std::vector<uint32_t> b;
  std::vector<uint32_t> s;
  bool aligned = true;
  std::vector<uint32_t> sigma;
  uint32_t anchor_s = 0;
  uint32_t anchor_bs = 0;
  uint32_t partner_b = 0;
  uint32_t d = 0;
  uint32_t k = 0;
  uint32_t l = 0;
  uint32_t m = 0;
  std::vector<uint32_t> reps;
};

struct SurveyReport {
  SearchConfig config;
  std::vector<GroupTally> tallies;
  std::vector<TightFingerprint> tights;  // sorted lexicographically
};

/// One product group per isomorphism class of Abelian groups of each order
/// up to max_order, in invariant-factor presentation, deterministic order.
std::vector<Group> enumerate_small_groups(uint32_t max_order);

/// Checks every triple (A, B, S) of the group meeting the constraint
/// (all S, with |S| capped; at-threshold size splits only when configured).
/// Tight triples are classified and recorded. Work beyond triple_cap is
/// refused with ResourceLimit.
SurveyReport exhaustive_survey(const Group& group, const SearchConfig& config);

/// Seeded random sweep: per sample, S is drawn uniformly among non-empty
/// subsets within the size cap, then (|A|, |B|) uniformly among splits of
/// |G| + L_S, then A and B uniformly of those sizes.
SurveyReport random_survey(const Group& group, const SearchConfig& config);

/// Runs the configured survey over all configured groups and merges the
/// per-group reports into one, with fingerprints re-sorted.
SurveyReport run_survey(const SearchConfig& config);

}  // namespace rsums
