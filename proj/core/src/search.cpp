#include "rsums/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "rsums/errors.hpp"
#include "rsums/parse.hpp"
#include "rsums/rng.hpp"

namespace rsums {

namespace {

uint64_t binomial(uint32_t n, uint32_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __uint128_t c = 1;
  for (uint32_t j = 1; j <= k; ++j) c = c * (n - j + 1) / j;
  return static_cast<uint64_t>(c);
}

GSubset subset_from_mask(const Group& g, uint64_t mask) {
  GSubset s(g);
  while (mask) {
    s.insert(static_cast<uint32_t>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return s;
}

uint64_t next_same_popcount(uint64_t v) {
  // Gosper's hack.
  uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctzll(v) + 1));
}

struct ChunkOutcome {
  GroupTally tally;
  std::vector<TightFingerprint> tights;
};

class Deadline {
 public:
  explicit Deadline(uint64_t budget_ms)
      : enabled_(budget_ms != 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::milliseconds(budget_ms)) {}
  bool exceeded() const {
    return enabled_ && std::chrono::steady_clock::now() > end_;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point end_;
};

/// Runs `count` chunks across `jobs` threads; results land in chunk-index
/// order, so the merged outcome is independent of the thread schedule.
template <typename Fn>
std::vector<ChunkOutcome> run_chunks(uint64_t count, uint32_t jobs,
                                     const Deadline& deadline, Fn&& fn) {
  std::vector<ChunkOutcome> results(count);
  if (count == 0) return results;
  jobs = std::max<uint32_t>(1, jobs);
  std::atomic<uint64_t> cursor{0};
  std::atomic<bool> timed_out{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const uint64_t i = cursor.fetch_add(1);
      if (i >= count || timed_out.load()) return;
      if (deadline.exceeded()) {
        timed_out.store(true);
        return;
      }
      try {
        results[i] = fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        timed_out.store(true);
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (uint32_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  if (timed_out.load()) throw ResourceLimit("survey exceeded its time budget");
  return results;
}

void classify_and_record(const GSubset& a, const GSubset& b, const GSubset& s,
                         ChunkOutcome& out) {
  CriticalWitness w = classify_critical(a, b, s);
  TightFingerprint fp;
  fp.group = a.group().presentation();
  fp.a = a.elements();
  fp.b = b.elements();
  fp.s = s.elements();
  fp.aligned = w.aligned;
  fp.sigma = w.sigma.carrier().elements();
  fp.anchor_s = w.s;
  fp.anchor_bs = w.b_s;
  fp.partner_b = w.b;
  fp.d = w.d;
  fp.k = w.k;
  fp.l = w.l;
  fp.m = w.m;
  fp.reps = w.reps;
  out.tights.push_back(std::move(fp));
}

void evaluate_triple(const GSubset& a, const GSubset& b, const GSubset& s,
                     ChunkOutcome& out) {
  BoundReport r = bound_report(a, b, s);
  ++out.tally.checked;
  switch (r.regime) {
    case Regime::AtThreshold: ++out.tally.at_threshold; break;
    case Regime::AboveThreshold: ++out.tally.above_threshold; break;
    case Regime::BelowThreshold: ++out.tally.below_threshold; break;
  }
  if (r.violation) ++out.tally.violations;
  if (r.tight) {
    ++out.tally.tight;
    classify_and_record(a, b, s, out);
  }
}

SurveyReport finalize(const Group& group, const SearchConfig& config,
                      std::vector<ChunkOutcome> outcomes) {
  SurveyReport report;
  report.config = config;
  GroupTally tally;
  tally.group = group.presentation();
  for (auto& o : outcomes) {
    tally.checked += o.tally.checked;
    tally.at_threshold += o.tally.at_threshold;
    tally.above_threshold += o.tally.above_threshold;
    tally.below_threshold += o.tally.below_threshold;
    tally.infeasible += o.tally.infeasible;
    tally.tight += o.tally.tight;
    tally.violations += o.tally.violations;
    report.tights.insert(report.tights.end(),
                         std::make_move_iterator(o.tights.begin()),
                         std::make_move_iterator(o.tights.end()));
  }
  report.tallies.push_back(std::move(tally));
  return report;
}

bool fingerprint_less(const TightFingerprint& x, const TightFingerprint& y) {
  if (x.group != y.group) return x.group < y.group;
  if (x.s != y.s) return x.s < y.s;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

}  // namespace

std::vector<Group> enumerate_small_groups(uint32_t max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  std::vector<Group> out;
  for (uint32_t n = 1; n <= max_order; ++n) {
    // Partitions of each prime exponent, largest-part-first order.
    std::vector<std::vector<std::vector<uint32_t>>> prime_partitions;
    std::vector<uint32_t> primes;
    uint32_t rem = n;
    for (uint32_t p = 2; p * p <= rem; ++p) {
      if (rem % p) continue;
      uint32_t e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      primes.push_back(p);
      std::vector<std::vector<uint32_t>> parts;
      std::vector<uint32_t> cur;
      auto gen = [&](auto&& self, uint32_t left, uint32_t max_part) -> void {
        if (left == 0) {
          parts.push_back(cur);
          return;
        }
        for (uint32_t next = std::min(left, max_part); next >= 1; --next) {
          cur.push_back(next);
          self(self, left - next, next);
          cur.pop_back();
        }
      };
      gen(gen, e, e);
      prime_partitions.push_back(std::move(parts));
    }
    if (rem > 1) {
      primes.push_back(rem);
      prime_partitions.push_back({{1}});
    }
    if (primes.empty()) {
      out.push_back(Group::product({1}));
      continue;
    }
    // Mix one partition per prime into an invariant-factor chain.
    std::vector<size_t> pick(primes.size(), 0);
    bool done = false;
    while (!done) {
      size_t len = 0;
      for (size_t i = 0; i < primes.size(); ++i)
        len = std::max(len, prime_partitions[i][pick[i]].size());
      std::vector<uint32_t> chain(len, 1);
      for (size_t i = 0; i < primes.size(); ++i) {
        const auto& part = prime_partitions[i][pick[i]];
        for (size_t j = 0; j < part.size(); ++j) {
          uint32_t pw = 1;
          for (uint32_t e = 0; e < part[j]; ++e) pw *= primes[i];
          chain[j] *= pw;
        }
      }
      out.push_back(Group::product(chain));
      done = true;
      for (size_t i = primes.size(); i-- > 0;) {
        if (++pick[i] < prime_partitions[i].size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
    }
  }
  return out;
}

SurveyReport exhaustive_survey(const Group& group, const SearchConfig& config) {
  const uint32_t n = group.order();
  if (n > 30)
    throw ResourceLimit("exhaustive mode is limited to groups of order <= 30");
  const uint32_t s_cap = config.s_size_cap == 0
                             ? n
                             : std::min<uint32_t>(config.s_size_cap, n);

  // Exact work estimate up front; refuse oversized sweeps.
  const uint64_t n_s_masks = (uint64_t{1} << n) - 1;
  {
    uint64_t total = 0;
    for (uint64_t mask = 1; mask <= n_s_masks; ++mask) {
      const uint32_t size = static_cast<uint32_t>(__builtin_popcountll(mask));
      if (size > s_cap) continue;
      uint64_t pairs = 0;
      if (config.at_threshold_only) {
        const uint32_t ls = ls_max(subset_from_mask(group, mask));
        pairs = binomial(2 * n, n + ls);
      } else {
        const uint64_t nonempty = (uint64_t{1} << n) - 1;
        pairs = nonempty * nonempty;
      }
      total += pairs;
      if (total > config.triple_cap)
        throw ResourceLimit("triple space exceeds the exhaustive-mode cap");
    }
  }

  Deadline deadline(config.time_budget_ms);
  // One chunk per contiguous range of S masks.
  const uint64_t chunk_size = std::max<uint64_t>(1, n_s_masks / (config.jobs * 32 + 1));
  const uint64_t n_chunks = (n_s_masks + chunk_size - 1) / chunk_size;

  auto outcomes = run_chunks(n_chunks, config.jobs, deadline, [&](uint64_t ci) {
    ChunkOutcome out;
    const uint64_t lo = 1 + ci * chunk_size;
    const uint64_t hi = std::min(n_s_masks, lo + chunk_size - 1);
    for (uint64_t s_mask = lo; s_mask <= hi; ++s_mask) {
      const uint32_t s_size = static_cast<uint32_t>(__builtin_popcountll(s_mask));
      if (s_size > s_cap) continue;
      GSubset s = subset_from_mask(group, s_mask);
      const uint32_t ls = ls_max(s);
      const uint64_t full = uint64_t{1} << n;
      if (config.at_threshold_only) {
        for (uint32_t alpha = ls; alpha <= n; ++alpha) {
          const uint32_t beta = n + ls - alpha;
          uint64_t a_mask = (uint64_t{1} << alpha) - 1;
          while (a_mask < full) {
            GSubset a = subset_from_mask(group, a_mask);
            uint64_t b_mask = (uint64_t{1} << beta) - 1;
            while (b_mask < full) {
              GSubset b = subset_from_mask(group, b_mask);
              evaluate_triple(a, b, s, out);
              b_mask = next_same_popcount(b_mask);
            }
            a_mask = next_same_popcount(a_mask);
          }
        }
      } else {
        for (uint64_t a_mask = 1; a_mask < full; ++a_mask) {
          GSubset a = subset_from_mask(group, a_mask);
          for (uint64_t b_mask = 1; b_mask < full; ++b_mask) {
            GSubset b = subset_from_mask(group, b_mask);
            evaluate_triple(a, b, s, out);
          }
        }
      }
    }
    return out;
  });

  SurveyReport report = finalize(group, config, std::move(outcomes));
  std::sort(report.tights.begin(), report.tights.end(), fingerprint_less);
  return report;
}

namespace {

std::vector<uint32_t> draw_subset(SplitMix64& rng, uint32_t n, uint32_t size) {
  std::vector<uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (uint32_t j = 0; j < size; ++j) {
    const uint32_t swap_with =
        j + static_cast<uint32_t>(rng.below(n - j));
    std::swap(pool[j], pool[swap_with]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

SurveyReport random_survey(const Group& group, const SearchConfig& config) {
  const uint32_t n = group.order();
  const uint32_t s_cap =
      config.s_size_cap == 0 ? n : std::min<uint32_t>(config.s_size_cap, n);

  // Subset sizes weighted by count, so S is uniform over all non-empty
  // subsets within the cap.
  std::vector<uint64_t> size_cum(s_cap + 1, 0);
  for (uint32_t k = 1; k <= s_cap; ++k)
    size_cum[k] = size_cum[k - 1] + binomial(n, k);
  const uint64_t s_total = size_cum[s_cap];

  Deadline deadline(config.time_budget_ms);
  const uint64_t chunk_size = 256;
  const uint64_t n_chunks = (config.samples + chunk_size - 1) / chunk_size;

  auto outcomes = run_chunks(n_chunks, config.jobs, deadline, [&](uint64_t ci) {
    ChunkOutcome out;
    const uint64_t lo = ci * chunk_size;
    const uint64_t hi = std::min(config.samples, lo + chunk_size);
    for (uint64_t i = lo; i < hi; ++i) {
      SplitMix64 rng(SplitMix64::stream_seed(config.seed, i));
      // S: size by cumulative weight, then a uniform subset of that size.
      const uint64_t r = rng.below(s_total);
      uint32_t s_size = 1;
      while (size_cum[s_size] <= r) ++s_size;
      GSubset s = GSubset::from_indices(group, draw_subset(rng, n, s_size));
      const uint32_t ls = ls_max(s);
      if (static_cast<uint64_t>(n) + ls > 2 * static_cast<uint64_t>(n)) {
        ++out.tally.infeasible;
        continue;
      }
      const uint32_t alpha =
          ls + static_cast<uint32_t>(rng.below(n - ls + 1));
      const uint32_t beta = n + ls - alpha;
      GSubset a = GSubset::from_indices(group, draw_subset(rng, n, alpha));
      GSubset b = GSubset::from_indices(group, draw_subset(rng, n, beta));
      evaluate_triple(a, b, s, out);
    }
    return out;
  });

  SurveyReport report = finalize(group, config, std::move(outcomes));
  std::sort(report.tights.begin(), report.tights.end(), fingerprint_less);
  return report;
}

SurveyReport run_survey(const SearchConfig& config) {
  std::vector<Group> groups;
  if (config.max_order > 0) {
    groups = enumerate_small_groups(config.max_order);
  } else {
    for (const std::string& name : config.groups)
      groups.push_back(parse_group(name));
  }
  if (groups.empty())
    throw std::invalid_argument("survey needs --group or --max-order");

  SurveyReport merged;
  merged.config = config;
  for (const Group& g : groups) {
    SurveyReport part = config.mode == SearchConfig::Mode::Exhaustive
                            ? exhaustive_survey(g, config)
                            : random_survey(g, config);
    merged.tallies.insert(merged.tallies.end(), part.tallies.begin(),
                          part.tallies.end());
    merged.tights.insert(merged.tights.end(),
                         std::make_move_iterator(part.tights.begin()),
                         std::make_move_iterator(part.tights.end()));
  }
  std::sort(merged.tights.begin(), merged.tights.end(), fingerprint_less);
  return merged;
}

}  // namespace rsums
