#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rsums/subset.hpp"

namespace rsums {

/**
 * A subset certified closed under addition and negation, together with a
 * generator witness whose closure is the carrier.
 */
class Subgroup {
 public:
  /// {0}.
  static Subgroup trivial(const Group& group);

  /// Closure of the given generators.
  static Subgroup closure(const Group& group, std::vector<uint32_t> generators);

  /// {0, x, 2x, ...}.
  static Subgroup cyclic(const Group& group, uint32_t x);

  /// Certifies an arbitrary carrier by scanning for closure; empty if the
  /// set is not a subgroup. A greedy generator witness is computed.
  static std::optional<Subgroup> from_carrier(const GSubset& carrier);

  const GSubset& carrier() const { return carrier_; }
  const Group& group() const { return carrier_.group(); }
  uint32_t size() const { return carrier_.size(); }
  bool contains(uint32_t x) const { return carrier_.contains(x); }
  const std::vector<uint32_t>& generators() const { return generators_; }

  bool operator==(const Subgroup& other) const { return carrier_ == other.carrier_; }

 private:
  Subgroup(GSubset carrier, std::vector<uint32_t> generators)
      : carrier_(std::move(carrier)), generators_(std::move(generators)) {}
  GSubset carrier_;
  std::vector<uint32_t> generators_;
};

/// True iff 0 is in T and T + T is contained in T. In a finite group this
/// already forces closure under negation.
bool is_subgroup(const GSubset& set);

/// The complete subgroup lattice, deduplicated and sorted by
/// (size, carrier elements lexicographic). Computed by closing joins of
/// cyclic subgroups to a fixed point. Groups larger than max_order are
/// rejected with ResourceLimit.
std::vector<Subgroup> all_subgroups(const Group& group, uint32_t max_order = 512);

/// (2*G, K(G)): the image and kernel of the doubling map x -> 2x.
/// |2*G| * |K(G)| = |G|.
std::pair<Subgroup, Subgroup> doubling_subgroups(const Group& group);

}  // namespace rsums
