#pragma once

#include <cstdint>
#include <vector>

#include "rsums/subgroup.hpp"

namespace rsums {

/**
 * The natural projection pi : G -> G/H for a verified subgroup H.
 *
 * The target is realized as a concrete table group on coset indices. The
 * canonical representative of a coset is its smallest dense index, and
 * target indices are assigned in ascending representative order, so the
 * zero coset is target index 0.
 */
class QuotientMap {
 public:
  QuotientMap(const Group& source, const Subgroup& kernel);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  const Subgroup& kernel() const { return kernel_; }

  /// pi(x).
  uint32_t map(uint32_t x) const { return forward_[x]; }
  /// The canonical preimage representative of a target element.
  uint32_t section(uint32_t q) const { return section_[q]; }

  /// pi(A) as a subset of the target.
  GSubset image(const GSubset& source_set) const;
  /// pi^{-1}(Q): the union of full kernel-cosets over Q.
  GSubset preimage(const GSubset& target_set) const;

 private:
  Group source_;
  Subgroup kernel_;
  std::vector<uint32_t> forward_;
  std::vector<uint32_t> section_;
  Group target_;
};

/// Builds the quotient map G -> G/H. H must be a subgroup of G.
QuotientMap quotient(const Group& group, const Subgroup& subgroup);

}  // namespace rsums
