#include "rsums/quotient.hpp"

#include <stdexcept>
#include <string>

#include "rsums/errors.hpp"

namespace rsums {

namespace {

Group build_target(const Group& g, const Subgroup& h,
                   std::vector<uint32_t>& forward,
                   std::vector<uint32_t>& section) {
  if (h.group() != g)
    throw std::invalid_argument("kernel is not a subgroup of the source group");
  const uint32_t n = g.order();
  std::vector<uint32_t> coset_rep(n, n);
  section.clear();
  for (uint32_t x = 0; x < n; ++x) {
    if (coset_rep[x] != n) continue;
    // Ascending scan: x is the smallest index of its coset.
    h.carrier().for_each(
        [&](uint32_t k) { coset_rep[g.add(x, k)] = x; });
    section.push_back(x);
  }
  const uint32_t q = static_cast<uint32_t>(section.size());
  if (static_cast<uint64_t>(q) * h.size() != n)
    throw InvariantViolation("coset fibers do not tile the group");

  std::vector<uint32_t> index_of_rep(n, 0);
  for (uint32_t i = 0; i < q; ++i) index_of_rep[section[i]] = i;
  forward.resize(n);
  for (uint32_t x = 0; x < n; ++x) forward[x] = index_of_rep[coset_rep[x]];

  std::vector<uint32_t> table(static_cast<size_t>(q) * q);
  for (uint32_t i = 0; i < q; ++i)
    for (uint32_t j = 0; j < q; ++j)
      table[static_cast<size_t>(i) * q + j] = forward[g.add(section[i], section[j])];

  std::string label = g.presentation() + "/" + std::to_string(h.size());
  return Group::from_table(std::move(table), std::move(label));
}

}  // namespace

QuotientMap::QuotientMap(const Group& source, const Subgroup& kernel)
    : source_(source),
      kernel_(kernel),
      target_(build_target(source, kernel, forward_, section_)) {}

GSubset QuotientMap::image(const GSubset& source_set) const {
  if (source_set.group() != source_)
    throw std::invalid_argument("subset not over the source group");
  GSubset out(target_);
  source_set.for_each([&](uint32_t x) { out.insert(forward_[x]); });
  return out;
}

GSubset QuotientMap::preimage(const GSubset& target_set) const {
  if (target_set.group() != target_)
    throw std::invalid_argument("subset not over the quotient group");
  GSubset out(source_);
  for (uint32_t x = 0; x < source_.order(); ++x)
    if (target_set.contains(forward_[x])) out.insert(x);
  return out;
}

QuotientMap quotient(const Group& group, const Subgroup& subgroup) {
  if (subgroup.group() != group)
    throw std::invalid_argument("subgroup belongs to a different group");
  return QuotientMap(group, subgroup);
}

}  // namespace rsums
