#include "rsums/subgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rsums/errors.hpp"

namespace rsums {

namespace {

GSubset close_under_addition(const Group& g, const std::vector<uint32_t>& gens) {
  GSubset carrier(g);
  carrier.insert(0);
  std::vector<uint32_t> frontier{0};
  for (uint32_t gen : gens) {
    if (!carrier.contains(gen)) {
      carrier.insert(gen);
      frontier.push_back(gen);
    }
  }
  // Worklist closure; negation closure is implied by finiteness.
  for (size_t i = 0; i < frontier.size(); ++i) {
    for (uint32_t gen : gens) {
      uint32_t s = g.add(frontier[i], gen);
      if (!carrier.contains(s)) {
        carrier.insert(s);
        frontier.push_back(s);
      }
    }
  }
  return carrier;
}

std::vector<uint32_t> greedy_generators(const GSubset& carrier) {
  const Group& g = carrier.group();
  std::vector<uint32_t> gens;
  GSubset covered(g);
  covered.insert(0);
  carrier.for_each([&](uint32_t x) {
    if (!covered.contains(x)) {
      gens.push_back(x);
      covered = close_under_addition(g, gens);
    }
  });
  return gens;
}

}  // namespace

Subgroup Subgroup::trivial(const Group& group) {
  return Subgroup(GSubset::single(group, 0), {});
}

Subgroup Subgroup::closure(const Group& group, std::vector<uint32_t> generators) {
  GSubset carrier = close_under_addition(group, generators);
  return Subgroup(std::move(carrier), std::move(generators));
}

Subgroup Subgroup::cyclic(const Group& group, uint32_t x) {
  GSubset carrier(group);
  uint32_t y = 0;
  do {
    carrier.insert(y);
    y = group.add(y, x);
  } while (y != 0);
  return Subgroup(std::move(carrier), x == 0 ? std::vector<uint32_t>{}
                                             : std::vector<uint32_t>{x});
}

std::optional<Subgroup> Subgroup::from_carrier(const GSubset& carrier) {
  if (!is_subgroup(carrier)) return std::nullopt;
  return Subgroup(carrier, greedy_generators(carrier));
}

bool is_subgroup(const GSubset& set) {
  if (!set.contains(0)) return false;
  const Group& g = set.group();
  bool closed = true;
  set.for_each([&](uint32_t a) {
    if (!closed) return;
    set.for_each([&](uint32_t b) {
      if (closed && !set.contains(g.add(a, b))) closed = false;
    });
  });
  return closed;
}

std::vector<Subgroup> all_subgroups(const Group& group, uint32_t max_order) {
  if (group.order() > max_order)
    throw ResourceLimit("group too large for subgroup enumeration");

  // Distinct cyclic subgroups seed the lattice; joins of subgroups are
  // sumsets of their carriers, so the fixed point needs no inner closure.
  std::vector<GSubset> cyclics;
  for (uint32_t x = 1; x < group.order(); ++x) {
    GSubset c = Subgroup::cyclic(group, x).carrier();
    if (std::find(cyclics.begin(), cyclics.end(), c) == cyclics.end())
      cyclics.push_back(std::move(c));
  }

  auto join = [&](const GSubset& a, const GSubset& b) {
    GSubset out(group);
    a.for_each([&](uint32_t x) {
      b.for_each([&](uint32_t y) { out.insert(group.add(x, y)); });
    });
    return out;
  };

  std::vector<GSubset> found{GSubset::single(group, 0)};
  for (size_t i = 0; i < found.size(); ++i) {
    for (const GSubset& c : cyclics) {
      GSubset j = join(found[i], c);
      if (std::find(found.begin(), found.end(), j) == found.end())
        found.push_back(std::move(j));
    }
  }

  std::sort(found.begin(), found.end(), [](const GSubset& a, const GSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return GSubset::lex_less(a, b);
  });

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const GSubset& carrier : found) {
    auto sg = Subgroup::from_carrier(carrier);
    if (!sg) throw InvariantViolation("lattice closure produced a non-subgroup");
    out.push_back(std::move(*sg));
  }
  return out;
}

std::pair<Subgroup, Subgroup> doubling_subgroups(const Group& group) {
  GSubset image(group);
  GSubset kernel(group);
  for (uint32_t x = 0; x < group.order(); ++x) {
    uint32_t d = group.dbl(x);
    image.insert(d);
    if (d == 0) kernel.insert(x);
  }
  auto two_g = Subgroup::from_carrier(image);
  auto k = Subgroup::from_carrier(kernel);
  if (!two_g || !k)
    throw InvariantViolation("doubling image/kernel failed subgroup check");
  if (static_cast<uint64_t>(two_g->size()) * k->size() != group.order())
    throw InvariantViolation("|2G| * |K(G)| != |G|");
  return {std::move(*two_g), std::move(*k)};
}

}  // namespace rsums
