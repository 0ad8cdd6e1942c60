#include "rsums/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rsums/errors.hpp"

namespace rsums {

std::vector<uint32_t> pair_coset_reps(const Group& group, const Subgroup& h) {
  if (h.group() != group)
    throw std::invalid_argument("subgroup belongs to a different group");
  if (h.size() % 2 == 0)
    throw ConstructionInfeasible("coset pairing requires |H| odd");
  auto [two_g, kernel] = doubling_subgroups(group);
  GSubset covered = sumset(kernel.carrier(), h.carrier());
  std::vector<uint32_t> reps;
  for (uint32_t x = 0; x < group.order(); ++x) {
    if (covered.contains(x)) continue;
    GSubset coset = h.carrier().translated(x);
    GSubset neg_coset = h.carrier().translated(group.neg(x));
    if (coset == neg_coset)
      throw ConstructionInfeasible("coset off K(G)+H is its own negative");
    // Ascending scan: x is the smallest element of the pair's union.
    reps.push_back(x);
    covered = covered | coset | neg_coset;
  }
  const uint32_t d = h.size();
  if (group.order() % d != 0 ||
      reps.size() != (group.order() / d - kernel.size()) / 2)
    throw InvariantViolation("coset pairs do not tile G \\ (K(G)+H)");
  return reps;
}

namespace {

// {0, c, 3c, ..., (d-2)c} + K, the common block of a tight pair. Depends
// only on the coset c + K and on H = <2c>.
GSubset common_block(const Group& g, uint32_t c, uint32_t d,
                     const GSubset& kernel) {
  GSubset block = kernel;  // j = 0
  for (uint32_t j = 1; j + 1 < d; j += 2)
    block = block | kernel.translated(g.scale(j, c));
  return block;
}

}  // namespace

std::pair<GSubset, GSubset> build_critical_pair(const Group& group,
                                                const CriticalPairParams& p) {
  const uint32_t n = group.order();
  if (p.a >= n || p.b >= n) throw std::invalid_argument("a or b out of range");
  const uint32_t c = group.sub(p.b, p.a);
  Subgroup h = Subgroup::cyclic(group, group.dbl(c));
  const uint32_t d = h.size();
  if (d == 1 || d % 2 == 0)
    throw ConstructionInfeasible("<2(b-a)> must have odd order > 1");

  const uint32_t m = p.m();
  if (p.k > m || p.l > m || p.k > p.l)
    throw std::invalid_argument("need 0 <= k <= l <= m");

  auto [two_g, kernel] = doubling_subgroups(group);
  const std::vector<uint32_t> canonical = pair_coset_reps(group, h);
  if (m != canonical.size())
    throw std::invalid_argument("reps count must equal the number of coset pairs");

  // Map every element off K+H to its pair's canonical representative, then
  // require the given reps to hit each pair exactly once.
  std::vector<uint32_t> pair_of(n, n);
  for (uint32_t r : canonical) {
    h.carrier().for_each([&](uint32_t k) {
      pair_of[group.add(r, k)] = r;
      pair_of[group.neg(group.add(r, k))] = r;
    });
  }
  std::vector<bool> used(n, false);
  for (uint32_t x : p.reps) {
    if (x >= n || pair_of[x] == n)
      throw std::invalid_argument("rep lies in K(G)+H or out of range");
    if (used[pair_of[x]])
      throw std::invalid_argument("two reps name the same coset pair");
    used[pair_of[x]] = true;
  }

  GSubset base = common_block(group, c, d, kernel.carrier());
  GSubset a_set = base;
  GSubset b_set = base;
  for (uint32_t i = 0; i < m; ++i) {
    GSubset coset = h.carrier().translated(p.reps[i]);
    GSubset neg_coset = h.carrier().translated(group.neg(p.reps[i]));
    if (i < p.k) {
      a_set = a_set | coset;
      b_set = b_set | coset;
    } else if (i < p.l) {
      a_set = a_set | coset | neg_coset;
    } else {
      b_set = b_set | coset | neg_coset;
    }
  }
  a_set = a_set.translated(p.a);
  b_set = b_set.translated(p.a);

  if (a_set.size() + b_set.size() != n + kernel.size())
    throw InvariantViolation("constructed pair misses |A|+|B| = |G|+L(G)");
  GSubset expected(group);
  expected.insert(group.dbl(p.a));
  expected.insert(group.dbl(p.b));
  if (exceptions(a_set, b_set, GSubset::single(group, 0)) != expected)
    throw InvariantViolation("constructed pair exceptions differ from {2a, 2b}");
  return {std::move(a_set), std::move(b_set)};
}

CriticalTriple lift_critical_triple(const Group& group, const Subgroup& sigma,
                                    uint32_t s, uint32_t b_s,
                                    const CriticalPairParams& quotient_params) {
  if (sigma.group() != group)
    throw std::invalid_argument("sigma belongs to a different group");
  if (s >= group.order() || b_s >= group.order())
    throw std::invalid_argument("s or b_s out of range");
  if (quotient_params.a != 0)
    throw std::invalid_argument("quotient recipes are anchored at a = 0");
  auto [two_g, kernel] = doubling_subgroups(group);
  if (!sigma.carrier().is_subset_of(two_g.carrier()))
    throw std::invalid_argument("sigma must be a subgroup of 2G");

  QuotientMap pi = quotient(group, sigma);
  auto [a_q, b_q] = build_critical_pair(pi.target(), quotient_params);

  GSubset s_set = sigma.carrier().translated(s);
  GSubset a_set = pi.preimage(a_q).translated(group.add(b_s, s));
  GSubset b_set = pi.preimage(b_q).translated(b_s);

  const uint32_t lg = kernel.size();
  if (a_set.size() + b_set.size() !=
      group.order() + s_set.size() * lg)
    throw InvariantViolation("lift misses |A|+|B| = |G| + |S| L(G)");

  const uint32_t b_star = pi.section(quotient_params.b);
  const uint32_t shift = group.dbl(b_s);
  GSubset expected = s_set.translated(shift) |
                     s_set.translated(group.add(group.dbl(b_star), shift));
  if (exceptions(a_set, b_set, s_set) != expected)
    throw InvariantViolation("lifted exceptions differ from (2b_s+S) u (2b*+2b_s+S)");
  return CriticalTriple{std::move(a_set), std::move(b_set), std::move(s_set)};
}

namespace {

GSubset coset_union(const Group& g, const GSubset& h,
                    std::initializer_list<uint32_t> reps) {
  GSubset out(g);
  for (uint32_t r : reps) out = out | h.translated(r);
  return out;
}

}  // namespace

BuiltinExample builtin_example(std::string_view name) {
  if (name == "ex1") {
    Group g = Group::product({15});
    GSubset h = Subgroup::cyclic(g, 5).carrier();
    GSubset base = GSubset::from_indices(g, {0, 5});
    GSubset a = base | h.translated(2);
    GSubset b = base | coset_union(g, h, {2, 4, 1});
    return BuiltinExample{
        "ex1", g, a, b, GSubset::single(g, 0),
        GSubset::from_indices(g, {0, 10})};
  }
  if (name == "ex2") {
    Group g = Group::product({30});
    GSubset h = Subgroup::cyclic(g, 5).carrier();
    GSubset base = GSubset::from_indices(g, {0, 5, 15, 20});
    GSubset a = base | h.translated(2);
    GSubset b = base | coset_union(g, h, {2, 4, 1});
    return BuiltinExample{
        "ex2", g, a, b, GSubset::from_indices(g, {0, 15}),
        GSubset::from_indices(g, {0, 10, 15, 25})};
  }
  if (name == "ex3") {
    Group g = Group::product({45});
    GSubset h = Subgroup::cyclic(g, 5).carrier();
    GSubset base = GSubset::from_indices(g, {0, 5, 15, 20, 30, 35});
    GSubset a = base | h.translated(2);
    GSubset b = base | coset_union(g, h, {2, 4, 1});
    return BuiltinExample{
        "ex3", g, a, b, GSubset::from_indices(g, {0, 15, 30}),
        GSubset::from_indices(g, {0, 10, 15, 25, 30, 40})};
  }
  if (name == "noncoset_s") {
    // Z4 x Z2 with generators a = (1,0), b = (0,1):
    // S = <2a> union (a + K(G)), shift-symmetric but not a coset.
    Group g = Group::product({4, 2});
    const uint32_t gen_a = g.index_of({1, 0});
    GSubset h0 = Subgroup::cyclic(g, g.index_of({2, 0})).carrier();
    GSubset kernel = doubling_subgroups(g).second.carrier();
    GSubset s = h0 | kernel.translated(gen_a);
    return BuiltinExample{"noncoset_s", g, std::nullopt, std::nullopt, s,
                          std::nullopt};
  }
  throw std::invalid_argument("unknown example name: " + std::string(name));
}

ShiftSymmetricClass classify_shift_symmetric(const GSubset& s) {
  if (s.empty()) throw std::invalid_argument("cannot classify the empty set");
  const Group& g = s.group();
  s.for_each([&](uint32_t x) {
    GSubset shifted = s.translated(g.neg(x));
    if (shifted != shifted.negated())
      throw HypothesisNotSatisfied("S - s is not symmetric for s = " +
                                   std::to_string(x));
  });

  // Priority 1: a single coset.
  const uint32_t shift = s.min_element();
  GSubset shifted = s.translated(g.neg(shift));
  if (auto sub = Subgroup::from_carrier(shifted)) {
    return ShiftSymmetricClass{ShiftSymmetricClass::Tag::Coset, std::move(*sub),
                               shift, {}};
  }

  // Priority 2: all differences of order <= 2.
  GSubset differences(g);
  s.for_each([&](uint32_t x) {
    s.for_each([&](uint32_t y) { differences.insert(g.sub(x, y)); });
  });
  GSubset kernel = doubling_subgroups(g).second.carrier();
  if (differences.is_subset_of(kernel)) {
    return ShiftSymmetricClass{ShiftSymmetricClass::Tag::InsideKernel,
                               std::nullopt, std::nullopt, {}};
  }

  // Priority 3: a union of cosets of the stabilizer whose doubled
  // representative differences fall back into the stabilizer.
  GSubset stab = stabilizer(s);
  auto h = Subgroup::from_carrier(stab);
  if (h && h->size() > 1) {
    if (auto reps = coset_split(s, *h)) {
      bool ok = true;
      for (uint32_t r : *reps)
        if (!h->contains(g.dbl(g.sub(r, (*reps)[0])))) ok = false;
      if (ok)
        return ShiftSymmetricClass{ShiftSymmetricClass::Tag::CosetUnion,
                                   std::move(*h), std::nullopt, *reps};
    }
  }
  throw InvariantViolation(
      "shift-symmetric set fits none of the three classification shapes");
}

}  // namespace rsums
