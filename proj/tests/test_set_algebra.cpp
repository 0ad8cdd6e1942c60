#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rsums/constructions.hpp>
#include <rsums/rng.hpp>
#include <rsums/search.hpp>
#include <rsums/set_algebra.hpp>

#include "oracles.hpp"

using namespace rsums;

namespace {

GSubset set_of(const Group& g, std::vector<uint32_t> xs) {
  return GSubset::from_indices(g, xs);
}

oracle::Set to_oracle(const GSubset& s) {
  auto e = s.elements();
  return oracle::Set(e.begin(), e.end());
}

GSubset random_subset(const Group& g, SplitMix64& rng, uint32_t size) {
  GSubset out(g);
  while (out.size() < size)
    out.insert(static_cast<uint32_t>(rng.below(g.order())));
  return out;
}

}  // namespace

TEST_CASE("sumsets") {
  Group z15 = Group::product({15});
  CHECK(sumset(set_of(z15, {0, 5}), set_of(z15, {0, 5})) == set_of(z15, {0, 5, 10}));

  // |A| + |B| > |G| forces the full group.
  GSubset half_range = set_of(z15, {0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(sumset(half_range, half_range) == GSubset::full(z15));

  GSubset a = set_of(z15, {1, 2, 7});
  CHECK(sumset(a, GSubset::single(z15, 0)) == a);
  CHECK(sumset(a, GSubset(z15)).empty());

  Group z5 = Group::product({5});
  CHECK_THROWS_AS(sumset(a, GSubset::full(z5)), std::invalid_argument);
}

TEST_CASE("restricted sumsets") {
  // First worked data set: Z15, S = {0}, H = <5>,
  // A = {0,5} u (2+H), B = {0,5} u (2+H) u (4+H) u (1+H).
  BuiltinExample ex = builtin_example("ex1");
  GSubset result = restricted_sumset(*ex.a, *ex.b, ex.s);
  CHECK(result == set_of(ex.group, {0, 10}).complement());

  Group z7 = Group::product({7});
  CHECK(restricted_sumset(GSubset::single(z7, 0), GSubset::single(z7, 0),
                          GSubset::single(z7, 0))
            .empty());

  // Empty S reduces to the plain sumset.
  GSubset a = set_of(z7, {1, 3}), b = set_of(z7, {2, 4});
  CHECK(restricted_sumset(a, b, GSubset(z7)) == sumset(a, b));
}

TEST_CASE("restricted sumset against the reference loop") {
  SplitMix64 rng(11);
  for (auto orders : {std::vector<uint32_t>{12}, {4, 2}, {9}, {2, 2, 3}}) {
    Group g = Group::product(orders);
    for (int trial = 0; trial < 50; ++trial) {
      GSubset a = random_subset(g, rng, 1 + rng.below(g.order()));
      GSubset b = random_subset(g, rng, 1 + rng.below(g.order()));
      GSubset s = random_subset(g, rng, 1 + rng.below(4));
      CHECK(to_oracle(restricted_sumset(a, b, s)) ==
            oracle::restricted_sumset(orders, to_oracle(a), to_oracle(b),
                                      to_oracle(s)));
      CHECK(to_oracle(sumset(a, b)) ==
            oracle::sumset(orders, to_oracle(a), to_oracle(b)));
    }
  }
}

TEST_CASE("representation counts") {
  Group z15 = Group::product({15});
  GSubset full = GSubset::full(z15);
  for (uint32_t z = 0; z < 15; ++z) CHECK(nu(full, full, z) == 15);

  BuiltinExample ex = builtin_example("ex1");
  for (uint32_t u : {1, 6, 11}) CHECK(nu(*ex.a, *ex.b, u) == 5);

  GSubset a = set_of(z15, {0, 1});
  GSubset b = set_of(z15, {5});
  CHECK(nu(a, b, 3) == 0);

  // Total representations count |A| * |B|.
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    GSubset ra = random_subset(z15, rng, 1 + rng.below(15));
    GSubset rb = random_subset(z15, rng, 1 + rng.below(15));
    uint64_t total = 0;
    for (uint32_t z = 0; z < 15; ++z) total += nu(ra, rb, z);
    CHECK(total == static_cast<uint64_t>(ra.size()) * rb.size());
  }
}

TEST_CASE("doubling constants") {
  CHECK(doubling_constant(Group::product({15})) == 1);
  CHECK(doubling_constant(Group::product({30})) == 2);
  CHECK(doubling_constant(Group::product({4, 2})) == 4);
  // L(G) equals the largest fiber of the doubling map.
  for (const Group& g : enumerate_small_groups(24)) {
    std::vector<uint32_t> fiber(g.order(), 0);
    uint32_t largest = 0;
    for (uint32_t x = 0; x < g.order(); ++x)
      largest = std::max(largest, ++fiber[g.dbl(x)]);
    CHECK(doubling_constant(g) == largest);
  }
}

TEST_CASE("pair-count examples") {
  Group z45 = Group::product({45});
  GSubset s45 = set_of(z45, {0, 15, 30});
  CHECK(ls_at(s45, 0, LsMethod::Brute) == 3);
  CHECK(ls_at(s45, 0, LsMethod::Formula) == 3);

  Group z30 = Group::product({30});
  GSubset s30 = set_of(z30, {0, 15});
  CHECK(ls_at(s30, 1, LsMethod::Brute) == 2);
  CHECK(ls_at(s30, 1, LsMethod::Formula) == 2);
  CHECK(oracle::ls_pairs({30}, {0, 15}, 1) == 2);

  // S = {0} in an odd group: one pair for every z.
  Group z9 = Group::product({9});
  for (uint32_t z = 0; z < 9; ++z)
    CHECK(ls_at(GSubset::single(z9, 0), z) == 1);
}

TEST_CASE("brute and formula routes agree, with the mean-value identity") {
  SplitMix64 rng(2024);
  for (const Group& g : enumerate_small_groups(20)) {
    for (int trial = 0; trial < 10; ++trial) {
      GSubset s = random_subset(g, rng, 1 + rng.below(g.order()));
      uint64_t sum = 0;
      for (uint32_t z = 0; z < g.order(); ++z) {
        uint32_t brute = ls_at(s, z, LsMethod::Brute);
        CHECK(brute == ls_at(s, z, LsMethod::Formula));
        sum += brute;
      }
      CHECK(sum == static_cast<uint64_t>(s.size()) * g.order());
    }
  }
  // And against the literal pair loop on a couple of groups.
  for (auto orders : {std::vector<uint32_t>{10}, {4, 2}}) {
    Group g = Group::product(orders);
    for (int trial = 0; trial < 5; ++trial) {
      GSubset s = random_subset(g, rng, 1 + rng.below(g.order()));
      for (uint32_t z = 0; z < g.order(); ++z)
        CHECK(ls_at(s, z) == oracle::ls_pairs(orders, to_oracle(s), z));
    }
  }
}

TEST_CASE("maximum pair counts") {
  Group z15 = Group::product({15});
  CHECK(ls_max(GSubset::single(z15, 0)) == 1);
  Group z30 = Group::product({30});
  CHECK(ls_max(set_of(z30, {0, 15})) == 2);
  Group z45 = Group::product({45});
  CHECK(ls_max(set_of(z45, {0, 15, 30})) == 3);
  CHECK_THROWS_AS(ls_max(GSubset(z15)), std::invalid_argument);

  SplitMix64 rng(5);
  for (const Group& g : enumerate_small_groups(18)) {
    const uint32_t lg = doubling_constant(g);
    for (int trial = 0; trial < 10; ++trial) {
      GSubset s = random_subset(g, rng, 1 + rng.below(g.order()));
      const uint32_t ls = ls_max(s);
      uint32_t direct = 0;
      for (uint32_t z = 0; z < g.order(); ++z)
        direct = std::max(direct, ls_at(s, z, LsMethod::Brute));
      CHECK(ls == direct);
      CHECK(ls >= s.size());
      CHECK(ls <= s.size() * lg);
      CHECK(ls % lg == 0);
      // When the maximum is full, S sits inside one coset of 2G.
      if (ls == s.size() * lg) CHECK(decompose_mod_2g(s).size() == 1);
    }
  }
}

TEST_CASE("half sets") {
  Group z30 = Group::product({30});
  CHECK(half(GSubset::single(z30, 0)) == set_of(z30, {0, 15}));
  Group z15 = Group::product({15});
  GSubset h = set_of(z15, {0, 5, 10});
  CHECK(half(h) == h);
  Group z42 = Group::product({4, 2});
  CHECK(half(GSubset::single(z42, z42.index_of({1, 0}))).empty());

  // |H(T)| = L(G) * |T intersect 2G|.
  SplitMix64 rng(17);
  for (const Group& g : enumerate_small_groups(16)) {
    auto [two_g, kernel] = doubling_subgroups(g);
    for (int trial = 0; trial < 10; ++trial) {
      GSubset t = random_subset(g, rng, rng.below(g.order() + 1));
      CHECK(half(t).size() == kernel.size() * (t & two_g.carrier()).size());
    }
  }
}

TEST_CASE("dilation") {
  Group z15 = Group::product({15});
  CHECK(dilate(-1, set_of(z15, {1, 2})) == set_of(z15, {14, 13}));
  Group z30 = Group::product({30});
  CHECK(dilate(2, GSubset::full(z30)) == doubling_subgroups(z30).first.carrier());
  CHECK(dilate(3, GSubset::single(z15, 5)) == GSubset::single(z15, 0));
}

TEST_CASE("symmetric decomposition") {
  Group z30 = Group::product({30});
  auto d30 = sym_decomp(set_of(z30, {0, 15}));
  CHECK(d30.core == set_of(z30, {0, 15}));
  CHECK(d30.diff.empty());

  Group z45 = Group::product({45});
  auto d45 = sym_decomp(set_of(z45, {0, 15, 30}));
  CHECK(d45.core == set_of(z45, {0, 15, 30}));
  CHECK(d45.diff.empty());

  Group z5 = Group::product({5});
  auto d5 = sym_decomp(set_of(z5, {1, 2}));
  CHECK(d5.core.empty());
  CHECK(d5.diff == set_of(z5, {1, 2, 3, 4}));

  // core and diff partition S u -S.
  SplitMix64 rng(3);
  for (const Group& g : enumerate_small_groups(12)) {
    for (int trial = 0; trial < 10; ++trial) {
      GSubset s = random_subset(g, rng, rng.below(g.order() + 1));
      auto d = sym_decomp(s);
      CHECK((d.core | d.diff) == (s | s.negated()));
      CHECK((d.core & d.diff).empty());
    }
  }
}

TEST_CASE("exception sets of the worked examples") {
  for (auto [name, expected] :
       {std::pair<const char*, std::vector<uint32_t>>{"ex1", {0, 10}},
        {"ex2", {0, 10, 15, 25}},
        {"ex3", {0, 10, 15, 25, 30, 40}}}) {
    BuiltinExample ex = builtin_example(name);
    CHECK(exceptions(*ex.a, *ex.b, ex.s) == set_of(ex.group, expected));
  }
}

TEST_CASE("coset splits") {
  Group z15 = Group::product({15});
  Subgroup h = Subgroup::cyclic(z15, 5);
  GSubset blocks = h.carrier().translated(2) | h.carrier().translated(4) |
                   h.carrier().translated(1);
  auto reps = coset_split(blocks, h);
  REQUIRE(reps.has_value());
  CHECK(*reps == std::vector<uint32_t>{1, 2, 4});

  CHECK_FALSE(coset_split(set_of(z15, {0, 5}), h).has_value());
  CHECK_FALSE(coset_split(set_of(z15, {0, 5, 10, 1, 6, 12}), h).has_value());

  auto all = coset_split(GSubset::full(z15), h);
  REQUIRE(all.has_value());
  CHECK(*all == std::vector<uint32_t>{0, 1, 2, 3, 4});
}

TEST_CASE("restricted sumsets sit inside sumsets") {
  SplitMix64 rng(23);
  Group g = Group::product({14});
  GSubset zero = GSubset::single(g, 0);
  for (int trial = 0; trial < 100; ++trial) {
    GSubset a = random_subset(g, rng, 1 + rng.below(7));
    GSubset b = random_subset(g, rng, 1 + rng.below(7));
    GSubset restricted = restricted_sumset(a, b, zero);
    CHECK(restricted.is_subset_of(sumset(a, b)));
    if ((a & b).empty()) CHECK(restricted == sumset(a, b));
  }
}

TEST_CASE("stabilizers") {
  Group z15 = Group::product({15});
  GSubset h = set_of(z15, {0, 5, 10});
  CHECK(stabilizer(h) == h);
  CHECK(stabilizer(GSubset::full(z15)) == GSubset::full(z15));
  Group z5 = Group::product({5});
  CHECK(stabilizer(set_of(z5, {0, 1})) == GSubset::single(z5, 0));
}

TEST_CASE("decomposition modulo 2G") {
  Group z30 = Group::product({30});
  auto classes = decompose_mod_2g(set_of(z30, {0, 15}));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == GSubset::single(z30, 0));
  CHECK(classes[1] == GSubset::single(z30, 15));

  Group z45 = Group::product({45});
  auto whole = decompose_mod_2g(set_of(z45, {0, 15, 30}));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == set_of(z45, {0, 15, 30}));

  auto single = decompose_mod_2g(GSubset::single(z30, 0));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == GSubset::single(z30, 0));
}
