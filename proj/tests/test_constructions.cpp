#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rsums/constructions.hpp>
#include <rsums/errors.hpp>
#include <rsums/search.hpp>

using namespace rsums;

namespace {

GSubset set_of(const Group& g, std::vector<uint32_t> xs) {
  return GSubset::from_indices(g, xs);
}

}  // namespace

TEST_CASE("coset pair representatives") {
  Group z15 = Group::product({15});
  Subgroup h15 = Subgroup::cyclic(z15, 5);
  CHECK(pair_coset_reps(z15, h15) == std::vector<uint32_t>{1, 2});

  Group z30 = Group::product({30});
  Subgroup h30 = Subgroup::cyclic(z30, 10);
  auto reps30 = pair_coset_reps(z30, h30);
  CHECK(reps30.size() == 4);  // (|G|/d - |K|)/2 = (10 - 2)/2
  CHECK(reps30 == std::vector<uint32_t>{1, 2, 3, 4});

  Group z3 = Group::product({3});
  CHECK(pair_coset_reps(z3, Subgroup::cyclic(z3, 1)).empty());

  // Even |H| breaks the pairing hypotheses.
  CHECK_THROWS_AS(pair_coset_reps(z30, Subgroup::cyclic(z30, 15)),
                  ConstructionInfeasible);
}

TEST_CASE("coset pairs tile the complement of K(G)+H") {
  for (auto orders : {std::vector<uint32_t>{15}, {30}, {45}, {21}, {3, 3}}) {
    Group g = Group::product(orders);
    for (const Subgroup& h : all_subgroups(g)) {
      if (h.size() % 2 == 0) continue;
      auto [two_g, kernel] = doubling_subgroups(g);
      auto reps = pair_coset_reps(g, h);
      GSubset covered = sumset(kernel.carrier(), h.carrier());
      uint64_t tiles = 0;
      for (uint32_t r : reps) {
        GSubset pos = h.carrier().translated(r);
        GSubset neg = h.carrier().translated(g.neg(r));
        CHECK_FALSE(covered.intersects(pos));
        CHECK_FALSE(covered.intersects(neg));
        CHECK_FALSE(pos.intersects(neg));
        covered = covered | pos | neg;
        tiles += 2 * h.size();
      }
      CHECK(covered == GSubset::full(g));
      CHECK(tiles + kernel.size() * h.size() == g.order());
    }
  }
}

TEST_CASE("tight pair construction reproduces the first worked example") {
  Group z15 = Group::product({15});
  auto [a, b] = build_critical_pair(z15, CriticalPairParams{0, 5, 1, 1, {2, 1}});
  BuiltinExample ex = builtin_example("ex1");
  CHECK(a == *ex.a);
  CHECK(b == *ex.b);
  CHECK(exceptions(a, b, GSubset::single(z15, 0)) == set_of(z15, {0, 10}));
}

TEST_CASE("tight pair construction validates its hypotheses") {
  Group z12 = Group::product({12});
  // <2(b-a)> = <6> has order 2.
  CHECK_THROWS_AS(build_critical_pair(z12, CriticalPairParams{0, 3, 0, 0, {}}),
                  ConstructionInfeasible);
  // b = a gives the trivial subgroup.
  Group z15 = Group::product({15});
  CHECK_THROWS_AS(build_critical_pair(z15, CriticalPairParams{2, 2, 0, 0, {}}),
                  ConstructionInfeasible);
  // Wrong rep count.
  CHECK_THROWS_AS(build_critical_pair(z15, CriticalPairParams{0, 5, 0, 0, {1}}),
                  std::invalid_argument);
  // Two reps naming the same pair: 1 and 4 are exchanged by negation mod <5>.
  CHECK_THROWS_AS(
      build_critical_pair(z15, CriticalPairParams{0, 5, 0, 0, {1, 4}}),
      std::invalid_argument);
  // k > l.
  CHECK_THROWS_AS(build_critical_pair(z15, CriticalPairParams{0, 5, 2, 1, {1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("every valid build lands exactly on the size threshold") {
  for (auto orders : {std::vector<uint32_t>{9}, {15}, {21}, {6}, {12}}) {
    Group g = Group::product(orders);
    const uint32_t lg = doubling_constant(g);
    for (uint32_t b = 1; b < g.order(); ++b) {
      Subgroup h = Subgroup::cyclic(g, g.dbl(b));
      if (h.size() == 1 || h.size() % 2 == 0) continue;
      auto reps = pair_coset_reps(g, h);
      const uint32_t m = static_cast<uint32_t>(reps.size());
      for (uint32_t k = 0; k <= m; ++k) {
        for (uint32_t l = k; l <= m; ++l) {
          auto [a_set, b_set] =
              build_critical_pair(g, CriticalPairParams{0, b, k, l, reps});
          CHECK(a_set.size() + b_set.size() == g.order() + lg);
          CHECK(a_set.contains(0));
          CHECK(b_set.contains(b));
        }
      }
    }
  }
}

TEST_CASE("lift with trivial sigma reduces to the plain construction") {
  Group z15 = Group::product({15});
  CriticalPairParams params{0, 5, 1, 1, {2, 1}};
  CriticalTriple lifted =
      lift_critical_triple(z15, Subgroup::trivial(z15), 0, 0, params);
  auto [a, b] = build_critical_pair(z15, params);
  CHECK(lifted.a == a);
  CHECK(lifted.b == b);
  CHECK(lifted.s == GSubset::single(z15, 0));

  // Shifting s and b_s translates the construction.
  CriticalTriple shifted =
      lift_critical_triple(z15, Subgroup::trivial(z15), 3, 7, params);
  CHECK(shifted.s == GSubset::single(z15, 3));
  CHECK(shifted.a == a.translated(10));
  CHECK(shifted.b == b.translated(7));
}

TEST_CASE("lift through Z45 reproduces the third worked example") {
  Group z45 = Group::product({45});
  Subgroup sigma = Subgroup::cyclic(z45, 15);
  // The quotient is order 15 with representative indices 0..14, so the
  // first example's parameters apply verbatim.
  CriticalTriple lifted =
      lift_critical_triple(z45, sigma, 0, 0, CriticalPairParams{0, 5, 1, 1, {2, 1}});
  BuiltinExample ex = builtin_example("ex3");
  CHECK(lifted.a == *ex.a);
  CHECK(lifted.b == *ex.b);
  CHECK(lifted.s == ex.s);
  CHECK(lifted.a.size() == 15);
  CHECK(lifted.b.size() == 33);
  CHECK(lifted.a.size() + lifted.b.size() == 45 + 3);
  CHECK(exceptions(lifted.a, lifted.b, lifted.s) ==
        set_of(z45, {0, 10, 15, 25, 30, 40}));
}

TEST_CASE("lift rejects sigma outside 2G") {
  Group z30 = Group::product({30});
  // {0,15} is a subgroup but 15 is odd, hence not a double.
  auto sigma = Subgroup::from_carrier(set_of(z30, {0, 15}));
  REQUIRE(sigma.has_value());
  CHECK_THROWS_AS(lift_critical_triple(z30, *sigma, 0, 0,
                                       CriticalPairParams{0, 1, 0, 0, {}}),
                  std::invalid_argument);
}

TEST_CASE("built-in examples carry the recorded data") {
  BuiltinExample e1 = builtin_example("ex1");
  CHECK(e1.group.presentation() == "Z15");
  CHECK(e1.a->size() + e1.b->size() == 15 + 1);
  CHECK(*e1.expected_exceptions == set_of(e1.group, {0, 10}));

  BuiltinExample e2 = builtin_example("ex2");
  CHECK(e2.group.presentation() == "Z30");
  CHECK(e2.a->size() + e2.b->size() == 30 + 2);
  CHECK(e2.s == set_of(e2.group, {0, 15}));
  CHECK(*e2.expected_exceptions == set_of(e2.group, {0, 10, 15, 25}));

  BuiltinExample e3 = builtin_example("ex3");
  CHECK(e3.a->size() + e3.b->size() == 45 + 3);

  for (const char* name : {"ex1", "ex2", "ex3"}) {
    BuiltinExample ex = builtin_example(name);
    CHECK(exceptions(*ex.a, *ex.b, ex.s) == *ex.expected_exceptions);
    CHECK(ex.a->size() + ex.b->size() == ex.group.order() + ls_max(ex.s));
  }

  CHECK_THROWS_AS(builtin_example("ex4"), std::invalid_argument);
}

TEST_CASE("the worked non-coset S") {
  BuiltinExample ex = builtin_example("noncoset_s");
  const Group& g = ex.group;
  CHECK(g.presentation() == "Z4xZ2");
  CHECK(ex.s.size() == 6);
  CHECK_FALSE(is_subgroup(ex.s));

  // S = -S + 2S, the shift-symmetry property.
  GSubset rebuilt = sumset(ex.s.negated(), dilate(2, ex.s));
  CHECK(rebuilt == ex.s);

  // |S| = 6 does not divide 8, so S cannot be a coset of any subgroup.
  for (const Subgroup& h : all_subgroups(g))
    if (h.size() == ex.s.size()) CHECK_FALSE(coset_split(ex.s, h).has_value());

  auto cls = classify_shift_symmetric(ex.s);
  CHECK(cls.tag == ShiftSymmetricClass::Tag::CosetUnion);
  REQUIRE(cls.subgroup.has_value());
  CHECK(cls.subgroup->carrier() == set_of(g, {0, 4}));
  CHECK(cls.reps == std::vector<uint32_t>{0, 2, 3});
  // Doubled representative differences fall back into the subgroup.
  for (uint32_t r1 : cls.reps)
    for (uint32_t r2 : cls.reps)
      CHECK(cls.subgroup->contains(g.dbl(g.sub(r1, r2))));
}

TEST_CASE("shift-symmetric classification on small sets") {
  Group z15 = Group::product({15});
  auto coset = classify_shift_symmetric(set_of(z15, {0, 5, 10}));
  CHECK(coset.tag == ShiftSymmetricClass::Tag::Coset);
  CHECK(*coset.shift == 0);
  CHECK(coset.subgroup->carrier() == set_of(z15, {0, 5, 10}));

  auto shifted = classify_shift_symmetric(set_of(z15, {2, 7, 12}));
  CHECK(shifted.tag == ShiftSymmetricClass::Tag::Coset);
  CHECK(*shifted.shift == 2);

  // {0, b}: a subgroup, and the coset shape is reported first even though
  // the differences also sit inside K(G).
  Group z42 = Group::product({4, 2});
  auto both = classify_shift_symmetric(set_of(z42, {0, 1}));
  CHECK(both.tag == ShiftSymmetricClass::Tag::Coset);

  // A kernel-difference set that is not a coset: needs |K| >= 4.
  Group z222 = Group::product({2, 2, 2});
  auto inside = classify_shift_symmetric(set_of(z222, {0, 1, 2}));
  CHECK(inside.tag == ShiftSymmetricClass::Tag::InsideKernel);

  CHECK_THROWS_AS(classify_shift_symmetric(set_of(Group::product({5}), {0, 1})),
                  HypothesisNotSatisfied);
  CHECK_THROWS_AS(classify_shift_symmetric(GSubset(z15)), std::invalid_argument);
}

TEST_CASE("every hypothesis-satisfying S in groups up to order 8 classifies") {
  for (const Group& g : enumerate_small_groups(8)) {
    const uint64_t full = uint64_t{1} << g.order();
    for (uint64_t mask = 1; mask < full; ++mask) {
      GSubset s(g);
      for (uint32_t i = 0; i < g.order(); ++i)
        if (mask >> i & 1) s.insert(i);
      bool symmetric = true;
      s.for_each([&](uint32_t x) {
        GSubset rel = s.translated(g.neg(x));
        if (rel != rel.negated()) symmetric = false;
      });
      if (!symmetric) {
        CHECK_THROWS_AS(classify_shift_symmetric(s), HypothesisNotSatisfied);
      } else {
        CHECK_NOTHROW(classify_shift_symmetric(s));
      }
    }
  }
}
