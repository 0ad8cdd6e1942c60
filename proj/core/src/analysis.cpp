#include "rsums/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rsums/errors.hpp"

namespace rsums {

bool check_above_threshold(const GSubset& a, const GSubset& b,
                           const GSubset& s) {
  require_same_group(a, b);
  require_same_group(a, s);
  if (s.empty()) throw std::invalid_argument("S must be non-empty");
  const uint32_t threshold = a.group().order() + ls_max(s);
  if (a.size() + b.size() <= threshold) return false;
  if (restricted_sumset(a, b, s).size() != a.group().order())
    throw InvariantViolation(
        "above the threshold the restricted sumset must be the full group");
  return true;
}

BoundReport bound_report(const GSubset& a, const GSubset& b, const GSubset& s) {
  require_same_group(a, b);
  require_same_group(a, s);
  if (s.empty()) throw std::invalid_argument("S must be non-empty");
  const Group& g = a.group();
  BoundReport r;
  r.group_order = g.order();
  r.size_a = a.size();
  r.size_b = b.size();
  r.size_s = s.size();
  r.l_g = doubling_constant(g);
  r.l_s = ls_max(s);
  const uint64_t total = static_cast<uint64_t>(r.size_a) + r.size_b;
  const uint64_t threshold = static_cast<uint64_t>(r.group_order) + r.l_s;
  r.regime = total > threshold   ? Regime::AboveThreshold
             : total == threshold ? Regime::AtThreshold
                                  : Regime::BelowThreshold;
  r.achieved = restricted_sumset(a, b, s).size();
  r.bound = static_cast<int64_t>(r.group_order) - 2 * static_cast<int64_t>(r.size_s);
  r.tight = r.regime == Regime::AtThreshold &&
            static_cast<int64_t>(r.achieved) == r.bound;
  r.violation =
      (r.regime == Regime::AtThreshold && static_cast<int64_t>(r.achieved) < r.bound) ||
      (r.regime == Regime::AboveThreshold && r.achieved != r.group_order);
  return r;
}

Subgroup kneser_stabilizer(const GSubset& c) {
  if (c.empty()) throw std::invalid_argument("stabilizer of the empty set");
  auto sub = Subgroup::from_carrier(stabilizer(c));
  if (!sub) throw InvariantViolation("stabilizer failed the subgroup check");
  return std::move(*sub);
}

bool kneser_check(const GSubset& a, const GSubset& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("Kneser check needs non-empty sets");
  GSubset sum = sumset(a, b);
  if (sum.size() >= a.size() + b.size()) return true;
  Subgroup h = kneser_stabilizer(sum);
  const uint32_t a_h = sumset(a, h.carrier()).size();
  const uint32_t b_h = sumset(b, h.carrier()).size();
  return sum.size() == a_h + b_h - h.size();
}

namespace detail {

namespace {

// {0, b, 3b, ..., (d-2)b} + K.
GSubset common_block(const Group& q, uint32_t b, uint32_t d,
                     const GSubset& kernel) {
  GSubset block = kernel;
  for (uint32_t j = 1; j + 1 < d; j += 2)
    block = block | kernel.translated(q.scale(j, b));
  return block;
}

}  // namespace

std::optional<PairShape> recover_pair_shape(const Group& q, const GSubset& aq,
                                            const GSubset& bq, uint32_t b) {
  Subgroup h = Subgroup::cyclic(q, q.dbl(b));
  const uint32_t d = h.size();
  if (d == 1 || d % 2 == 0) return std::nullopt;
  auto [two_g, kernel] = doubling_subgroups(q);

  GSubset block = common_block(q, b, d, kernel.carrier());
  if (!block.is_subset_of(aq) || !block.is_subset_of(bq)) return std::nullopt;
  PairShape shape{d, 0, 0, 0, {}, aq - block, bq - block};
  GSubset kh = sumset(kernel.carrier(), h.carrier());
  if (shape.a_rest.intersects(kh) || shape.b_rest.intersects(kh))
    return std::nullopt;
  if (!coset_split(shape.a_rest, h) || !coset_split(shape.b_rest, h))
    return std::nullopt;

  std::vector<uint32_t> shared, a_doubled, b_doubled;
  for (uint32_t r : pair_coset_reps(q, h)) {
    const uint32_t nr = q.neg(r);
    const bool a_pos = shape.a_rest.contains(r);
    const bool a_neg = shape.a_rest.contains(nr);
    const bool b_pos = shape.b_rest.contains(r);
    const bool b_neg = shape.b_rest.contains(nr);
    if (a_pos && a_neg && !b_pos && !b_neg) {
      a_doubled.push_back(r);
    } else if (b_pos && b_neg && !a_pos && !a_neg) {
      b_doubled.push_back(r);
    } else if (a_pos == b_pos && a_neg == b_neg && a_pos != a_neg) {
      // Exactly one side of the pair, present in both sets. Canonical
      // label: the smallest element of the present coset.
      GSubset coset = h.carrier().translated(a_pos ? r : nr);
      shared.push_back(coset.min_element());
    } else {
      return std::nullopt;
    }
  }
  std::sort(shared.begin(), shared.end());
  std::sort(a_doubled.begin(), a_doubled.end());
  std::sort(b_doubled.begin(), b_doubled.end());
  shape.k = static_cast<uint32_t>(shared.size());
  shape.l = shape.k + static_cast<uint32_t>(a_doubled.size());
  shape.m = shape.k + static_cast<uint32_t>(a_doubled.size() + b_doubled.size());
  shape.reps = std::move(shared);
  shape.reps.insert(shape.reps.end(), a_doubled.begin(), a_doubled.end());
  shape.reps.insert(shape.reps.end(), b_doubled.begin(), b_doubled.end());
  return shape;
}

}  // namespace detail

namespace {

// Smallest b with 2b = target - s and b in (A - s) n B, if any.
std::optional<uint32_t> factor_exception(const GSubset& a, const GSubset& b,
                                         uint32_t target, uint32_t s) {
  const Group& g = a.group();
  const uint32_t need = g.sub(target, s);
  for (uint32_t cand = 0; cand < g.order(); ++cand) {
    if (g.dbl(cand) != need) continue;
    if (b.contains(cand) && a.contains(g.add(cand, s))) return cand;
  }
  return std::nullopt;
}

}  // namespace

CriticalWitness classify_critical(const GSubset& a, const GSubset& b,
                                  const GSubset& s) {
  require_same_group(a, b);
  require_same_group(a, s);
  if (s.empty()) throw std::invalid_argument("S must be non-empty");
  const Group& g = a.group();
  const uint32_t n = g.order();
  const uint32_t l_g = doubling_constant(g);
  const uint32_t l_s = ls_max(s);

  if (static_cast<uint64_t>(a.size()) + b.size() !=
      static_cast<uint64_t>(n) + l_s)
    throw NotCritical("|A| + |B| != |G| + L_S");
  if (static_cast<int64_t>(restricted_sumset(a, b, s).size()) !=
      static_cast<int64_t>(n) - 2 * static_cast<int64_t>(s.size()))
    throw NotCritical("|A wedge^S B| != |G| - 2|S|");

  GSubset excs = exceptions(a, b, s);
  if (excs.size() != 2 * s.size())
    throw InvariantViolation("tight triple with wrong exception count");
  const uint32_t anchor = excs.min_element();

  // Anchor factorization z = 2 b_s + s, scanning s in index order.
  std::optional<uint32_t> anchor_s, anchor_bs;
  {
    const auto s_elems = s.elements();
    for (uint32_t cand_s : s_elems) {
      if (auto cand_b = factor_exception(a, b, anchor, cand_s)) {
        anchor_s = cand_s;
        anchor_bs = *cand_b;
        break;
      }
    }
  }
  if (!anchor_s)
    throw InvariantViolation("exception admits no factorization 2b + s");

  GSubset a2 = a.translated(g.neg(g.add(*anchor_bs, *anchor_s)));
  GSubset b2 = b.translated(g.neg(*anchor_bs));
  GSubset s2 = s.translated(g.neg(*anchor_s));

  std::vector<GSubset> classes = decompose_mod_2g(s2);
  // The class of 0 is first: 0 = s - s is in S'' and min of its class.
  if (classes.empty() || !classes[0].contains(0))
    throw InvariantViolation("class of 0 missing from the S decomposition");
  const bool aligned = classes.size() == 1;
  if (aligned != (l_s == s.size() * l_g))
    throw InvariantViolation("L_S disagrees with the 2G-class decomposition");

  auto sigma_sub = Subgroup::from_carrier(classes[0]);
  if (!sigma_sub)
    throw InvariantViolation("the 2G-class of s is not a subgroup of G");
  auto [two_g, kernel] = doubling_subgroups(g);
  if (!sigma_sub->carrier().is_subset_of(two_g.carrier()))
    throw InvariantViolation("sigma escapes 2G");

  if (!aligned) {
    // Split regime: every class has size L_S / L(G), and each class and
    // complement-of-class is itself tight for (A'', B'').
    for (const GSubset& cls : classes) {
      if (cls.size() * l_g != l_s)
        throw InvariantViolation("unequal 2G-class sizes in a tight triple");
      const int64_t want_cls =
          static_cast<int64_t>(n) - 2 * static_cast<int64_t>(cls.size());
      if (static_cast<int64_t>(restricted_sumset(a2, b2, cls).size()) != want_cls)
        throw InvariantViolation("a 2G-class of S is not itself tight");
      GSubset rest = s2 - cls;
      const int64_t want_rest =
          static_cast<int64_t>(n) - 2 * static_cast<int64_t>(rest.size());
      if (static_cast<int64_t>(restricted_sumset(a2, b2, rest).size()) != want_rest)
        throw InvariantViolation("the complement of a 2G-class is not tight");
    }
    // Exceptions split class by class, disjointly.
    GSubset merged(g);
    uint64_t total = 0;
    for (const GSubset& cls : classes) {
      GSubset part = exceptions(a2, b2, cls);
      total += part.size();
      merged = merged | part;
    }
    if (total != merged.size() || merged != exceptions(a2, b2, s2))
      throw InvariantViolation("exception sets of the classes do not partition");
  }

  // Quotient by sigma and recover the tight-pair shape there.
  const bool trivial_sigma = sigma_sub->size() == 1;
  std::optional<QuotientMap> pi;
  if (!trivial_sigma) pi.emplace(g, *sigma_sub);
  const Group q = trivial_sigma ? g : pi->target();

  GSubset aq = trivial_sigma ? a2 : pi->image(a2);
  GSubset bq = trivial_sigma ? b2 : pi->image(b2);
  if (!trivial_sigma) {
    if (pi->preimage(aq) != a2 || pi->preimage(bq) != b2)
      throw InvariantViolation("A or B is not a union of sigma-cosets");
  }

  GSubset exc_aligned = exceptions(a2, b2, sigma_sub->carrier());
  if (exc_aligned.size() != 2 * sigma_sub->size())
    throw InvariantViolation("sigma-exceptions have the wrong cardinality");
  GSubset exc_q = trivial_sigma ? exc_aligned : pi->image(exc_aligned);
  if (exc_q.size() != 2 || !exc_q.contains(0))
    throw InvariantViolation("quotient pair does not have exceptions {0, e}");
  uint32_t e_q = 0;
  exc_q.for_each([&](uint32_t x) {
    if (x != 0) e_q = x;
  });

  // Partner: the smallest half of e_q inside the common block.
  Subgroup h_q = Subgroup::cyclic(q, e_q);
  const uint32_t d = h_q.size();
  if (d == 1 || d % 2 == 0)
    throw InvariantViolation("<e> must have odd order > 1 in the quotient");
  std::optional<uint32_t> b_partner;
  for (uint32_t cand = 0; cand < q.order(); ++cand) {
    if (q.dbl(cand) == e_q && aq.contains(cand) && bq.contains(cand)) {
      b_partner = cand;
      break;
    }
  }
  if (!b_partner)
    throw InvariantViolation("no partner b with 2b = e in the quotient pair");

  auto shape = detail::recover_pair_shape(q, aq, bq, *b_partner);
  if (!shape)
    throw InvariantViolation("quotient pair does not match the tight-pair shape");

  CriticalPairParams params{0, *b_partner, shape->k, shape->l, shape->reps};
  auto [a_rebuilt, b_rebuilt] = build_critical_pair(q, params);
  if (a_rebuilt != aq || b_rebuilt != bq)
    throw InvariantViolation("recovered parameters do not rebuild the pair");

  // Split-regime translate structure, asserted only when (d+1)/2 > L(Q).
  const uint32_t l_q = doubling_constant(q);
  bool y_valid = false;
  std::vector<uint32_t> y_translates;
  if (!aligned) {
    y_valid = (d + 1) / 2 > l_q;
    if (y_valid) {
      for (const GSubset& cls : classes) {
        const uint32_t y = cls.min_element();
        if (cls != sigma_sub->carrier().translated(y) ||
            !sigma_sub->contains(g.dbl(y)))
          throw InvariantViolation("class is not a half-translate of sigma");
        y_translates.push_back(y);
      }
      s2.for_each([&](uint32_t x) {
        if (!sigma_sub->contains(g.dbl(x)))
          throw InvariantViolation("2S escapes sigma");
      });
      // Exceptions form {0, 2b*} + S'' for a section lift b* of b.
      const uint32_t b_star =
          trivial_sigma ? *b_partner : pi->section(*b_partner);
      GSubset want = s2 | s2.translated(g.dbl(b_star));
      if (exceptions(a2, b2, s2) != want)
        throw InvariantViolation("exceptions are not {0, 2b*} + S");
      // The doubled translates stay clear of the mixed sum Q + R.
      GSubset qr = sumset(shape->a_rest, shape->b_rest);
      for (uint32_t y : y_translates) {
        const uint32_t y_q = trivial_sigma ? y : pi->map(y);
        if (qr.contains(y_q) || qr.contains(q.add(e_q, y_q)))
          throw InvariantViolation("a translate image meets Q + R");
      }
    }
  }

  CriticalWitness witness{
      anchor,
      *anchor_s,
      *anchor_bs,
      aligned,
      std::move(*sigma_sub),
      std::move(classes),
      q.order(),
      *b_partner,
      d,
      shape->k,
      shape->l,
      shape->m,
      shape->reps,
      y_valid,
      std::move(y_translates),
      exception_structure(a, b, s)};
  if (witness.aligned && !witness.exception_pair)
    throw InvariantViolation("aligned tight triple without (z1+S) u (z2+S) form");
  if (witness.y_valid && !witness.exception_pair)
    throw InvariantViolation("translate-structured triple without exception pair");
  return witness;
}

ReflectionAudit reflection_audit(const GSubset& a, const GSubset& b,
                                 const GSubset& s, uint32_t around_b) {
  require_same_group(a, b);
  require_same_group(a, s);
  const Group& g = a.group();
  const uint32_t n = g.order();
  if (around_b >= n) throw std::invalid_argument("b out of range");
  if (!a.contains(0) || !b.contains(0) || !s.contains(0))
    throw std::invalid_argument("need 0 in A, B and S");
  if (!a.contains(around_b) || !b.contains(around_b))
    throw std::invalid_argument("b must lie in A and B");
  const uint32_t l_s = ls_max(s);
  if (static_cast<uint64_t>(a.size()) + b.size() != static_cast<uint64_t>(n) + l_s)
    throw std::invalid_argument("need |A| + |B| = |G| + L_S");
  if (l_s != s.size() * doubling_constant(g))
    throw std::invalid_argument("need L_S = |S| L(G)");
  GSubset allowed = restricted_sumset(a, b, s);
  if (allowed.contains(0) || allowed.contains(g.dbl(around_b)))
    throw std::invalid_argument("0 and 2b must both be exceptions");

  SymDecomp sym = sym_decomp(s);
  ReflectionAudit audit;
  for (uint32_t x = 0; x < n; ++x) {
    const uint32_t lo = g.sub(around_b, x);
    const uint32_t hi = g.add(around_b, x);
    uint32_t count = 0;
    if (lo == hi) {
      count = (a.contains(lo) ? 1 : 0) + (b.contains(lo) ? 1 : 0);
    } else {
      count = (a.contains(lo) ? 1 : 0) + (a.contains(hi) ? 1 : 0) +
              (b.contains(lo) ? 1 : 0) + (b.contains(hi) ? 1 : 0);
    }
    const uint32_t twox = g.dbl(x);
    uint32_t expected = 2;
    if (twox != 0) {
      if (sym.core.contains(twox))
        expected = 4;
      else if (sym.diff.contains(twox))
        expected = 3;
    }
    if (count != expected) return audit;  // ok = false
  }
  audit.ok = true;

  // Partition of canonical pairs {x, -x} by membership in A - b and B - b.
  GSubset a_rel = a.translated(g.neg(around_b));
  GSubset b_rel = b.translated(g.neg(around_b));
  ReflectionPartition part{GSubset(g), GSubset(g), GSubset(g), GSubset(g),
                           GSubset(g)};
  for (uint32_t x = 0; x < n; ++x) {
    const uint32_t nx = g.neg(x);
    if (nx < x) continue;  // canonical side of the pair
    const uint32_t twox = g.dbl(x);
    const bool in_a = a_rel.contains(x), in_an = a_rel.contains(nx);
    const bool in_b = b_rel.contains(x), in_bn = b_rel.contains(nx);
    if (sym.core.contains(twox) || twox == 0) continue;  // common half block
    if (sym.diff.contains(twox)) {
      if (in_a && in_an && in_b != in_bn) {
        part.a_pair_b_single.insert(in_b ? x : nx);
      } else if (in_b && in_bn && in_a != in_an) {
        part.b_pair_a_single.insert(in_a ? x : nx);
      } else {
        audit.ok = false;
        return audit;
      }
    } else {
      if (in_a && in_an && !in_b && !in_bn) {
        part.a_pair_only.insert(x);
      } else if (in_b && in_bn && !in_a && !in_an) {
        part.b_pair_only.insert(x);
      } else if (in_a == in_b && in_an == in_bn && in_a != in_an) {
        part.shared_single.insert(in_a ? x : nx);
      } else if (!in_a && !in_an && !in_b && !in_bn) {
        continue;  // impossible when counts hold; kept for symmetry
      } else {
        audit.ok = false;
        return audit;
      }
    }
  }
  audit.partition = std::move(part);
  return audit;
}

std::optional<std::pair<uint32_t, uint32_t>> exception_structure(
    const GSubset& a, const GSubset& b, const GSubset& s) {
  require_same_group(a, b);
  require_same_group(a, s);
  if (s.empty()) throw std::invalid_argument("S must be non-empty");
  const Group& g = a.group();
  GSubset excs = exceptions(a, b, s);
  if (excs.size() != 2 * s.size()) return std::nullopt;
  for (uint32_t z1 = 0; z1 < g.order(); ++z1) {
    GSubset first = s.translated(z1);
    if (!first.is_subset_of(excs)) continue;
    GSubset rest = excs - first;
    if (rest.size() != s.size()) continue;
    for (uint32_t z2 = 0; z2 < g.order(); ++z2) {
      if (s.translated(z2) == rest) return std::make_pair(z1, z2);
    }
  }
  return std::nullopt;
}

bool check_s_structure(const GSubset& s) {
  if (s.empty()) throw std::invalid_argument("S must be non-empty");
  const Group& g = s.group();
  GSubset two_g(g);
  for (uint32_t x = 0; x < g.order(); ++x) two_g.insert(g.dbl(x));
  bool ok = true;
  s.for_each([&](uint32_t x) {
    if (!ok) return;
    GSubset rel = s.translated(g.neg(x));
    if (!rel.is_subset_of(two_g) || rel != rel.negated()) ok = false;
  });
  return ok;
}

bool nu_floor_audit(const GSubset& a, const GSubset& b, uint32_t b_quotient,
                    const QuotientMap& map) {
  if (a.group() != map.source() || b.group() != map.source())
    throw std::invalid_argument("sets not over the map's source group");
  const Group& g = map.source();
  const Group& q = map.target();
  if (b_quotient >= q.order())
    throw std::invalid_argument("quotient element out of range");
  auto [two_g, kernel] = doubling_subgroups(g);
  if (!map.kernel().carrier().is_subset_of(two_g.carrier()))
    throw std::invalid_argument("T must be a subgroup of 2G");
  const uint32_t l_g = kernel.size();
  const uint32_t t_size = map.kernel().size();
  if (static_cast<uint64_t>(a.size()) + b.size() !=
      static_cast<uint64_t>(g.order()) + static_cast<uint64_t>(t_size) * l_g)
    throw std::invalid_argument("need |A| + |B| = |G| + |T| L(G)");
  if (!coset_split(a, map.kernel()) || !coset_split(b, map.kernel()))
    throw std::invalid_argument("A and B must be unions of T-cosets");

  GSubset aq = map.image(a);
  GSubset bq = map.image(b);
  auto shape = detail::recover_pair_shape(q, aq, bq, b_quotient);
  if (!shape)
    throw std::invalid_argument("quotient images lack the tight-pair shape");
  const uint32_t l_q = doubling_constant(q);
  if ((shape->d + 1) / 2 <= l_q)
    throw std::invalid_argument("need (d+1)/2 > L(G/T)");

  GSubset kernel_q = doubling_subgroups(q).second.carrier();
  GSubset excluded_q = kernel_q | kernel_q.translated(q.dbl(b_quotient));
  GSubset excluded = map.preimage(excluded_q);
  const uint64_t floor = static_cast<uint64_t>(l_g) * t_size;
  for (uint32_t z = 0; z < g.order(); ++z) {
    if (excluded.contains(z)) continue;
    if (nu(a, b, z) <= floor) return false;
  }
  return true;
}

bool prime_restricted_bound_check(const GSubset& a, const GSubset& b,
                                  const GSubset& s) {
  require_same_group(a, b);
  require_same_group(a, s);
  if (a.empty() || b.empty() || s.empty())
    throw std::invalid_argument("A, B, S must be non-empty");
  const uint32_t p = a.group().order();
  if (p < 2) throw std::invalid_argument("group order is not prime");
  for (uint32_t f = 2; f * f <= p; ++f)
    if (p % f == 0) throw std::invalid_argument("group order is not prime");
  const int64_t rhs =
      std::min<int64_t>(p, static_cast<int64_t>(a.size()) + b.size() -
                               2 * static_cast<int64_t>(s.size()) - 1);
  return static_cast<int64_t>(restricted_sumset(a, b, s).size()) >= rhs;
}

}  // namespace rsums
