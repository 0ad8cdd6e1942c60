#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rsums/constructions.hpp"

namespace rsums {

enum class Regime { AboveThreshold, AtThreshold, BelowThreshold };

/**
 * Everything the lower-bound theorem says about one triple. The bound
 * |A wedge^S B| >= |G| - 2|S| is asserted only at the threshold
 * |A| + |B| = |G| + L_S; above it the full group must be reached; below
 * it nothing is claimed. `violation` is never true on correct inputs --
 * it exists so that surveys can falsify rather than assume.
 */
struct BoundReport {
  uint32_t group_order = 0;
  uint32_t size_a = 0;
  uint32_t size_b = 0;
  uint32_t size_s = 0;
  uint32_t l_g = 0;
  uint32_t l_s = 0;
  Regime regime = Regime::BelowThreshold;
  uint32_t achieved = 0;  // |A wedge^S B|
  int64_t bound = 0;      // |G| - 2|S|
  bool tight = false;
  bool violation = false;
};

/// True iff |A| + |B| > |G| + L_S. When true, additionally verifies that
/// A wedge^S B is the full group (throwing InvariantViolation otherwise).
bool check_above_threshold(const GSubset& a, const GSubset& b, const GSubset& s);

BoundReport bound_report(const GSubset& a, const GSubset& b, const GSubset& s);

/// The stabilizer {g : g + C = C} of a non-empty set, as a subgroup.
Subgroup kneser_stabilizer(const GSubset& c);

/// Kneser's identity: if |A + B| < |A| + |B| then, with H the stabilizer
/// of A + B, |A + B| = |A + H| + |B + H| - |H|. Returns true when the
/// identity holds or the premise fails; false would falsify the theorem.
bool kneser_check(const GSubset& a, const GSubset& b);

/**
 * Structural witness of a bound-tight triple.
 *
 * Anchored at the smallest exception z = 2 b_s + s (s in S scanned in
 * index order, smallest valid b_s), the translated triple
 * A'' = A - b_s - s, B'' = B - b_s, S'' = S - s has 0 as an exception with
 * 0 in A'' ^ B'' ^ S''. `s_classes` partitions S'' modulo 2G with the
 * class of 0 first; that class is `sigma`, always a subgroup of 2G. On the
 * quotient Q = G/sigma the images of A'', B'' form a tight classical pair
 * recovered as CriticalPairParams{0, b, k, l, reps} with d = ord(<2b>).
 *
 * `aligned` marks the single-class regime L_S = |S| L(G); otherwise
 * (split regime) every class and complement-of-class is itself tight, and
 * when (d+1)/2 > L(Q) the classes are translates y_i + sigma recorded in
 * `y_translates` (indexed like s_classes, first entry 0).
 *
 * Rebuilding lift_critical_triple(G, sigma, s, b_s, quotient params)
 * reproduces A and B exactly, and s + union(s_classes) reproduces S.
 */
struct CriticalWitness {
  uint32_t anchor_z = 0;
  uint32_t s = 0;
  uint32_t b_s = 0;
  bool aligned = true;
  Subgroup sigma;
  std::vector<GSubset> s_classes;  // subsets of G, in S - s coordinates
  uint32_t quotient_order = 0;
  uint32_t b = 0;  // quotient index
  uint32_t d = 0;
  uint32_t k = 0;
  uint32_t l = 0;
  uint32_t m = 0;
  std::vector<uint32_t> reps;  // quotient indices
  bool y_valid = false;
  std::vector<uint32_t> y_translates;
  // Exceptions of the original triple as (z1 + S) u (z2 + S), when that
  // form exists (always, in the aligned regime).
  std::optional<std::pair<uint32_t, uint32_t>> exception_pair;

  CriticalPairParams quotient_params() const {
    return CriticalPairParams{0, b, k, l, reps};
  }
};

/// Recovers the full structural witness of a tight triple, verifying every
/// claim it records. Throws NotCritical unless |A| + |B| = |G| + L_S and
/// |A wedge^S B| = |G| - 2|S|; throws InvariantViolation if a verified
/// structural step fails on a genuinely tight input.
CriticalWitness classify_critical(const GSubset& a, const GSubset& b,
                                  const GSubset& s);

/**
 * Reflection partition of a tight configuration around b: with
 * 0, 2b both exceptions, membership of {b - x, b + x} in A and B is forced
 * by where 2x sits relative to S. Element counts per unordered pair:
 * half(S n -S) lies in both sets; `shared_single` in both (one side of the
 * pair); `a_pair_only` / `b_pair_only` fully doubled into one set;
 * `a_pair_b_single` / `b_pair_a_single` cover half(S delta -S).
 */
struct ReflectionPartition {
  GSubset shared_single;    // X0: in A and B, negatives in neither
  GSubset a_pair_only;      // X1: pair in A only
  GSubset b_pair_only;      // X2: pair in B only
  GSubset a_pair_b_single;  // Y1: pair in A, this element also in B
  GSubset b_pair_a_single;  // Y2: pair in B, this element also in A
};

struct ReflectionAudit {
  bool ok = false;
  std::optional<ReflectionPartition> partition;
};

/// Verifies, for every x in G, the four-case count identity
/// |A n {b-x, b+x}| + |B n {b-x, b+x}| in {2,3,4} determined by 2x, and on
/// success emits the induced partition of A - b and B - b. Preconditions
/// (invalid-argument): 0 in A n B n S, |A|+|B| = |G|+L_S, L_S = |S| L(G),
/// b in A n B, and 0, 2b both exceptions.
ReflectionAudit reflection_audit(const GSubset& a, const GSubset& b,
                                 const GSubset& s, uint32_t around_b);

/// If the exceptions of (A, B, S) split as (z1 + S) disjoint-union
/// (z2 + S), the lexicographically smallest such pair; absent otherwise.
std::optional<std::pair<uint32_t, uint32_t>> exception_structure(
    const GSubset& a, const GSubset& b, const GSubset& s);

/// S - S inside 2G, and S - s symmetric for every s in S. The shape every
/// tight S has in the aligned regime.
bool check_s_structure(const GSubset& s);

/// For A, B unions of T-cosets whose quotient images form a tight pair
/// around b with (d+1)/2 > L(G/T): checks nu(z) > L(G) |T| for every z
/// outside the fibers of K(G/T) and 2b + K(G/T). Shape failures are
/// invalid-argument; a false return would falsify the count floor.
bool nu_floor_audit(const GSubset& a, const GSubset& b, uint32_t b_quotient,
                    const QuotientMap& map);

/// |A wedge^S B| >= min(p, |A| + |B| - 2|S| - 1) in a group of prime
/// order p. Throws invalid-argument on non-prime group order.
bool prime_restricted_bound_check(const GSubset& a, const GSubset& b,
                                  const GSubset& s);

namespace detail {

/// Verifies that (aq, bq) over Q is exactly the tight-pair shape anchored
/// at 0 with the given partner b, and recovers canonical (k, l, reps).
/// Returns nullopt when the shape does not match.
struct PairShape {
  uint32_t d = 0;
  uint32_t k = 0;
  uint32_t l = 0;
  uint32_t m = 0;
  std::vector<uint32_t> reps;
  GSubset a_rest;  // A minus the common block: the Q part
  GSubset b_rest;  // B minus the common block: the R part
};

std::optional<PairShape> recover_pair_shape(const Group& q, const GSubset& aq,
                                            const GSubset& bq, uint32_t b);

}  // namespace detail

}  // namespace rsums
