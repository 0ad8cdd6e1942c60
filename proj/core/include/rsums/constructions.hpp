#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rsums/quotient.hpp"
#include "rsums/set_algebra.hpp"

namespace rsums {

/**
 * Parameters of a bound-tight classical pair (A, B) with
 * |A| + |B| = |G| + L(G) and |A wedge B| = |G| - 2.
 *
 * With H = <2(b - a)> of odd order d > 1, K = K(G) and m = (|G|/d - |K|)/2,
 * the complement of K + H tiles into m coset pairs {x + H, -x + H}. The
 * reps list orders one representative per pair: entries [0, k) name cosets
 * shared by A and B (the specific coset x_i + H matters), entries [k, l)
 * pairs doubled into A, entries [l, m) pairs doubled into B. Requires
 * 0 <= k <= l <= m.
 */
struct CriticalPairParams {
  uint32_t a = 0;
  uint32_t b = 0;
  uint32_t k = 0;
  uint32_t l = 0;
  std::vector<uint32_t> reps;  // m entries

  uint32_t m() const { return static_cast<uint32_t>(reps.size()); }
};

/// One canonical representative (minimum index over the pair's union) per
/// coset pair {x + H, -x + H} tiling G \ (K(G) + H), ascending. Requires
/// |H| odd; the tiling then exists and is unique.
std::vector<uint32_t> pair_coset_reps(const Group& group, const Subgroup& h);

/// Builds the tight pair determined by the parameters:
///   A = a + (({0, c, 3c, ..., (d-2)c} + K) union ({x_1..x_k, +-x_{k+1}..+-x_l} + H))
///   B = a + (({0, c, 3c, ..., (d-2)c} + K) union ({x_1..x_k, +-x_{l+1}..+-x_m} + H))
/// with c = b - a. Verifies |A| + |B| = |G| + L(G) and that the exceptions
/// of the classical restricted sumset are exactly {2a, 2b}.
std::pair<GSubset, GSubset> build_critical_pair(const Group& group,
                                                const CriticalPairParams& params);

struct CriticalTriple {
  GSubset a;
  GSubset b;
  GSubset s;
};

/// Lifts a tight quotient pair through pi : G -> G/Sigma:
///   S = s + Sigma,  A = b_s + s + pi^{-1}(A'),  B = b_s + pi^{-1}(B'),
/// where (A', B') is built from `quotient_params` (anchor a must be 0) on
/// G/Sigma. Sigma must be a subgroup of 2G. Verifies
/// |A| + |B| = |G| + |S| L(G) and that the exceptions are
/// (2 b_s + S) union (2 b* + 2 b_s + S) for a section lift b* of b.
CriticalTriple lift_critical_triple(const Group& group, const Subgroup& sigma,
                                    uint32_t s, uint32_t b_s,
                                    const CriticalPairParams& quotient_params);

/**
 * Worked data sets: "ex1" (Z15), "ex2" (Z30), "ex3" (Z45) are bound-tight
 * triples with known exception sets; "noncoset_s" (Z4xZ2) is a
 * shift-symmetric S that is a union of cosets but not a coset.
 */
struct BuiltinExample {
  std::string name;
  Group group;
  std::optional<GSubset> a;
  std::optional<GSubset> b;
  GSubset s;
  std::optional<GSubset> expected_exceptions;
};

BuiltinExample builtin_example(std::string_view name);

/**
 * Classification of a set S with S - s = -(S - s) for every s in S
 * (equivalently S = -S + 2S). Exactly one of three shapes applies; when
 * they overlap the first in the order below is reported.
 */
struct ShiftSymmetricClass {
  enum class Tag { Coset, InsideKernel, CosetUnion };
  Tag tag;
  // Coset: S = shift + subgroup. CosetUnion: S is a union of subgroup-cosets
  // with 2(s_i - s_j) in the subgroup for all representative pairs.
  std::optional<Subgroup> subgroup;
  std::optional<uint32_t> shift;
  std::vector<uint32_t> reps;
};

/// Throws HypothesisNotSatisfied if some S - s is not symmetric, and
/// InvariantViolation if the hypothesis holds but no shape matches (which
/// would falsify the classification it implements).
ShiftSymmetricClass classify_shift_symmetric(const GSubset& s);

}  // namespace rsums
