#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsums/subgroup.hpp"

namespace rsums {

/// A + B = { a + b : a in A, b in B }. Empty if either operand is empty.
GSubset sumset(const GSubset& a, const GSubset& b);

/// The restricted sumset with respect to a forbidden-difference set:
/// { a + b : a in A, b in B, a - b not in S }. S = {0} gives the classical
/// restricted sumset; an empty S gives the plain sumset.
GSubset restricted_sumset(const GSubset& a, const GSubset& b, const GSubset& s);

/// nu(z) = |{ (a, b) in A x B : a + b = z }| = |A intersect (z - B)|.
uint32_t nu(const GSubset& a, const GSubset& b, uint32_t z);

/// L(G) = |K(G)|, the number of elements of order dividing 2. Equals the
/// maximum number of elements sharing one double.
uint32_t doubling_constant(const Group& group);

enum class LsMethod { Brute, Formula };

/// L_S(z) = |{ (x, y) : x, y in G, x + y = z, x - y in S }|.
/// Brute enumerates the |G| candidate pairs directly; Formula evaluates
/// |S intersect (z + 2G)| * L(G). Agreement of the two routes is a tested
/// contract, not an assumption.
uint32_t ls_at(const GSubset& s, uint32_t z, LsMethod method = LsMethod::Formula);

/// L_S = max_z L_S(z). Throws on empty S. Always a multiple of L(G) in
/// [|S|, |S| * L(G)].
uint32_t ls_max(const GSubset& s);

/// H(T) = { g : 2g in T }, the preimage of T under doubling.
GSubset half(const GSubset& t);

/// t * A = { t a : a in A }; dilate(-1, A) is -A.
GSubset dilate(int64_t t, const GSubset& a);

struct SymDecomp {
  GSubset core;  // S intersect -S
  GSubset diff;  // (S \ -S) union (-S \ S)
};

/// Splits S union -S into its symmetric core and antisymmetric difference;
/// the two parts partition S union -S.
SymDecomp sym_decomp(const GSubset& s);

/// (A + B) \ (A wedge^S B): the sums realizable only with differences in S.
GSubset exceptions(const GSubset& a, const GSubset& b, const GSubset& s);

/// If A is a union of H-cosets, the ascending list of minimum-index coset
/// representatives; absent otherwise.
std::optional<std::vector<uint32_t>> coset_split(const GSubset& a,
                                                 const Subgroup& h);

/// { g : g + C = C }, the stabilizer of C. Always a subgroup carrier.
GSubset stabilizer(const GSubset& c);

/// Partition of S into classes modulo 2G, ordered by smallest element.
std::vector<GSubset> decompose_mod_2g(const GSubset& s);

}  // namespace rsums
