#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rsums {

/**
 * A finite Abelian group with dense element indexing.
 *
 * Elements are addressed by indices 0..order()-1; index 0 is always the
 * neutral element. Two concrete realizations share this interface:
 *
 *  - product groups Z/n1 x ... x Z/nk, built by Group::product(). Elements
 *    are mixed-radix coordinate vectors (first factor most significant);
 *    arithmetic is coordinate-wise modular.
 *  - table groups, built by Group::from_table(). Elements are opaque
 *    indices with the operation given by an explicit addition table. This
 *    is how quotients are realized: the quotient of a concrete group is
 *    again a concrete group on canonical coset-representative indices.
 *
 * A Group is an immutable value; copies share the underlying tables and
 * are cheap. All operations are pure and safe to call concurrently.
 */
class Group {
 public:
  /// Z/n1 x ... x Z/nk from the given factor orders (each >= 1). The factor
  /// list is kept as presented; [4,2] and [2,4] are distinct presentations
  /// of isomorphic groups. An empty list gives the trivial group.
  static Group product(std::vector<uint32_t> factor_orders);

  /// A group given by its full addition table (row-major, order x order).
  /// Index 0 must be neutral. Used for quotient targets; the table is
  /// checked for the basic axioms (identity, inverses, associativity is
  /// trusted from the construction).
  static Group from_table(std::vector<uint32_t> add_table, std::string label);

  uint32_t order() const;

  /// Factor orders of a product group; empty for table groups.
  const std::vector<uint32_t>& factor_orders() const;

  /// True for groups built by product() (coordinate codec available).
  bool has_coordinates() const;

  uint32_t add(uint32_t x, uint32_t y) const;
  uint32_t neg(uint32_t x) const;
  uint32_t sub(uint32_t x, uint32_t y) const { return add(x, neg(y)); }
  uint32_t dbl(uint32_t x) const { return add(x, x); }

  /// t-fold sum of x, for any integer t (negative allowed).
  uint32_t scale(int64_t t, uint32_t x) const;

  /// Order of the element x in the group.
  uint32_t element_order(uint32_t x) const;

  /// Mixed-radix coordinates of an index (product groups only).
  std::vector<uint32_t> coords(uint32_t index) const;

  /// Index of a coordinate vector; coordinates are reduced mod the factor
  /// orders (product groups only).
  uint32_t index_of(const std::vector<uint32_t>& coordinates) const;

  /// Multiset of element orders, as (order, count) pairs sorted by order.
  /// The presentation-independent fingerprint used to compare quotients.
  std::vector<std::pair<uint32_t, uint32_t>> order_census() const;

  /// "Z15", "Z4xZ2", ... for product groups; the label for table groups.
  const std::string& presentation() const;

  /// Structural equality: same realization and same tables/factors.
  /// Shared-representation copies compare equal in O(1).
  bool operator==(const Group& other) const;
  bool operator!=(const Group& other) const { return !(*this == other); }

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace rsums
