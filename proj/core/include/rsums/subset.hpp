#pragma once

#include <cstdint>
#include <vector>

#include "rsums/group.hpp"

namespace rsums {

/**
 * A subset of a specific group, stored as a packed bitset over dense
 * element indices. Carries its group so that mixed-group operations can
 * be rejected. Set-algebra operators return new values.
 */
class GSubset {
 public:
  explicit GSubset(Group group);
  static GSubset from_indices(Group group, const std::vector<uint32_t>& indices);
  static GSubset single(Group group, uint32_t index);
  static GSubset full(Group group);

  const Group& group() const { return group_; }
  uint32_t universe() const { return universe_; }
  uint32_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(uint32_t index) const {
    return index < universe_ && (words_[index >> 6] >> (index & 63)) & 1;
  }
  void insert(uint32_t index);
  void erase(uint32_t index);

  bool operator==(const GSubset& other) const;
  bool operator!=(const GSubset& other) const { return !(*this == other); }
  bool is_subset_of(const GSubset& other) const;
  bool intersects(const GSubset& other) const;

  GSubset operator|(const GSubset& other) const;
  GSubset operator&(const GSubset& other) const;
  GSubset operator-(const GSubset& other) const;  // set difference
  GSubset operator^(const GSubset& other) const;
  GSubset complement() const;

  /// { t + a : a in this }
  GSubset translated(uint32_t t) const;
  /// { -a : a in this }
  GSubset negated() const;

  /// Smallest element index; throws on the empty set.
  uint32_t min_element() const;
  std::vector<uint32_t> elements() const;

  /// Visit set members in ascending index order.
  template <typename F>
  void for_each(F&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t word = words_[w];
      while (word) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
        fn(static_cast<uint32_t>((w << 6) + bit));
        word &= word - 1;
      }
    }
  }

  /// Lexicographic comparison of the sorted element sequences, used for
  /// canonical ordering of carriers and fingerprints.
  static bool lex_less(const GSubset& a, const GSubset& b);

 private:
  Group group_;
  uint32_t universe_;
  uint32_t size_;
  std::vector<uint64_t> words_;

  void recount();
  void clear_tail();
};

/// Throws std::invalid_argument unless both subsets live in the same group.
void require_same_group(const GSubset& a, const GSubset& b);

}  // namespace rsums
