#include "rsums/subset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rsums {

GSubset::GSubset(Group group)
    : group_(std::move(group)),
      universe_(group_.order()),
      size_(0),
      words_((universe_ + 63) / 64, 0) {}

GSubset GSubset::from_indices(Group group, const std::vector<uint32_t>& indices) {
  GSubset s(std::move(group));
  for (uint32_t i : indices) s.insert(i);
  return s;
}

GSubset GSubset::single(Group group, uint32_t index) {
  GSubset s(std::move(group));
  s.insert(index);
  return s;
}

GSubset GSubset::full(Group group) {
  GSubset s(std::move(group));
  for (auto& w : s.words_) w = ~uint64_t{0};
  s.clear_tail();
  s.size_ = s.universe_;
  return s;
}

void GSubset::insert(uint32_t index) {
  if (index >= universe_) throw std::invalid_argument("subset element out of range");
  uint64_t& w = words_[index >> 6];
  uint64_t mask = uint64_t{1} << (index & 63);
  if (!(w & mask)) {
    w |= mask;
    ++size_;
  }
}

void GSubset::erase(uint32_t index) {
  if (index >= universe_) throw std::invalid_argument("subset element out of range");
  uint64_t& w = words_[index >> 6];
  uint64_t mask = uint64_t{1} << (index & 63);
  if (w & mask) {
    w &= ~mask;
    --size_;
  }
}

bool GSubset::operator==(const GSubset& other) const {
  return group_ == other.group_ && words_ == other.words_;
}

bool GSubset::is_subset_of(const GSubset& other) const {
  require_same_group(*this, other);
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool GSubset::intersects(const GSubset& other) const {
  require_same_group(*this, other);
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

GSubset GSubset::operator|(const GSubset& other) const {
  require_same_group(*this, other);
  GSubset out(group_);
  for (size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] | other.words_[i];
  out.recount();
  return out;
}

GSubset GSubset::operator&(const GSubset& other) const {
  require_same_group(*this, other);
  GSubset out(group_);
  for (size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & other.words_[i];
  out.recount();
  return out;
}

GSubset GSubset::operator-(const GSubset& other) const {
  require_same_group(*this, other);
  GSubset out(group_);
  for (size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & ~other.words_[i];
  out.recount();
  return out;
}

GSubset GSubset::operator^(const GSubset& other) const {
  require_same_group(*this, other);
  GSubset out(group_);
  for (size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] ^ other.words_[i];
  out.recount();
  return out;
}

GSubset GSubset::complement() const {
  GSubset out(group_);
  for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.clear_tail();
  out.size_ = universe_ - size_;
  return out;
}

GSubset GSubset::translated(uint32_t t) const {
  GSubset out(group_);
  for_each([&](uint32_t x) { out.insert(group_.add(t, x)); });
  return out;
}

GSubset GSubset::negated() const {
  GSubset out(group_);
  for_each([&](uint32_t x) { out.insert(group_.neg(x)); });
  return out;
}

uint32_t GSubset::min_element() const {
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w])
      return static_cast<uint32_t>((w << 6) + std::countr_zero(words_[w]));
  throw std::invalid_argument("min_element of empty subset");
}

std::vector<uint32_t> GSubset::elements() const {
  std::vector<uint32_t> out;
  out.reserve(size_);
  for_each([&](uint32_t x) { out.push_back(x); });
  return out;
}

bool GSubset::lex_less(const GSubset& a, const GSubset& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

void GSubset::recount() {
  uint32_t n = 0;
  for (uint64_t w : words_) n += static_cast<uint32_t>(std::popcount(w));
  size_ = n;
}

void GSubset::clear_tail() {
  if (universe_ % 64 && !words_.empty())
    words_.back() &= (uint64_t{1} << (universe_ % 64)) - 1;
}

void require_same_group(const GSubset& a, const GSubset& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("subsets belong to different groups");
}

}  // namespace rsums
