#include "rsums/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rsums/errors.hpp"

namespace rsums {

struct Group::Impl {
  std::vector<uint32_t> factors;  // empty for table groups
  std::vector<uint64_t> strides;  // mixed-radix weights, factors.size() entries
  uint32_t order = 1;
  std::string label;
  // Table realization; empty for product groups.
  std::vector<uint32_t> add_table;
  std::vector<uint32_t> neg_table;

  bool is_product() const { return add_table.empty(); }
};

namespace {

std::string product_label(const std::vector<uint32_t>& factors) {
  if (factors.empty()) return "Z1";
  std::ostringstream out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out << 'x';
    out << 'Z' << factors[i];
  }
  return out.str();
}

}  // namespace

Group Group::product(std::vector<uint32_t> factor_orders) {
  auto impl = std::make_shared<Impl>();
  uint64_t order = 1;
  for (uint32_t f : factor_orders) {
    if (f == 0) throw std::invalid_argument("group factor order must be >= 1");
    order *= f;
    if (order > (1u << 24))
      throw std::invalid_argument("group order too large for dense indexing");
  }
  impl->factors = std::move(factor_orders);
  impl->order = static_cast<uint32_t>(order);
  impl->strides.resize(impl->factors.size());
  uint64_t stride = 1;
  for (size_t i = impl->factors.size(); i-- > 0;) {
    impl->strides[i] = stride;
    stride *= impl->factors[i];
  }
  impl->label = product_label(impl->factors);
  return Group(std::move(impl));
}

Group Group::from_table(std::vector<uint32_t> add_table, std::string label) {
  auto impl = std::make_shared<Impl>();
  size_t n = 0;
  while (n * n < add_table.size()) ++n;
  if (n == 0 || n * n != add_table.size())
    throw std::invalid_argument("addition table must be square and non-empty");
  impl->order = static_cast<uint32_t>(n);
  impl->add_table = std::move(add_table);
  impl->neg_table.assign(n, 0);
  for (size_t x = 0; x < n; ++x) {
    if (impl->add_table[x * n] != x || impl->add_table[x] != x)
      throw std::invalid_argument("index 0 is not neutral in addition table");
    bool found = false;
    for (size_t y = 0; y < n; ++y) {
      uint32_t s = impl->add_table[x * n + y];
      if (s >= n) throw std::invalid_argument("addition table entry out of range");
      if (s == 0) {
        impl->neg_table[x] = static_cast<uint32_t>(y);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("element without inverse in table");
  }
  impl->label = std::move(label);
  return Group(std::move(impl));
}

uint32_t Group::order() const { return impl_->order; }

const std::vector<uint32_t>& Group::factor_orders() const {
  return impl_->factors;
}

bool Group::has_coordinates() const { return impl_->is_product(); }

uint32_t Group::add(uint32_t x, uint32_t y) const {
  const Impl& g = *impl_;
  if (x >= g.order || y >= g.order)
    throw std::invalid_argument("element index out of range");
  if (!g.is_product()) return g.add_table[static_cast<size_t>(x) * g.order + y];
  uint64_t out = 0;
  for (size_t i = 0; i < g.factors.size(); ++i) {
    uint32_t f = g.factors[i];
    uint32_t cx = static_cast<uint32_t>((x / g.strides[i]) % f);
    uint32_t cy = static_cast<uint32_t>((y / g.strides[i]) % f);
    uint32_t cs = cx + cy;
    if (cs >= f) cs -= f;
    out += cs * g.strides[i];
  }
  return static_cast<uint32_t>(out);
}

uint32_t Group::neg(uint32_t x) const {
  const Impl& g = *impl_;
  if (x >= g.order) throw std::invalid_argument("element index out of range");
  if (!g.is_product()) return g.neg_table[x];
  uint64_t out = 0;
  for (size_t i = 0; i < g.factors.size(); ++i) {
    uint32_t f = g.factors[i];
    uint32_t cx = static_cast<uint32_t>((x / g.strides[i]) % f);
    uint32_t cn = cx == 0 ? 0 : f - cx;
    out += cn * g.strides[i];
  }
  return static_cast<uint32_t>(out);
}

uint32_t Group::scale(int64_t t, uint32_t x) const {
  const Impl& g = *impl_;
  if (x >= g.order) throw std::invalid_argument("element index out of range");
  if (g.is_product()) {
    uint64_t out = 0;
    for (size_t i = 0; i < g.factors.size(); ++i) {
      uint32_t f = g.factors[i];
      uint64_t cx = (x / g.strides[i]) % f;
      int64_t tm = t % static_cast<int64_t>(f);
      if (tm < 0) tm += f;
      uint64_t cs = (cx * static_cast<uint64_t>(tm)) % f;
      out += cs * g.strides[i];
    }
    return static_cast<uint32_t>(out);
  }
  // Table group: double-and-add on the reduced scalar.
  int64_t tm = t % static_cast<int64_t>(g.order);
  if (tm < 0) tm += g.order;
  uint32_t acc = 0;
  uint32_t base = x;
  uint64_t k = static_cast<uint64_t>(tm);
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

uint32_t Group::element_order(uint32_t x) const {
  if (x >= impl_->order) throw std::invalid_argument("element index out of range");
  uint32_t y = x;
  uint32_t n = 1;
  while (y != 0) {
    y = add(y, x);
    ++n;
  }
  return n;
}

std::vector<uint32_t> Group::coords(uint32_t index) const {
  const Impl& g = *impl_;
  if (!g.is_product())
    throw std::invalid_argument("coordinates are defined for product groups only");
  if (index >= g.order) throw std::invalid_argument("element index out of range");
  std::vector<uint32_t> c(g.factors.size());
  for (size_t i = 0; i < g.factors.size(); ++i)
    c[i] = static_cast<uint32_t>((index / g.strides[i]) % g.factors[i]);
  return c;
}

uint32_t Group::index_of(const std::vector<uint32_t>& coordinates) const {
  const Impl& g = *impl_;
  if (!g.is_product())
    throw std::invalid_argument("coordinates are defined for product groups only");
  if (coordinates.size() != g.factors.size())
    throw std::invalid_argument("coordinate arity mismatch");
  uint64_t out = 0;
  for (size_t i = 0; i < g.factors.size(); ++i)
    out += (coordinates[i] % g.factors[i]) * g.strides[i];
  return static_cast<uint32_t>(out);
}

std::vector<std::pair<uint32_t, uint32_t>> Group::order_census() const {
  std::map<uint32_t, uint32_t> census;
  for (uint32_t x = 0; x < order(); ++x) ++census[element_order(x)];
  return {census.begin(), census.end()};
}

const std::string& Group::presentation() const { return impl_->label; }

bool Group::operator==(const Group& other) const {
  if (impl_ == other.impl_) return true;
  const Impl& a = *impl_;
  const Impl& b = *other.impl_;
  if (a.order != b.order || a.is_product() != b.is_product()) return false;
  if (a.is_product()) return a.factors == b.factors;
  return a.add_table == b.add_table;
}

}  // namespace rsums
