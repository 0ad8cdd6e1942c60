#include "rsums/set_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsums {

GSubset sumset(const GSubset& a, const GSubset& b) {
  require_same_group(a, b);
  const Group& g = a.group();
  GSubset out(g);
  a.for_each([&](uint32_t x) {
    b.for_each([&](uint32_t y) { out.insert(g.add(x, y)); });
  });
  return out;
}

GSubset restricted_sumset(const GSubset& a, const GSubset& b, const GSubset& s) {
  require_same_group(a, b);
  require_same_group(a, s);
  const Group& g = a.group();
  GSubset out(g);
  a.for_each([&](uint32_t x) {
    b.for_each([&](uint32_t y) {
      if (!s.contains(g.sub(x, y))) out.insert(g.add(x, y));
    });
  });
  return out;
}

uint32_t nu(const GSubset& a, const GSubset& b, uint32_t z) {
  require_same_group(a, b);
  const Group& g = a.group();
  uint32_t count = 0;
  b.for_each([&](uint32_t y) {
    if (a.contains(g.sub(z, y))) ++count;
  });
  return count;
}

uint32_t doubling_constant(const Group& group) {
  uint32_t count = 0;
  for (uint32_t x = 0; x < group.order(); ++x)
    if (group.dbl(x) == 0) ++count;
  return count;
}

uint32_t ls_at(const GSubset& s, uint32_t z, LsMethod method) {
  const Group& g = s.group();
  if (z >= g.order()) throw std::invalid_argument("element index out of range");
  if (method == LsMethod::Brute) {
    // Every pair (x, y) with x + y = z is (z - y, y): test the difference.
    uint32_t count = 0;
    for (uint32_t y = 0; y < g.order(); ++y)
      if (s.contains(g.sub(g.sub(z, y), y))) ++count;
    return count;
  }
  GSubset coset(g);  // z + 2G
  for (uint32_t x = 0; x < g.order(); ++x) coset.insert(g.add(z, g.dbl(x)));
  return (s & coset).size() * doubling_constant(g);
}

uint32_t ls_max(const GSubset& s) {
  if (s.empty()) throw std::invalid_argument("L_S requires a non-empty S");
  const Group& g = s.group();
  const uint32_t n = g.order();
  // Bucket S by coset of 2G; L_S = L(G) * max bucket size.
  std::vector<uint32_t> doubles;
  {
    GSubset image(g);
    uint32_t prev = image.size();
    for (uint32_t x = 0; x < n; ++x) {
      image.insert(g.dbl(x));
      if (image.size() != prev) {
        doubles.push_back(g.dbl(x));
        prev = image.size();
      }
    }
  }
  const uint32_t lg = n / static_cast<uint32_t>(doubles.size());
  std::vector<uint32_t> class_id(n, n);
  uint32_t next = 0;
  for (uint32_t x = 0; x < n; ++x) {
    if (class_id[x] != n) continue;
    for (uint32_t d : doubles) class_id[g.add(x, d)] = next;
    ++next;
  }
  std::vector<uint32_t> bucket(next, 0);
  uint32_t best = 0;
  s.for_each([&](uint32_t x) { best = std::max(best, ++bucket[class_id[x]]); });
  return best * lg;
}

GSubset half(const GSubset& t) {
  const Group& g = t.group();
  GSubset out(g);
  for (uint32_t x = 0; x < g.order(); ++x)
    if (t.contains(g.dbl(x))) out.insert(x);
  return out;
}

GSubset dilate(int64_t t, const GSubset& a) {
  const Group& g = a.group();
  GSubset out(g);
  a.for_each([&](uint32_t x) { out.insert(g.scale(t, x)); });
  return out;
}

SymDecomp sym_decomp(const GSubset& s) {
  GSubset negated = s.negated();
  return SymDecomp{s & negated, s ^ negated};
}

GSubset exceptions(const GSubset& a, const GSubset& b, const GSubset& s) {
  return sumset(a, b) - restricted_sumset(a, b, s);
}

std::optional<std::vector<uint32_t>> coset_split(const GSubset& a,
                                                 const Subgroup& h) {
  if (a.group() != h.group())
    throw std::invalid_argument("subgroup belongs to a different group");
  if (a.size() % h.size() != 0) return std::nullopt;
  const Group& g = a.group();
  GSubset seen(g);
  std::vector<uint32_t> reps;
  bool ok = true;
  a.for_each([&](uint32_t x) {
    if (!ok || seen.contains(x)) return;
    // Ascending visit: x is the minimum of its coset within A.
    reps.push_back(x);
    h.carrier().for_each([&](uint32_t k) {
      uint32_t y = g.add(x, k);
      if (!a.contains(y))
        ok = false;
      else
        seen.insert(y);
    });
  });
  if (!ok) return std::nullopt;
  return reps;
}

GSubset stabilizer(const GSubset& c) {
  const Group& g = c.group();
  GSubset out(g);
  for (uint32_t x = 0; x < g.order(); ++x)
    if (c.translated(x) == c) out.insert(x);
  return out;
}

std::vector<GSubset> decompose_mod_2g(const GSubset& s) {
  const Group& g = s.group();
  GSubset two_g(g);
  for (uint32_t x = 0; x < g.order(); ++x) two_g.insert(g.dbl(x));
  std::vector<GSubset> classes;
  GSubset remaining = s;
  while (!remaining.empty()) {
    uint32_t rep = remaining.min_element();
    GSubset cls = remaining & two_g.translated(rep);
    classes.push_back(cls);
    remaining = remaining - cls;
  }
  return classes;
}

}  // namespace rsums
