#include "rsums/parse.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace rsums {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

uint32_t parse_number(std::string_view s) {
  s = trim(s);
  uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("expected a number, got '" + std::string(s) + "'");
  return value;
}

/// Splits on commas that are not inside parentheses.
std::vector<std::string_view> split_terms(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

Group parse_group(std::string_view presentation) {
  std::string_view s = trim(presentation);
  if (s.empty()) throw std::invalid_argument("empty group presentation");
  std::vector<uint32_t> orders;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'Z' && s[pos] != 'z')
      throw std::invalid_argument("group presentation must look like Z15 or Z4xZ2");
    ++pos;
    size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
      ++end;
    if (end == pos)
      throw std::invalid_argument("missing factor order in group presentation");
    orders.push_back(parse_number(s.substr(pos, end - pos)));
    pos = end;
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != 'X')
        throw std::invalid_argument("expected 'x' between group factors");
      ++pos;
    }
  }
  return Group::product(std::move(orders));
}

uint32_t parse_element(const Group& group, std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty element literal");
  if (s.front() == '(') {
    if (s.back() != ')')
      throw std::invalid_argument("unbalanced tuple literal '" + std::string(s) + "'");
    s.remove_prefix(1);
    s.remove_suffix(1);
    std::vector<uint32_t> coords;
    for (std::string_view part : split_terms(s)) coords.push_back(parse_number(part));
    return group.index_of(coords);
  }
  const uint32_t idx = parse_number(s);
  if (idx >= group.order())
    throw std::invalid_argument("element index out of range for " +
                                group.presentation());
  return idx;
}

GSubset parse_subset(const Group& group, std::string_view literal,
                     const SubgroupEnv& env) {
  GSubset out(group);
  std::string_view s = trim(literal);
  if (s.empty()) return out;
  for (std::string_view term : split_terms(s)) {
    term = trim(term);
    // A '+' outside parentheses marks a coset block rep+NAME.
    size_t plus = std::string_view::npos;
    int depth = 0;
    for (size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')') --depth;
      if (term[i] == '+' && depth == 0) {
        plus = i;
        break;
      }
    }
    if (plus == std::string_view::npos) {
      out.insert(parse_element(group, term));
      continue;
    }
    const uint32_t rep = parse_element(group, term.substr(0, plus));
    std::string name(trim(term.substr(plus + 1)));
    auto it = env.find(name);
    if (it == env.end())
      throw std::invalid_argument("unknown subgroup name '" + name + "'");
    if (it->second.group() != group)
      throw std::invalid_argument("subgroup '" + name + "' is over another group");
    it->second.carrier().for_each(
        [&](uint32_t h) { out.insert(group.add(rep, h)); });
  }
  return out;
}

}  // namespace rsums
