#pragma once

#include <map>
#include <string>
#include <string_view>

#include "rsums/subgroup.hpp"

namespace rsums {

/// "Z15", "Z4xZ2", "Z2xZ2xZ2" -> the corresponding product group.
Group parse_group(std::string_view presentation);

/// Named subgroups available to subset literals ("2+H").
using SubgroupEnv = std::map<std::string, Subgroup, std::less<>>;

/**
 * Subset literal: comma-separated terms, each one of
 *   - an element index:            "7"
 *   - a coordinate tuple:          "(3,1)"
 *   - a coset block rep+NAME:      "2+H"  or  "(1,0)+H"
 * Whitespace is ignored. An empty literal is the empty set.
 */
GSubset parse_subset(const Group& group, std::string_view literal,
                     const SubgroupEnv& env = {});

/// One element: an index or a coordinate tuple.
uint32_t parse_element(const Group& group, std::string_view text);

}  // namespace rsums
