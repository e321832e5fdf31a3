#ifndef SIGMAFORGE_GROUP_IO_HPP
#define SIGMAFORGE_GROUP_IO_HPP

#include <string>

#include "sigmaforge/group.hpp"

namespace sigmaforge {

// Group text format: first line `degree N`, then one generator per line in
// disjoint-cycle notation over 0-based points; identity is `()`.  Blank
// lines and `#` comments are skipped.  Errors carry line/column positions.
GroupPtr parse_group_text(const std::string& text,
                          long order_cap = PermGroup::kDefaultOrderCap);
GroupPtr load_group_file(const std::string& path,
                         long order_cap = PermGroup::kDefaultOrderCap);

// Canonical form: `degree N` plus one generator per line.  parse of a
// serialization reproduces the same group and the same text.
std::string serialize_group(const GroupPtr& g);

}  // namespace sigmaforge

#endif
