#ifndef SIGMAFORGE_CATALOG_HPP
#define SIGMAFORGE_CATALOG_HPP

#include <string>
#include <vector>

#include "sigmaforge/group.hpp"

namespace sigmaforge {

// Built-in group constructors, addressed by name.
//
//   c<n>, cyclic:<n>        cyclic of order n >= 1
//   d<n>, dihedral:<n>      dihedral of order n (n even, n >= 6)
//   s<n>, symmetric:<n>     symmetric on n points
//   a<n>, alternating:<n>   alternating on n points (n >= 3)
//   v4                      Klein four-group
//   q8, quaternion8         quaternion group of order 8
//   sl23, sl(2,3)           SL(2,3) acting on the nonzero vectors of F_3^2
//   sl25, sl(2,5)           SL(2,5) acting on the nonzero vectors of F_5^2
//   wreath-a5-c2            A5 wr C2 in its product action on 10 points
//
// Names joined with 'x' build direct products on disjoint point sets, e.g.
// "c2xc4" or "c2xc2xs3".  Unknown names raise ConfigError.
GroupPtr catalog_group(const std::string& name,
                       long order_cap = PermGroup::kDefaultOrderCap);

// One line per family, for help text and error messages.
std::vector<std::string> catalog_listing();

}  // namespace sigmaforge

#endif
