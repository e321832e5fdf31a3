// Group-theoretic operations on subgroups of a fixed ambient group.
#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sigmaforge/group.hpp"

namespace sigmaforge {

class SigmaPartition;  // sigma.hpp

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

// <seed> inside the ambient group.  Seeds are ambient element indices.
Subgroup generate_subgroup(const GroupPtr& g,
                           const std::vector<std::int32_t>& seeds);
// Same, from explicit permutations (each must belong to the ambient group).
Subgroup generate_subgroup(const GroupPtr& g, const std::vector<Perm>& seeds);
// Locates existing ambient elements; throws DomainError when absent.
Subgroup subgroup_from_perms(const GroupPtr& g, const std::vector<Perm>& perms);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup conjugate(const Subgroup& a, std::int32_t g);

// Does a b == b a as element sets?  (Permutability of subgroups.)
bool permutes(const Subgroup& a, const Subgroup& b);

bool is_normal(const Subgroup& a, const Subgroup& b);      // requires a <= b
Subgroup core(const Subgroup& a, const Subgroup& b);       // largest <=a normal in b
Subgroup normal_closure(const Subgroup& a, const Subgroup& b);  // <a^b>

Subgroup center(const Subgroup& h);
Subgroup centralizer(const Subgroup& g_scope, const Subgroup& h);
Subgroup normalizer(const Subgroup& g_scope, const Subgroup& h);
Subgroup derived_subgroup(const Subgroup& h);
Subgroup perfect_limit(const Subgroup& h);  // last term of the derived series
bool is_abelian(const Subgroup& h);
bool is_soluble(const Subgroup& h);
bool is_perfect(const Subgroup& h);

// Whether conjugation by ambient element x maps every cyclic subgroup of a
// to itself.  Requires x to normalize a.
bool induces_power_automorphism(std::int32_t x, const Subgroup& a);

// Conjugacy classes of h (orbits of h on itself), each a sorted index list,
// ordered by least element.  Identity class comes first.
std::vector<std::vector<std::int32_t>> conjugacy_classes(const Subgroup& h);

// All normal subgroups of h: joins of normal closures of single conjugacy
// classes, closed under pairwise join.  Sorted by (order, elements).
std::vector<Subgroup> normal_subgroups(const Subgroup& h);
std::vector<Subgroup> minimal_normal_subgroups(const Subgroup& h);

// One chief series of the ambient group refined through z (which must be
// normal), returned as (below, above) pairs with prime or characteristically
// simple factors.  Empty when z is trivial.
std::vector<std::pair<Subgroup, Subgroup>> chief_factors_below(
    const GroupPtr& g, const Subgroup& z);
// Same, for the stretch between two normal subgroups lower <= upper.
std::vector<std::pair<Subgroup, Subgroup>> chief_factors_between(
    const GroupPtr& g, const Subgroup& lower, const Subgroup& upper);

// C_scope(top/bottom): elements of scope commuting with top modulo bottom.
// Requires bottom normal in the ambient group and top normalizing bottom.
Subgroup section_centralizer(const Subgroup& scope, const Subgroup& top,
                             const Subgroup& bottom);

// Largest normal subgroup of h whose order involves only the given primes.
Subgroup o_pi(const Subgroup& h, const std::set<int>& primes);
Subgroup fitting_subgroup(const Subgroup& h);
// Intersection of the maximal subgroups.  Falls back to the subgroup lattice
// when the Fitting subgroup is nontrivial.
Subgroup frattini(const Subgroup& h);

Subgroup sylow_subgroup(const Subgroup& h, int p);
std::vector<Subgroup> all_sylow_subgroups(const Subgroup& h, int p);
bool is_nilpotent(const Subgroup& h);

enum class ResidualClass { DerivedLimit, Soluble, Nilpotent, SigmaNilpotent };

// Smallest normal subgroup with quotient in the class.  The three formation
// classes intersect over all normal subgroups with quotient in the class;
// DerivedLimit iterates derived subgroups instead (an independent route to
// the soluble residual).
Subgroup residual(const GroupPtr& g, ResidualClass cls,
                  const SigmaPartition* sigma = nullptr);

// G/N by the action on right cosets of N.  A trivial kernel returns the
// source group itself (exact, and avoids a pointless regular representation).
class QuotientGroup {
 public:
  QuotientGroup(GroupPtr source, Subgroup kernel);

  const GroupPtr& source() const { return source_; }
  const Subgroup& kernel() const { return kernel_; }
  const GroupPtr& group() const { return group_; }

  int image_of(std::int32_t source_elem) const {
    return image_[static_cast<size_t>(source_elem)];
  }
  Subgroup image(const Subgroup& s) const;     // subgroup of group()
  Subgroup preimage(const Subgroup& q) const;  // subgroup of source()

 private:
  GroupPtr source_;
  Subgroup kernel_;
  GroupPtr group_;
  std::vector<std::int32_t> image_;
};

QuotientGroup quotient(const GroupPtr& g, const Subgroup& n);
// Isomorphism type of the section top/bottom (bottom normal in top).
GroupPtr section_group(const Subgroup& top, const Subgroup& bottom);

// Primes dividing n, ascending.
std::vector<int> prime_factors(long n);
// Largest divisor of n whose prime factors all lie in `primes`.
long pi_part(long n, const std::set<int>& primes);

}  // namespace sigmaforge
