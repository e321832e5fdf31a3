// Finite permutation groups with fully materialised element sets, and
// subgroups referencing an ambient group by element index.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sigmaforge/perm.hpp"

namespace sigmaforge {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

// A concrete finite group: every element is enumerated up front (breadth
// first closure of the generators).  Enumeration refuses to cross the order
// cap.  Elements are stored sorted; index 0 is always the identity.
//
// Groups of order <= kTableLimit carry a full multiplication table so that
// index-level arithmetic is O(1); larger groups multiply permutations
// directly and binary-search the result.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
 public:
  static constexpr long kDefaultOrderCap = 10000;
  static constexpr long kTableLimit = 1024;

  static GroupPtr generate(int degree, std::vector<Perm> generators,
                           long order_cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<std::int32_t>& generator_indices() const {
    return gen_idx_;
  }

  const Perm& elem(int i) const { return elements_[static_cast<size_t>(i)]; }
  int index_of(const Perm& p) const;  // -1 when absent
  bool contains(const Perm& p) const { return index_of(p) >= 0; }

  // Index arithmetic.  All arguments are element indices.
  int mul(int a, int b) const;  // index of elem(a) * elem(b)
  int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
  long element_order(int a) const {
    return elements_[static_cast<size_t>(a)].order();
  }

 private:
  PermGroup() = default;

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;        // sorted; elements_[0] is the identity
  std::vector<std::int32_t> inverse_;
  std::vector<std::int32_t> gen_idx_;
  std::vector<std::int32_t> table_;   // order x order, empty above kTableLimit
};

// A subgroup is a sorted list of ambient element indices.  Subgroups of
// different ambients never interoperate.  Value type: cheap to copy, safe to
// share across threads once built.
class Subgroup {
 public:
  // Validates the subgroup axioms (identity, closure).
  Subgroup(GroupPtr ambient, std::vector<std::int32_t> indices);

  // Trusted constructor for internal callers that already guarantee closure.
  static Subgroup unchecked(GroupPtr ambient, std::vector<std::int32_t> sorted);

  const GroupPtr& ambient() const { return ambient_; }
  long order() const { return static_cast<long>(elems_.size()); }
  const std::vector<std::int32_t>& indices() const { return elems_; }
  bool contains(std::int32_t e) const;
  bool is_trivial() const { return elems_.size() == 1; }
  bool is_full() const { return order() == ambient_->order(); }

  bool operator==(const Subgroup& o) const;
  bool subset_of(const Subgroup& o) const;

  std::vector<Perm> element_perms() const;
  // A small generating set (greedy, deterministic), as ambient indices.
  std::vector<std::int32_t> small_generators() const;

  // The subgroup as a standalone group on the same points.
  GroupPtr as_group() const;

 private:
  Subgroup() = default;
  GroupPtr ambient_;
  std::vector<std::int32_t> elems_;  // sorted ascending
};

// Throws DomainError unless both subgroups live in the same ambient group.
void require_same_ambient(const Subgroup& a, const Subgroup& b);

}  // namespace sigmaforge
