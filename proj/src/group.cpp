#include "sigmaforge/group.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

GroupPtr PermGroup::generate(int degree, std::vector<Perm> generators,
                             long order_cap) {
  if (degree < 1 || degree > 255)
    throw DomainError("group degree must be between 1 and 255");
  if (order_cap < 1) throw ConfigError("order cap must be positive");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw DomainError("generator degree does not match group degree");

  // Closure under right multiplication by the generators.  Inverses come for
  // free in a finite group, so one-sided products suffice.
  std::set<Perm> seen;
  std::queue<const Perm*> todo;
  auto push = [&](Perm p) {
    auto [it, fresh] = seen.insert(std::move(p));
    if (fresh) {
      if (static_cast<long>(seen.size()) > order_cap)
        throw ScaleError("group order exceeds the cap of " +
                         std::to_string(order_cap) +
                         " elements; raise the cap to proceed");
      todo.push(&*it);
    }
  };
  push(Perm::identity(degree));
  for (const Perm& g : generators) push(g);
  while (!todo.empty()) {
    const Perm* x = todo.front();
    todo.pop();
    for (const Perm& g : generators) push(*x * g);
  }

  auto group = std::shared_ptr<PermGroup>(new PermGroup());
  group->degree_ = degree;
  group->generators_ = std::move(generators);
  group->elements_.assign(seen.begin(), seen.end());

  // The identity is lexicographically least in any permutation group.
  if (!group->elements_[0].is_identity())
    throw DomainError("internal: identity is not the first element");

  long n = group->order();
  group->inverse_.resize(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    int j = group->index_of(group->elements_[static_cast<size_t>(i)].inverse());
    group->inverse_[static_cast<size_t>(i)] = j;
  }
  group->gen_idx_.reserve(group->generators_.size());
  for (const Perm& g : group->generators_)
    group->gen_idx_.push_back(group->index_of(g));

  if (n <= kTableLimit) {
    group->table_.resize(static_cast<size_t>(n * n));
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        Perm p = group->elements_[static_cast<size_t>(a)] *
                 group->elements_[static_cast<size_t>(b)];
        group->table_[static_cast<size_t>(a * n + b)] = group->index_of(p);
      }
  }
  return group;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int PermGroup::mul(int a, int b) const {
  if (!table_.empty())
    return table_[static_cast<size_t>(static_cast<long>(a) * order() + b)];
  return index_of(elements_[static_cast<size_t>(a)] *
                  elements_[static_cast<size_t>(b)]);
}

Subgroup::Subgroup(GroupPtr ambient, std::vector<std::int32_t> indices)
    : ambient_(std::move(ambient)), elems_(std::move(indices)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty() || elems_[0] != 0)
    throw DomainError("subgroup must contain the identity");
  if (ambient_->order() % order() != 0)
    throw DomainError("subgroup size does not divide the group order");
  for (std::int32_t a : elems_)
    for (std::int32_t b : elems_)
      if (!contains(ambient_->mul(a, b)))
        throw DomainError("subgroup is not closed under multiplication");
}

Subgroup Subgroup::unchecked(GroupPtr ambient,
                             std::vector<std::int32_t> sorted) {
  Subgroup s;
  s.ambient_ = std::move(ambient);
  s.elems_ = std::move(sorted);
  return s;
}

bool Subgroup::contains(std::int32_t e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

bool Subgroup::operator==(const Subgroup& o) const {
  require_same_ambient(*this, o);
  return elems_ == o.elems_;
}

bool Subgroup::subset_of(const Subgroup& o) const {
  require_same_ambient(*this, o);
  if (order() > o.order()) return false;
  return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(),
                       elems_.end());
}

std::vector<Perm> Subgroup::element_perms() const {
  std::vector<Perm> out;
  out.reserve(elems_.size());
  for (std::int32_t e : elems_) out.push_back(ambient_->elem(e));
  return out;
}

std::vector<std::int32_t> Subgroup::small_generators() const {
  if (is_full()) {
    // The ambient group's own generators, minus identity and duplicates.
    std::vector<std::int32_t> gens;
    for (std::int32_t g : ambient_->generator_indices())
      if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end())
        gens.push_back(g);
    return gens;
  }
  std::vector<std::int32_t> gens;
  std::vector<char> closed(static_cast<size_t>(ambient_->order()), 0);
  closed[0] = 1;
  long closed_count = 1;
  for (std::int32_t e : elems_) {
    if (closed[static_cast<size_t>(e)]) continue;
    gens.push_back(e);
    // Re-close: BFS over right multiplication by the generators so far.
    std::vector<std::int32_t> frontier{0};
    std::fill(closed.begin(), closed.end(), 0);
    closed[0] = 1;
    closed_count = 1;
    for (std::int32_t g : gens)
      if (!closed[static_cast<size_t>(g)]) {
        closed[static_cast<size_t>(g)] = 1;
        ++closed_count;
        frontier.push_back(g);
      }
    for (size_t i = 0; i < frontier.size(); ++i)
      for (std::int32_t g : gens) {
        std::int32_t y = ambient_->mul(frontier[i], g);
        if (!closed[static_cast<size_t>(y)]) {
          closed[static_cast<size_t>(y)] = 1;
          ++closed_count;
          frontier.push_back(y);
        }
      }
    if (closed_count == order()) break;
  }
  return gens;  // empty for the trivial subgroup
}

GroupPtr Subgroup::as_group() const {
  std::vector<Perm> gens;
  for (std::int32_t g : small_generators()) gens.push_back(ambient_->elem(g));
  GroupPtr h = PermGroup::generate(ambient_->degree(), std::move(gens),
                                   std::max(order(), 1L));
  if (h->order() != order())
    throw DomainError("internal: as_group produced a different order");
  return h;
}

void require_same_ambient(const Subgroup& a, const Subgroup& b) {
  if (a.ambient().get() != b.ambient().get())
    throw DomainError("subgroups live in different ambient groups");
}

}  // namespace sigmaforge
