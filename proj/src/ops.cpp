#include "sigmaforge/ops.hpp"

#include <algorithm>
#include <map>

#include "sigmaforge/errors.hpp"
#include "sigmaforge/lattice.hpp"
#include "sigmaforge/sigma.hpp"

namespace sigmaforge {

namespace {

// Closure of `seeds` under right multiplication, as sorted ambient indices.
// Seeds already inside the running closure are skipped, so a large seed set
// (say a whole conjugacy class) costs only a handful of generator rounds.
std::vector<std::int32_t> close_indices(const GroupPtr& g,
                                        const std::vector<std::int32_t>& seeds) {
  std::vector<char> in(static_cast<size_t>(g->order()), 0);
  std::vector<std::int32_t> members{0};
  std::vector<std::int32_t> gens;
  in[0] = 1;
  for (std::int32_t s : seeds) {
    if (in[static_cast<size_t>(s)]) continue;
    gens.push_back(s);
    in[static_cast<size_t>(s)] = 1;
    members.push_back(s);
    for (size_t i = 0; i < members.size(); ++i)
      for (std::int32_t x : gens) {
        std::int32_t y = g->mul(members[i], x);
        if (!in[static_cast<size_t>(y)]) {
          in[static_cast<size_t>(y)] = 1;
          members.push_back(y);
        }
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::int32_t> conj_indices(const GroupPtr& g,
                                       const std::vector<std::int32_t>& elems,
                                       std::int32_t by) {
  std::vector<std::int32_t> out;
  out.reserve(elems.size());
  for (std::int32_t e : elems) out.push_back(g->conj(e, by));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup trivial_subgroup(const GroupPtr& g) {
  return Subgroup::unchecked(g, {0});
}

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<std::int32_t> all(static_cast<size_t>(g->order()));
  for (long i = 0; i < g->order(); ++i) all[static_cast<size_t>(i)] = i;
  return Subgroup::unchecked(g, std::move(all));
}

Subgroup generate_subgroup(const GroupPtr& g,
                           const std::vector<std::int32_t>& seeds) {
  return Subgroup::unchecked(g, close_indices(g, seeds));
}

Subgroup generate_subgroup(const GroupPtr& g, const std::vector<Perm>& seeds) {
  std::vector<std::int32_t> idx;
  for (const Perm& p : seeds) {
    int i = g->index_of(p);
    if (i < 0) throw DomainError("seed permutation is not an ambient element");
    idx.push_back(i);
  }
  return generate_subgroup(g, idx);
}

Subgroup subgroup_from_perms(const GroupPtr& g,
                             const std::vector<Perm>& perms) {
  std::vector<std::int32_t> idx;
  idx.reserve(perms.size());
  for (const Perm& p : perms) {
    int i = g->index_of(p);
    if (i < 0) throw DomainError("permutation is not an ambient element");
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return Subgroup::unchecked(g, std::move(idx));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  std::vector<std::int32_t> out;
  std::set_intersection(a.indices().begin(), a.indices().end(),
                        b.indices().begin(), b.indices().end(),
                        std::back_inserter(out));
  return Subgroup::unchecked(a.ambient(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  std::vector<std::int32_t> seeds = a.small_generators();
  for (std::int32_t e : b.small_generators()) seeds.push_back(e);
  return generate_subgroup(a.ambient(), seeds);
}

Subgroup conjugate(const Subgroup& a, std::int32_t g) {
  return Subgroup::unchecked(a.ambient(),
                             conj_indices(a.ambient(), a.indices(), g));
}

bool permutes(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  const GroupPtr& g = a.ambient();
  // |AB| == |BA| always, so AB subset of BA suffices.
  std::vector<char> in_ba(static_cast<size_t>(g->order()), 0);
  for (std::int32_t y : b.indices())
    for (std::int32_t x : a.indices())
      in_ba[static_cast<size_t>(g->mul(y, x))] = 1;
  for (std::int32_t x : a.indices())
    for (std::int32_t y : b.indices())
      if (!in_ba[static_cast<size_t>(g->mul(x, y))]) return false;
  return true;
}

bool is_normal(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  if (!a.subset_of(b)) throw DomainError("is_normal requires a <= b");
  const GroupPtr& g = a.ambient();
  for (std::int32_t h : b.small_generators())
    for (std::int32_t x : a.indices())
      if (!a.contains(g->conj(x, h))) return false;
  return true;
}

Subgroup core(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  if (!a.subset_of(b)) throw DomainError("core requires a <= b");
  const GroupPtr& g = a.ambient();
  std::vector<std::int32_t> gens = b.small_generators();
  std::vector<std::int32_t> cur = a.indices();
  // Intersect with conjugates until stable; the fixpoint is normal in b and
  // contains every subgroup of a that is.
  for (;;) {
    bool changed = false;
    for (std::int32_t h : gens) {
      std::vector<std::int32_t> conj = conj_indices(g, cur, h);
      std::vector<std::int32_t> next;
      std::set_intersection(cur.begin(), cur.end(), conj.begin(), conj.end(),
                            std::back_inserter(next));
      if (next.size() != cur.size()) {
        cur = std::move(next);
        changed = true;
      }
    }
    if (!changed) return Subgroup::unchecked(g, std::move(cur));
  }
}

Subgroup normal_closure(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  if (!a.subset_of(b)) throw DomainError("normal_closure requires a <= b");
  const GroupPtr& g = a.ambient();
  std::vector<std::int32_t> gens = b.small_generators();
  // Orbit of a's elements under conjugation by b, then multiplicative closure.
  std::vector<char> in(static_cast<size_t>(g->order()), 0);
  std::vector<std::int32_t> orbit;
  for (std::int32_t e : a.indices()) {
    in[static_cast<size_t>(e)] = 1;
    orbit.push_back(e);
  }
  for (size_t i = 0; i < orbit.size(); ++i)
    for (std::int32_t h : gens) {
      std::int32_t y = g->conj(orbit[i], h);
      if (!in[static_cast<size_t>(y)]) {
        in[static_cast<size_t>(y)] = 1;
        orbit.push_back(y);
      }
    }
  return generate_subgroup(g, orbit);
}

Subgroup center(const Subgroup& h) {
  const GroupPtr& g = h.ambient();
  std::vector<std::int32_t> gens = h.small_generators();
  std::vector<std::int32_t> out;
  for (std::int32_t x : h.indices()) {
    bool central = true;
    for (std::int32_t y : gens)
      if (g->mul(x, y) != g->mul(y, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return Subgroup::unchecked(g, std::move(out));
}

Subgroup centralizer(const Subgroup& g_scope, const Subgroup& h) {
  require_same_ambient(g_scope, h);
  const GroupPtr& g = h.ambient();
  std::vector<std::int32_t> gens = h.small_generators();
  std::vector<std::int32_t> out;
  for (std::int32_t x : g_scope.indices()) {
    bool ok = true;
    for (std::int32_t y : gens)
      if (g->mul(x, y) != g->mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup::unchecked(g, std::move(out));
}

Subgroup normalizer(const Subgroup& g_scope, const Subgroup& h) {
  require_same_ambient(g_scope, h);
  const GroupPtr& g = h.ambient();
  std::vector<std::int32_t> out;
  for (std::int32_t x : g_scope.indices()) {
    bool ok = true;
    for (std::int32_t y : h.indices())
      if (!h.contains(g->conj(y, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup::unchecked(g, std::move(out));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const GroupPtr& g = h.ambient();
  std::vector<std::int32_t> gens = h.small_generators();
  std::vector<std::int32_t> comms;
  for (std::int32_t a : gens)
    for (std::int32_t b : gens) {
      // [a, b] = a^-1 b^-1 a b
      std::int32_t c = g->mul(g->mul(g->mul(g->inv(a), g->inv(b)), a), b);
      comms.push_back(c);
    }
  Subgroup seed = generate_subgroup(g, comms);
  return normal_closure(seed, h);
}

Subgroup perfect_limit(const Subgroup& h) {
  Subgroup cur = h;
  for (;;) {
    Subgroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) return cur;
    cur = next;
  }
}

bool is_abelian(const Subgroup& h) { return center(h).order() == h.order(); }

bool is_soluble(const Subgroup& h) { return perfect_limit(h).is_trivial(); }

bool is_perfect(const Subgroup& h) {
  return derived_subgroup(h).order() == h.order();
}

bool induces_power_automorphism(std::int32_t x, const Subgroup& a) {
  const GroupPtr& g = a.ambient();
  for (std::int32_t y : a.indices())
    if (!a.contains(g->conj(y, x)))
      throw DomainError("element does not normalize the subgroup");
  for (std::int32_t y : a.indices()) {
    // x y x^-1 must be a power of y.
    std::int32_t im = g->mul(g->mul(x, y), g->inv(x));
    bool found = false;
    std::int32_t p = 0;  // identity
    do {
      if (p == im) {
        found = true;
        break;
      }
      p = g->mul(p, y);
    } while (p != 0);
    if (!found) return false;
  }
  return true;
}

std::vector<std::vector<std::int32_t>> conjugacy_classes(const Subgroup& h) {
  const GroupPtr& g = h.ambient();
  std::vector<std::int32_t> gens = h.small_generators();
  std::vector<char> assigned(static_cast<size_t>(g->order()), 0);
  std::vector<std::vector<std::int32_t>> classes;
  for (std::int32_t e : h.indices()) {
    if (assigned[static_cast<size_t>(e)]) continue;
    std::vector<std::int32_t> orbit{e};
    assigned[static_cast<size_t>(e)] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
      for (std::int32_t x : gens) {
        std::int32_t y = g->conj(orbit[i], x);
        if (!assigned[static_cast<size_t>(y)]) {
          assigned[static_cast<size_t>(y)] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

namespace {

// Sorted-unique list of subgroups, keyed by their index vectors.
struct SubgroupSet {
  std::map<std::vector<std::int32_t>, Subgroup> by_elems;
  bool insert(const Subgroup& s) {
    return by_elems.emplace(s.indices(), s).second;
  }
  std::vector<Subgroup> sorted() const {
    std::vector<Subgroup> out;
    out.reserve(by_elems.size());
    for (const auto& [k, v] : by_elems) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order() != b.order()) return a.order() < b.order();
      return a.indices() < b.indices();
    });
    return out;
  }
};

// Normal closures of single nontrivial conjugacy classes: the atoms from
// which every normal subgroup is a join.
std::vector<Subgroup> class_closure_atoms(const Subgroup& h) {
  std::vector<Subgroup> atoms;
  for (const auto& cls : conjugacy_classes(h)) {
    if (cls.size() == 1 && cls[0] == 0) continue;
    atoms.push_back(generate_subgroup(h.ambient(), cls));
  }
  return atoms;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const Subgroup& h) {
  SubgroupSet found;
  found.insert(Subgroup::unchecked(h.ambient(), {0}));
  std::vector<Subgroup> work;
  for (const Subgroup& a : class_closure_atoms(h))
    if (found.insert(a)) work.push_back(a);
  // Close under pairwise join (a join of normal subgroups is normal).
  while (!work.empty()) {
    Subgroup cur = work.back();
    work.pop_back();
    std::vector<Subgroup> snapshot = found.sorted();
    for (const Subgroup& other : snapshot) {
      if (cur.subset_of(other) || other.subset_of(cur)) continue;
      Subgroup j = join(cur, other);
      if (found.insert(j)) work.push_back(j);
    }
  }
  found.insert(h);
  return found.sorted();
}

std::vector<Subgroup> minimal_normal_subgroups(const Subgroup& h) {
  // Minimal elements of the atom set are exactly the minimal normals.
  std::vector<Subgroup> atoms = class_closure_atoms(h);
  std::vector<Subgroup> out;
  for (const Subgroup& a : atoms) {
    bool minimal = true;
    for (const Subgroup& b : atoms)
      if (b.order() < a.order() && b.subset_of(a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  SubgroupSet dedup;
  std::vector<Subgroup> uniq;
  for (const Subgroup& s : out)
    if (dedup.insert(s)) uniq.push_back(s);
  std::sort(uniq.begin(), uniq.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.indices() < b.indices();
  });
  return uniq;
}

std::vector<std::pair<Subgroup, Subgroup>> chief_factors_between(
    const GroupPtr& g, const Subgroup& lower, const Subgroup& upper) {
  Subgroup top = full_subgroup(g);
  if (!is_normal(lower, top) || !is_normal(upper, top))
    throw DomainError("chief series requires normal endpoints");
  if (!lower.subset_of(upper))
    throw DomainError("chief series requires lower <= upper");
  std::vector<Subgroup> normals = normal_subgroups(top);
  std::vector<std::pair<Subgroup, Subgroup>> factors;
  Subgroup cur = lower;
  while (cur.order() < upper.order()) {
    // Minimal normal subgroup of G/cur inside upper: smallest-order normal
    // strictly above cur and inside upper with nothing normal strictly
    // between (nothing between follows from order minimality).
    const Subgroup* best = nullptr;
    for (const Subgroup& n : normals) {
      if (n.order() <= cur.order() || !n.subset_of(upper) || !cur.subset_of(n))
        continue;
      if (best == nullptr || n.order() < best->order()) best = &n;
    }
    if (best == nullptr)
      throw DomainError("internal: chief series failed to ascend");
    factors.emplace_back(cur, *best);
    cur = *best;
  }
  return factors;
}

std::vector<std::pair<Subgroup, Subgroup>> chief_factors_below(
    const GroupPtr& g, const Subgroup& z) {
  return chief_factors_between(g, trivial_subgroup(g), z);
}

Subgroup section_centralizer(const Subgroup& scope, const Subgroup& top,
                             const Subgroup& bottom) {
  const GroupPtr& g = scope.ambient();
  require_same_ambient(scope, top);
  require_same_ambient(scope, bottom);
  if (!is_normal(bottom, full_subgroup(g)))
    throw DomainError("section centralizer requires a normal bottom");
  std::vector<std::int32_t> gens = top.small_generators();
  std::vector<std::int32_t> out;
  for (std::int32_t e : scope.indices()) {
    bool central = true;
    for (std::int32_t h : gens) {
      // [e, h] = e^-1 h^-1 e h must land in bottom.
      std::int32_t c = g->mul(g->mul(g->inv(e), g->inv(h)), g->mul(e, h));
      if (!bottom.contains(c)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(e);
  }
  return Subgroup::unchecked(g, std::move(out));
}

Subgroup o_pi(const Subgroup& h, const std::set<int>& primes) {
  const GroupPtr& g = h.ambient();
  std::vector<std::int32_t> seeds;
  for (const auto& cls : conjugacy_classes(h)) {
    long ord = g->element_order(cls[0]);
    bool ok = true;
    for (int p : prime_factors(ord))
      if (!primes.count(p)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Subgroup closure = generate_subgroup(g, cls);
    if (pi_part(closure.order(), primes) == closure.order())
      for (std::int32_t e : cls) seeds.push_back(e);
  }
  if (seeds.empty()) return trivial_subgroup(g);
  Subgroup o = generate_subgroup(g, seeds);
  if (pi_part(o.order(), primes) != o.order())
    throw DomainError("internal: o_pi join left the prime set");
  return o;
}

Subgroup fitting_subgroup(const Subgroup& h) {
  std::vector<std::int32_t> seeds;
  for (int p : prime_factors(h.order())) {
    Subgroup op = o_pi(h, {p});
    for (std::int32_t e : op.indices()) seeds.push_back(e);
  }
  if (seeds.empty()) return trivial_subgroup(h.ambient());
  return generate_subgroup(h.ambient(), seeds);
}

Subgroup frattini(const Subgroup& h) {
  if (h.order() == 1) return trivial_subgroup(h.ambient());
  // The Frattini subgroup is nilpotent, hence inside the Fitting subgroup;
  // a trivial Fitting subgroup short-circuits the lattice build.
  if (fitting_subgroup(h).is_trivial()) return trivial_subgroup(h.ambient());
  SubgroupLattice lat = SubgroupLattice::build_below(h);
  Subgroup phi = h;
  for (int m : lat.maximal_subgroups()) phi = intersect(phi, lat.node(m));
  return phi;
}

Subgroup sylow_subgroup(const Subgroup& h, int p) {
  const GroupPtr& g = h.ambient();
  long target = 1;
  {
    long n = h.order();
    while (n % p == 0) {
      n /= p;
      target *= p;
    }
  }
  Subgroup cur = trivial_subgroup(g);
  while (cur.order() < target) {
    Subgroup scope = cur.is_trivial() ? h : normalizer(h, cur);
    bool grown = false;
    for (std::int32_t y : scope.indices()) {
      if (cur.contains(y)) continue;
      long ord = g->element_order(y);
      bool ppower = true;
      while (ord > 1) {
        if (ord % p != 0) {
          ppower = false;
          break;
        }
        ord /= p;
      }
      if (!ppower) continue;
      std::vector<std::int32_t> seeds = cur.small_generators();
      seeds.push_back(y);
      Subgroup next = generate_subgroup(g, seeds);
      if (pi_part(next.order(), {p}) == next.order()) {
        cur = next;
        grown = true;
        break;
      }
    }
    if (!grown)
      throw DomainError("internal: Sylow growth stalled");
  }
  return cur;
}

std::vector<Subgroup> all_sylow_subgroups(const Subgroup& h, int p) {
  Subgroup first = sylow_subgroup(h, p);
  SubgroupSet found;
  found.insert(first);
  std::vector<Subgroup> work{first};
  std::vector<std::int32_t> gens = h.small_generators();
  while (!work.empty()) {
    Subgroup cur = work.back();
    work.pop_back();
    for (std::int32_t x : gens) {
      Subgroup c = conjugate(cur, x);
      if (found.insert(c)) work.push_back(c);
    }
  }
  return found.sorted();
}

bool is_nilpotent(const Subgroup& h) {
  for (int p : prime_factors(h.order()))
    if (!is_normal(sylow_subgroup(h, p), h)) return false;
  return true;
}

Subgroup residual(const GroupPtr& g, ResidualClass cls,
                  const SigmaPartition* sigma) {
  Subgroup top = full_subgroup(g);
  if (cls == ResidualClass::DerivedLimit) return perfect_limit(top);
  if (cls == ResidualClass::SigmaNilpotent && sigma == nullptr)
    throw DomainError("sigma-nilpotent residual needs a partition");

  auto in_class = [&](const Subgroup& n) {
    GroupPtr q = quotient(g, n).group();
    Subgroup qfull = full_subgroup(q);
    switch (cls) {
      case ResidualClass::Soluble:
        return is_soluble(qfull);
      case ResidualClass::Nilpotent:
        return is_nilpotent(qfull);
      case ResidualClass::SigmaNilpotent:
        return is_sigma_nilpotent(qfull, *sigma);
      default:
        return false;
    }
  };

  // All three classes are formations (closed under subdirect products), so
  // the intersection of all normal subgroups with quotient in the class is
  // itself such a subgroup.
  Subgroup res = top;
  for (const Subgroup& n : normal_subgroups(top)) {
    if (res.subset_of(n)) continue;  // intersecting changes nothing
    if (in_class(n)) res = intersect(res, n);
  }
  if (!in_class(res))
    throw DomainError("internal: residual quotient left the class");
  return res;
}

QuotientGroup::QuotientGroup(GroupPtr source, Subgroup kernel)
    : source_(std::move(source)), kernel_(std::move(kernel)) {
  if (kernel_.ambient().get() != source_.get())
    throw DomainError("kernel is not a subgroup of the source group");
  if (!is_normal(kernel_, full_subgroup(source_)))
    throw DomainError("quotient kernel must be normal");

  long n = source_->order();
  image_.resize(static_cast<size_t>(n));
  if (kernel_.is_trivial()) {
    group_ = source_;
    for (long i = 0; i < n; ++i) image_[static_cast<size_t>(i)] = i;
    return;
  }

  long m = n / kernel_.order();
  std::vector<std::int32_t> coset(static_cast<size_t>(n), -1);
  std::vector<std::int32_t> reps;
  for (long i = 0; i < n; ++i) {
    if (coset[static_cast<size_t>(i)] >= 0) continue;
    std::int32_t c = static_cast<std::int32_t>(reps.size());
    reps.push_back(static_cast<std::int32_t>(i));
    for (std::int32_t k : kernel_.indices())
      coset[static_cast<size_t>(source_->mul(k, static_cast<std::int32_t>(i)))] = c;
  }
  if (static_cast<long>(reps.size()) != m)
    throw DomainError("internal: coset enumeration miscounted");

  auto action_of = [&](std::int32_t e) {
    std::vector<std::uint8_t> img(static_cast<size_t>(m));
    for (long c = 0; c < m; ++c)
      img[static_cast<size_t>(c)] = static_cast<std::uint8_t>(
          coset[static_cast<size_t>(source_->mul(reps[static_cast<size_t>(c)], e))]);
    return Perm(std::move(img));
  };

  if (m > 255)
    throw ScaleError("quotient index " + std::to_string(m) +
                     " exceeds the representable degree");
  std::vector<Perm> qgens;
  for (std::int32_t gi : source_->generator_indices())
    qgens.push_back(action_of(gi));
  group_ = PermGroup::generate(static_cast<int>(m), std::move(qgens), m);
  if (group_->order() != m)
    throw DomainError("internal: coset action has wrong order");
  for (long i = 0; i < n; ++i) {
    int idx = group_->index_of(action_of(static_cast<std::int32_t>(i)));
    if (idx < 0) throw DomainError("internal: quotient image missing");
    image_[static_cast<size_t>(i)] = idx;
  }
}

Subgroup QuotientGroup::image(const Subgroup& s) const {
  if (s.ambient().get() != source_.get())
    throw DomainError("image argument is not a subgroup of the source");
  std::vector<std::int32_t> out;
  out.reserve(static_cast<size_t>(s.order()));
  for (std::int32_t e : s.indices()) out.push_back(image_of(e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Subgroup::unchecked(group_, std::move(out));
}

Subgroup QuotientGroup::preimage(const Subgroup& q) const {
  if (q.ambient().get() != group_.get())
    throw DomainError("preimage argument is not a subgroup of the quotient");
  std::vector<std::int32_t> out;
  for (long i = 0; i < source_->order(); ++i)
    if (q.contains(image_of(static_cast<std::int32_t>(i))))
      out.push_back(static_cast<std::int32_t>(i));
  return Subgroup::unchecked(source_, std::move(out));
}

QuotientGroup quotient(const GroupPtr& g, const Subgroup& n) {
  return QuotientGroup(g, n);
}

GroupPtr section_group(const Subgroup& top, const Subgroup& bottom) {
  require_same_ambient(top, bottom);
  if (!bottom.subset_of(top)) throw DomainError("section requires bottom <= top");
  GroupPtr h = top.as_group();
  std::vector<std::int32_t> ker;
  for (std::int32_t e : bottom.indices()) {
    int i = h->index_of(top.ambient()->elem(e));
    if (i < 0) throw DomainError("internal: section kernel element missing");
    ker.push_back(i);
  }
  std::sort(ker.begin(), ker.end());
  return quotient(h, Subgroup::unchecked(h, std::move(ker))).group();
}

std::vector<int> prime_factors(long n) {
  std::vector<int> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

long pi_part(long n, const std::set<int>& primes) {
  long part = 1;
  for (int p : primes)
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

}  // namespace sigmaforge
