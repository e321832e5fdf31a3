#include "sigmaforge/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sigmaforge/errors.hpp"
#include "sigmaforge/sigma.hpp"

namespace sigmaforge {

SubgroupLattice SubgroupLattice::from_nodes(GroupPtr ambient,
                                            std::vector<Subgroup> nodes) {
  std::sort(nodes.begin(), nodes.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.indices() < b.indices();
  });

  SubgroupLattice lat;
  lat.ambient_ = std::move(ambient);
  lat.nodes_ = std::move(nodes);
  size_t s = lat.nodes_.size();
  lat.bottom_ = 0;
  lat.top_ = static_cast<int>(s) - 1;

  lat.leq_.assign(s * s, 0);
  for (size_t a = 0; a < s; ++a)
    for (size_t b = 0; b < s; ++b)
      lat.leq_[a * s + b] = lat.nodes_[a].subset_of(lat.nodes_[b]) ? 1 : 0;

  std::map<std::vector<std::int32_t>, int> by_elems;
  for (size_t i = 0; i < s; ++i)
    by_elems[lat.nodes_[i].indices()] = static_cast<int>(i);

  lat.join_.assign(s * s, -1);
  lat.meet_.assign(s * s, -1);
  for (size_t a = 0; a < s; ++a) {
    lat.join_[a * s + a] = static_cast<int>(a);
    lat.meet_[a * s + a] = static_cast<int>(a);
    for (size_t b = 0; b < a; ++b) {
      int j, m;
      if (lat.leq_[a * s + b]) {
        j = static_cast<int>(b);
        m = static_cast<int>(a);
      } else if (lat.leq_[b * s + a]) {
        j = static_cast<int>(a);
        m = static_cast<int>(b);
      } else {
        auto jit = by_elems.find(sigmaforge::join(lat.nodes_[a], lat.nodes_[b]).indices());
        auto mit = by_elems.find(intersect(lat.nodes_[a], lat.nodes_[b]).indices());
        if (jit == by_elems.end() || mit == by_elems.end())
          throw DomainError("internal: lattice is not closed under join/meet");
        j = jit->second;
        m = mit->second;
      }
      lat.join_[a * s + b] = lat.join_[b * s + a] = j;
      lat.meet_[a * s + b] = lat.meet_[b * s + a] = m;
    }
  }
  return lat;
}

SubgroupLattice SubgroupLattice::build_below(const Subgroup& top) {
  const GroupPtr& g = top.ambient();

  // Seed with every cyclic subgroup, then close under pairwise join.
  std::map<std::vector<std::int32_t>, Subgroup> found;
  auto insert = [&](const Subgroup& s) {
    return found.emplace(s.indices(), s).second;
  };
  insert(trivial_subgroup(g));
  for (std::int32_t e : top.indices())
    insert(generate_subgroup(g, std::vector<std::int32_t>{e}));

  std::vector<Subgroup> work;
  for (const auto& [k, v] : found) work.push_back(v);
  while (!work.empty()) {
    Subgroup cur = work.back();
    work.pop_back();
    std::vector<Subgroup> snapshot;
    snapshot.reserve(found.size());
    for (const auto& [k, v] : found) snapshot.push_back(v);
    for (const Subgroup& other : snapshot) {
      if (cur.subset_of(other) || other.subset_of(cur)) continue;
      Subgroup j = sigmaforge::join(cur, other);  // the member join() shadows
      if (insert(j)) work.push_back(j);
    }
  }

  std::vector<Subgroup> nodes;
  nodes.reserve(found.size());
  for (const auto& [k, v] : found) nodes.push_back(v);
  return from_nodes(g, std::move(nodes));
}

SubgroupLattice SubgroupLattice::build(const GroupPtr& g) {
  return build_below(full_subgroup(g));
}

int SubgroupLattice::index_of(const Subgroup& s) const {
  for (int i = 0; i < size(); ++i)
    if (nodes_[static_cast<size_t>(i)] == s) return i;
  return -1;
}

std::vector<int> SubgroupLattice::nodes_below(int k) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (leq(i, k)) out.push_back(i);
  return out;
}

std::vector<int> SubgroupLattice::maximal_subgroups() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (i == top_) continue;
    bool maximal = true;
    for (int j = 0; j < size(); ++j)
      if (j != i && j != top_ && leq(i, j)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

SubgroupLattice SubgroupLattice::interval(int a, int b) const {
  if (!leq(a, b)) throw DomainError("interval requires a <= b");
  std::vector<Subgroup> nodes;
  for (int i = 0; i < size(); ++i)
    if (leq(a, i) && leq(i, b)) nodes.push_back(node(i));
  return from_nodes(ambient_, std::move(nodes));
}

std::vector<std::pair<int, int>> SubgroupLattice::covering_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covering = true;
      for (int c = 0; c < size(); ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) {
          covering = false;
          break;
        }
      if (covering) out.emplace_back(a, b);
    }
  return out;
}

namespace {

// Shared scan for the two Kurosh conditions, restricted to nodes <= k.
bool modular_element_below(const SubgroupLattice& lat, int m, int k,
                           LatticeWitness* w) {
  std::vector<int> nodes = lat.nodes_below(k);
  for (int z : nodes) {
    for (int x : nodes) {
      if (lat.leq(x, z)) {
        // <X, M ^ Z> == <X, M> ^ Z
        if (lat.join(x, lat.meet(m, z)) != lat.meet(lat.join(x, m), z)) {
          if (w != nullptr) *w = LatticeWitness{1, x, -1, z};
          return false;
        }
      }
      if (lat.leq(m, z)) {
        // <M, Y ^ Z> == <M, Y> ^ Z   (y ranges over the same node set)
        if (lat.join(m, lat.meet(x, z)) != lat.meet(lat.join(m, x), z)) {
          if (w != nullptr) *w = LatticeWitness{2, -1, x, z};
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_modular_element(const SubgroupLattice& lat, int m, LatticeWitness* w) {
  return modular_element_below(lat, m, lat.top(), w);
}

bool is_modular_element_in(const SubgroupLattice& lat, int m, int k,
                           LatticeWitness* w) {
  if (!lat.leq(m, k)) throw DomainError("modularity scope must contain m");
  return modular_element_below(lat, m, k, w);
}

bool is_modular_lattice_below(const SubgroupLattice& lat, int k,
                              LatticeWitness* w) {
  std::vector<int> nodes = lat.nodes_below(k);
  for (int a : nodes)
    for (int b : nodes) {
      if (!lat.leq(a, b)) continue;
      for (int x : nodes)
        if (lat.join(a, lat.meet(x, b)) != lat.meet(lat.join(a, x), b)) {
          if (w != nullptr) *w = LatticeWitness{3, a, x, b};
          return false;
        }
    }
  return true;
}

bool is_modular_lattice(const SubgroupLattice& lat, LatticeWitness* w) {
  return is_modular_lattice_below(lat, lat.top(), w);
}

bool is_submodular(const SubgroupLattice& lat, int a) {
  // Mark everything reachable downward from the top by "modular element of
  // the lattice of the previous subgroup" steps.
  std::vector<char> marked(static_cast<size_t>(lat.size()), 0);
  marked[static_cast<size_t>(lat.top())] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h = 0; h < lat.size(); ++h) {
      if (marked[static_cast<size_t>(h)]) continue;
      for (int k = 0; k < lat.size(); ++k) {
        if (!marked[static_cast<size_t>(k)] || !lat.leq(h, k)) continue;
        if (modular_element_below(lat, h, k, nullptr)) {
          marked[static_cast<size_t>(h)] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  return marked[static_cast<size_t>(a)] != 0;
}

LatticeAnalysis::LatticeAnalysis(SubgroupLattice lat) : lat_(std::move(lat)) {
  size_t s = static_cast<size_t>(lat_.size());
  normal_.assign(s * s, 0);
  core_.assign(s * s, -1);
  modular_.assign(s * s, 0);
  for (int h = 0; h < lat_.size(); ++h)
    for (int k = 0; k < lat_.size(); ++k) {
      if (!lat_.leq(h, k)) continue;
      normal_[id(h, k)] = is_normal(lat_.node(h), lat_.node(k)) ? 1 : 0;
      Subgroup c = sigmaforge::core(lat_.node(h), lat_.node(k));
      int ci = lat_.index_of(c);
      if (ci < 0) throw DomainError("internal: core fell outside the lattice");
      core_[id(h, k)] = ci;
      modular_[id(h, k)] =
          modular_element_below(lat_, h, k, nullptr) ? 1 : 0;
    }
}

std::vector<char> subnormal_in(const LatticeAnalysis& an, int k) {
  const SubgroupLattice& lat = an.lattice();
  std::vector<char> marked(static_cast<size_t>(lat.size()), 0);
  marked[static_cast<size_t>(k)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h = 0; h < lat.size(); ++h) {
      if (marked[static_cast<size_t>(h)] || !lat.leq(h, k)) continue;
      for (int m = 0; m < lat.size(); ++m) {
        if (!marked[static_cast<size_t>(m)] || !lat.leq(h, m)) continue;
        if (an.normal_in(h, m)) {
          marked[static_cast<size_t>(h)] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  return marked;
}

std::string to_dot(const LatticeAnalysis& an, const SigmaQuasinormalDB* db) {
  const SubgroupLattice& lat = an.lattice();
  std::ostringstream os;
  os << "digraph subgroups {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < lat.size(); ++i) {
    std::string flags;
    if (an.normal_in(i, lat.top())) flags += 'N';
    if (an.modular_in(i, lat.top())) flags += 'M';
    if (db != nullptr && db->qn(i, lat.top())) flags += 'Q';
    os << "  n" << i << " [label=\"" << lat.node(i).order();
    if (!flags.empty()) os << ' ' << flags;
    os << "\"];\n";
  }
  for (auto [a, b] : lat.covering_pairs())
    os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace sigmaforge
