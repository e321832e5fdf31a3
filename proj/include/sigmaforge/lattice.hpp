// Full subgroup lattices and modularity tests on them.
#pragma once

#include <string>
#include <vector>

#include "sigmaforge/group.hpp"
#include "sigmaforge/ops.hpp"

namespace sigmaforge {

class SigmaPartition;
class SigmaQuasinormalDB;

// Every subgroup between a fixed bottom and top, with join/meet tables.
// Built by closing the cyclic subgroups under pairwise join; meets are then
// computed directly (set intersection) and double-checked to land on nodes.
// Nodes are sorted by (order, element list), so indices are deterministic.
class SubgroupLattice {
 public:
  static SubgroupLattice build(const GroupPtr& g);
  static SubgroupLattice build_below(const Subgroup& top);

  const GroupPtr& ambient() const { return ambient_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Subgroup& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
  int index_of(const Subgroup& s) const;  // -1 when absent

  bool leq(int a, int b) const { return leq_[id(a, b)]; }
  int join(int a, int b) const { return join_[id(a, b)]; }
  int meet(int a, int b) const { return meet_[id(a, b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  std::vector<int> nodes_below(int k) const;
  std::vector<int> maximal_subgroups() const;  // coatoms of the top
  // The sublattice {h : a <= h <= b}, rebuilt with its own indices.
  SubgroupLattice interval(int a, int b) const;
  // Hasse diagram edges (lower, upper), covering pairs only.
  std::vector<std::pair<int, int>> covering_pairs() const;

 private:
  SubgroupLattice() = default;
  static SubgroupLattice from_nodes(GroupPtr ambient,
                                    std::vector<Subgroup> nodes);
  size_t id(int a, int b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(nodes_.size()) +
           static_cast<size_t>(b);
  }

  GroupPtr ambient_;
  std::vector<Subgroup> nodes_;
  std::vector<char> leq_;
  std::vector<std::int32_t> join_;
  std::vector<std::int32_t> meet_;
  int bottom_ = 0;
  int top_ = 0;
};

// Failing instance of a lattice law.  `kind` identifies which quantified
// condition broke; node indices refer to the lattice passed in.
struct LatticeWitness {
  int kind = 0;  // 1,2: the two modular-element conditions; 3: modular law
  int x = -1;
  int y = -1;
  int z = -1;
};

// Modular element of the lattice: <X, M ^ Z> == <X, M> ^ Z for X <= Z, and
// <M, Y ^ Z> == <M, Y> ^ Z for M <= Z.
bool is_modular_element(const SubgroupLattice& lat, int m,
                        LatticeWitness* w = nullptr);
// Same, restricted to the interval below node k ("modular in K").
bool is_modular_element_in(const SubgroupLattice& lat, int m, int k,
                           LatticeWitness* w = nullptr);
// a <= b implies a v (x ^ b) == (a v x) ^ b for all nodes.
bool is_modular_lattice(const SubgroupLattice& lat,
                        LatticeWitness* w = nullptr);
bool is_modular_lattice_below(const SubgroupLattice& lat, int k,
                              LatticeWitness* w = nullptr);

// Chain from a to the top in which every step is a modular element of the
// intermediate subgroup's lattice (fixpoint marking, not chain search).
bool is_submodular(const SubgroupLattice& lat, int a);

// Memoised per-lattice relations used heavily by the sigma machinery:
// normality, cores and modularity of h inside every node k above it.
// Immutable after construction; safe to share read-only.
class LatticeAnalysis {
 public:
  explicit LatticeAnalysis(SubgroupLattice lat);

  const SubgroupLattice& lattice() const { return lat_; }
  bool normal_in(int h, int k) const { return normal_[id(h, k)] != 0; }
  int core_in(int h, int k) const { return core_[id(h, k)]; }
  bool modular_in(int h, int k) const { return modular_[id(h, k)] != 0; }

 private:
  size_t id(int h, int k) const {
    return static_cast<size_t>(h) * static_cast<size_t>(lat_.size()) +
           static_cast<size_t>(k);
  }
  SubgroupLattice lat_;
  std::vector<char> normal_;
  std::vector<std::int32_t> core_;
  std::vector<char> modular_;
};

// Plain subnormality below node k: chains of normal steps only.
std::vector<char> subnormal_in(const LatticeAnalysis& an, int k);

// GraphViz rendering of the Hasse diagram.  Nodes are labelled with their
// order plus flags: N (normal in the ambient group), M (modular element),
// and Q (sigma-quasinormal in the top) when a database is supplied.
std::string to_dot(const LatticeAnalysis& an, const SigmaQuasinormalDB* db);

}  // namespace sigmaforge
