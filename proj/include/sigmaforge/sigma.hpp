#ifndef SIGMAFORGE_SIGMA_HPP
#define SIGMAFORGE_SIGMA_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sigmaforge/lattice.hpp"
#include "sigmaforge/ops.hpp"

namespace sigmaforge {

// A partition of the primes into classes. Three shapes cover everything the
// tool needs:
//   Finest    every prime is its own class                ("finest")
//   Coarsest  all primes share one class                  ("coarsest")
//   Listed    finitely many explicit classes, optionally
//             followed by a default class holding the rest
//
// Class ids are stable: Finest uses the prime itself, Coarsest uses 0,
// Listed uses the class position with rest == classes().size().  A Listed
// partition without a default class only covers its listed primes; asking
// for the class of any other prime throws (total assignment on pi(G) is
// enforced at analysis time, not parse time).
class SigmaPartition {
 public:
  enum class Kind { Finest, Coarsest, Listed };

  static SigmaPartition finest();
  static SigmaPartition coarsest();
  // Each class must be a nonempty set of primes; classes must be disjoint.
  static SigmaPartition listed(std::vector<std::set<int>> classes,
                               bool with_rest = true);

  // Grammar:  finest | coarsest | pi:P1,P2,...  | onepi:P1,P2,...
  //           | classes:[P,...][P,...]...[rest]
  // pi:L      two classes {L} and {everything else}
  // onepi:L   each listed prime alone, everything else in one rest class
  // classes:  explicit classes; the literal suffix `rest` adds the default
  //           class, without it unlisted primes are unassigned
  static SigmaPartition parse(const std::string& text);

  Kind kind() const { return kind_; }
  const std::vector<std::set<int>>& classes() const { return classes_; }
  bool has_rest() const { return has_rest_; }

  // Class id of one prime; ConfigError when the partition does not cover p.
  int class_of(int p) const;
  // Distinct class ids of the primes dividing n; sigma(1) is empty.
  std::set<int> sigma_of(long long n) const;
  // Largest divisor of n supported on the class cls.
  long long class_part(long long n, int cls) const;
  // sigma(|H|) for a subgroup.
  std::set<int> sigma_of(const Subgroup& h) const;

  // Canonical spelling, reparses to an equal partition.
  std::string name() const;
  // Human-readable label for one class id, e.g. "{2,3}" or "{rest}".
  std::string class_name(int cls) const;

  bool operator==(const SigmaPartition& other) const;

 private:
  SigmaPartition() = default;
  Kind kind_ = Kind::Finest;
  std::vector<std::set<int>> classes_;  // Listed only
  bool has_rest_ = true;                // Listed only
  int rest_class() const { return static_cast<int>(classes_.size()); }
};

// |sigma(|H|)| <= 1. The trivial group is sigma-primary.
bool is_sigma_primary(const Subgroup& h, const SigmaPartition& sigma);
bool is_sigma_primary_order(long long n, const SigmaPartition& sigma);

// H is sigma-nilpotent iff for every class i touching |H| the sigma_i-core
// O_{sigma_i}(H) already has full sigma_i-part, i.e. H has a normal Hall
// sigma_i-subgroup for every i.
bool is_sigma_nilpotent(const Subgroup& h, const SigmaPartition& sigma);

Subgroup sigma_nilpotent_residual(const GroupPtr& g, const SigmaPartition& sigma);

// Node indices of the Hall sigma_i-subgroups of the lattice top for class
// cls (order == the sigma_i-part of |top|). May be empty.
std::vector<int> hall_subgroups(const SubgroupLattice& lat,
                                const SigmaPartition& sigma, int cls);

// All class ids meeting |top|, ascending.
std::vector<int> classes_meeting(const SubgroupLattice& lat,
                                 const SigmaPartition& sigma);

// Marks, for the sublattice under node k, which nodes are sigma-subnormal
// in node(k): reachable from k by steps H <| M or sigma-primary M/core_M(H).
std::vector<char> sigma_subnormal_in(const LatticeAnalysis& an,
                                     const SigmaPartition& sigma, int k);

// A permutes with every subgroup of B (A need not lie in B).
bool is_quasinormal_in(const LatticeAnalysis& an, int a, int b);

// Every element x of G with sigma(|x|) disjoint from sigma(|A|) normalizes A.
bool is_sigma_seminormal(const Subgroup& a, const SigmaPartition& sigma);

// Per-lattice tables of sigma-quasinormality: qn(h,k) holds when node h is
// sigma-subnormal in node k and modular in the interval lattice of k.
// subqn(h) marks the sigma-subquasinormal subgroups of the top: the smallest
// family containing the top and closed under "qn in a member".
class SigmaQuasinormalDB {
 public:
  SigmaQuasinormalDB(const LatticeAnalysis& an, const SigmaPartition& sigma);

  const LatticeAnalysis& analysis() const { return *an_; }
  const SigmaPartition& sigma() const { return sigma_; }

  bool sigma_subnormal(int h, int k) const;
  bool qn(int h, int k) const;
  bool subqn(int h) const { return subqn_[static_cast<size_t>(h)] != 0; }

  // QsigmaT: every sigma-subquasinormal subgroup is sigma-quasinormal in
  // the top. On failure, witnesses receives the offending node indices.
  bool qsigmat_holds(std::vector<int>* witnesses = nullptr) const;

 private:
  size_t id(int h, int k) const {
    return static_cast<size_t>(h) * static_cast<size_t>(size_) + static_cast<size_t>(k);
  }
  const LatticeAnalysis* an_;
  SigmaPartition sigma_;
  int size_;
  std::vector<char> ssn_;    // sigma-subnormal, comparable pairs
  std::vector<char> qn_;     // sigma-quasinormal, comparable pairs
  std::vector<char> subqn_;  // sigma-subquasinormal in top
};

}  // namespace sigmaforge

#endif
