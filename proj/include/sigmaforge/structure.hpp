#ifndef SIGMAFORGE_STRUCTURE_HPP
#define SIGMAFORGE_STRUCTURE_HPP

#include <optional>

#include "sigmaforge/lattice.hpp"
#include "sigmaforge/ops.hpp"
#include "sigmaforge/report.hpp"
#include "sigmaforge/sigma.hpp"

namespace sigmaforge {

// Non-abelian P-group of type (p, q): G = A x| <t> with A elementary
// abelian p-group and t of prime order q != p inducing a non-trivial power
// automorphism on A.
struct PGroupShape {
  int p = 0;
  int q = 0;
  Subgroup a;            // the base, O_p(G)
  std::int32_t t = -1;   // one complement generator
  Subgroup t_gen;        // <t>
};
std::optional<PGroupShape> detect_p_group(const GroupPtr& g);

// P*-group: G = A x| <t> with A elementary abelian p-group, |t| = r^n for a
// prime r, and t inducing a power automorphism of prime order (= r) on A.
// A successful detection asserts the classical consequences: Z(G) = <t^r> =
// Phi(G), G/Z(G) a non-abelian P-group, and L(G) modular.
struct PStarShape {
  int p = 0;
  int r = 0;
  int n = 0;             // |t| = r^n
  Subgroup a;
  std::int32_t t = -1;
  Subgroup t_gen;
};
std::optional<PStarShape> detect_p_star_group(const GroupPtr& g);

// (D, Z(D); U_1, ..., U_k): D the nontrivial perfect soluble residual,
// Z = Z(D) = Phi(D), the U_i/Z simple non-abelian chief factors whose direct
// product is D/Z, and every chief factor below Z of prime order.
struct RobinsonComplex {
  Subgroup d;
  Subgroup z;
  std::vector<Subgroup> factors;
};
struct RobinsonResult {
  std::optional<RobinsonComplex> complex;
  PropertyReport report;
};
RobinsonResult find_robinson_complex(const GroupPtr& g);

// N_p: for every soluble normal N, p'-elements of G/N induce power
// automorphisms on O_p(G/N).
PropertyReport satisfies_Np(const GroupPtr& g, int p);
// P_p: for every soluble normal N, every subgroup of O_p(G/N) is
// quasinormal in every Sylow p-subgroup of G/N.
PropertyReport satisfies_Pp(const GroupPtr& g, int p);
// Q_sigma(p,q): for every soluble normal N, every subgroup of a normal
// sigma-primary P-subgroup of type (p, q) of G/N is modular in G/N.
PropertyReport satisfies_Q_sigma_pq(const GroupPtr& g,
                                    const SigmaPartition& sigma, int p, int q);
// M_(p,q) is the coarsest-partition case of Q_sigma(p,q).
PropertyReport satisfies_M_pq(const GroupPtr& g, int p, int q);
// Q_sigmaP: Q_sigma(p,q) over every admissible pair on pi(G); a type-(p,q)
// P-group exists iff q divides p - 1, and pairs off pi(G) hold vacuously.
PropertyReport satisfies_Q_sigmaP(const GroupPtr& g,
                                  const SigmaPartition& sigma);

// Definitional oracle: every sigma-subquasinormal subgroup of G is
// sigma-quasinormal in G.  Coarsest partition = the MT-group test, finest =
// the PT-group test.
PropertyReport is_QsigmaT_bruteforce(const SigmaQuasinormalDB& db);

// Soluble characterization: D = sigma-nilpotent residual; (i) G = D x| M
// with D an abelian Hall subgroup of odd order and M a sigma-nilpotent
// M-group, (ii) every element induces a power automorphism on D, (iii) each
// O_sigma_i(D) has a normal complement in a Hall sigma_i-subgroup of G.
// Carries a brute-force agreement sub-report (disagreement = Inconsistent).
PropertyReport check_theorem_C(const SigmaQuasinormalDB& db);

// General characterization: D = soluble residual; (i) G/D soluble with the
// transitivity property (via check_theorem_C), (ii) Robinson complex when
// D != 1, (iii) N_p / P_p / Q_sigma(p,q) on G and the U'-quotients.
PropertyReport check_theorem_E(const SigmaQuasinormalDB& db);

// Coarsest-partition case; on soluble input additionally cross-checked
// against lattice modularity.  db must be built with the coarsest partition.
PropertyReport check_theorem_F(const SigmaQuasinormalDB& db);

// Asserts conclusions (i)-(v) for every sigma-quasinormal node: permutes
// with all Hall sigma_i-subgroups; A^G/A_G and G/C_G(A^G/A_G)
// sigma-nilpotent; chief factors between A_G and A^G sigma-central;
// sigma(G/C) inside sigma(A^G/A_G); A sigma-seminormal.
PropertyReport verify_theorem_B(const SigmaQuasinormalDB& db);

// For every maximal (among proper) sigma-quasinormal subgroup A: either
// A normal with G/A simple, or A_G < A and G/A_G sigma-primary non-abelian
// of order pq.
PropertyReport check_maximal_dichotomy(const SigmaQuasinormalDB& db);

}  // namespace sigmaforge

#endif
