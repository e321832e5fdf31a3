#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sigmaforge/catalog.hpp"
#include "sigmaforge/errors.hpp"
#include "sigmaforge/lattice.hpp"
#include "sigmaforge/ops.hpp"

using namespace sigmaforge;

namespace {

// Index closure using only PermGroup::mul; deliberately avoids every helper
// the lattice build relies on.
std::vector<std::int32_t> close_oracle(const GroupPtr& g,
                                       std::vector<std::int32_t> seed) {
  std::set<std::int32_t> have(seed.begin(), seed.end());
  have.insert(0);
  std::vector<std::int32_t> frontier(have.begin(), have.end());
  while (!frontier.empty()) {
    std::vector<std::int32_t> next;
    for (std::int32_t a : frontier)
      for (std::int32_t b : std::vector<std::int32_t>(have.begin(), have.end())) {
        std::int32_t ab = g->mul(a, b);
        if (have.insert(ab).second) next.push_back(ab);
        std::int32_t ba = g->mul(b, a);
        if (have.insert(ba).second) next.push_back(ba);
      }
    frontier = std::move(next);
  }
  return std::vector<std::int32_t>(have.begin(), have.end());
}

// Every subgroup, by closing every generator subset of size <= 4.  Complete
// for |G| <= 24: C2^4 needs four generators, nothing that small needs five.
std::set<std::vector<std::int32_t>> subgroups_by_subsets(const GroupPtr& g) {
  std::set<std::vector<std::int32_t>> out;
  int n = static_cast<int>(g->order());
  out.insert(close_oracle(g, {}));
  for (int a = 1; a < n; ++a) {
    out.insert(close_oracle(g, {a}));
    for (int b = a + 1; b < n; ++b) {
      out.insert(close_oracle(g, {a, b}));
      for (int c = b + 1; c < n; ++c) {
        out.insert(close_oracle(g, {a, b, c}));
        for (int d = c + 1; d < n; ++d) out.insert(close_oracle(g, {a, b, c, d}));
      }
    }
  }
  return out;
}

// Every subgroup, by growing known subgroups one element at a time.  Any
// subgroup is reachable through its chain of partial generating sets, so
// this is complete for every finite group.
std::set<std::vector<std::int32_t>> subgroups_by_extension(const GroupPtr& g) {
  std::set<std::vector<std::int32_t>> out;
  std::vector<std::vector<std::int32_t>> work{close_oracle(g, {})};
  out.insert(work[0]);
  while (!work.empty()) {
    std::vector<std::int32_t> cur = std::move(work.back());
    work.pop_back();
    std::set<std::int32_t> in(cur.begin(), cur.end());
    for (std::int32_t e = 1; e < g->order(); ++e) {
      if (in.count(e)) continue;
      std::vector<std::int32_t> seed = cur;
      seed.push_back(e);
      std::vector<std::int32_t> bigger = close_oracle(g, std::move(seed));
      if (out.insert(bigger).second) work.push_back(std::move(bigger));
    }
  }
  return out;
}

std::set<std::vector<std::int32_t>> lattice_node_sets(const SubgroupLattice& lat) {
  std::set<std::vector<std::int32_t>> out;
  for (int i = 0; i < lat.size(); ++i) out.insert(lat.node(i).indices());
  return out;
}

// A lattice is modular iff it has no pentagon: a < b sharing meet and join
// with a common z.  Searches raw triples, ignoring the modular-law route
// the implementation quantifies over.
bool has_pentagon(const SubgroupLattice& lat) {
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b) {
      if (a == b || !lat.leq(a, b)) continue;
      for (int z = 0; z < lat.size(); ++z)
        if (lat.join(a, z) == lat.join(b, z) && lat.meet(a, z) == lat.meet(b, z))
          return true;
    }
  return false;
}

// Independent subnormality route: the normal-closure series K >= H^K >= ...
// stabilises, and H is subnormal in K iff it stabilises at H.
bool subnormal_oracle(const Subgroup& h, Subgroup k) {
  while (true) {
    if (h == k) return true;
    Subgroup next = normal_closure(h, k);
    if (next == k) return false;
    k = next;
  }
}

// Chain-search route for is_submodular, memoised DFS instead of the
// implementation's top-down fixpoint.
bool submodular_oracle(const SubgroupLattice& lat, int a, std::map<int, int>& memo) {
  if (a == lat.top()) return true;
  auto it = memo.find(a);
  if (it != memo.end()) return it->second != 0;
  memo[a] = 0;  // cycle guard; chains are strictly ascending anyway
  for (int b = 0; b < lat.size(); ++b) {
    if (b == a || !lat.leq(a, b)) continue;
    if (is_modular_element_in(lat, a, b) && submodular_oracle(lat, b, memo)) {
      memo[a] = 1;
      return true;
    }
  }
  return false;
}

const std::string kSmallCorpus[] = {
    "c1",  "c6", "c12", "v4",  "c2xc4", "c2xc2xc2", "s3",          "d8",
    "q8",  "d12", "a4",  "c3xs3", "sl23", "s4",     "c2xc2xc2xc2"};

}  // namespace

TEST_CASE("lattice nodes equal the subset-closure enumeration") {
  // Frozen counts, each verified here against two independent enumerations.
  std::map<std::string, int> expected{
      {"c1", 1},   {"c6", 4},  {"c12", 6},  {"v4", 5},    {"c2xc4", 8},
      {"c2xc2xc2", 16},        {"s3", 6},   {"d8", 10},   {"q8", 6},
      {"d12", 16}, {"a4", 10}, {"c3xs3", 14}, {"sl23", 15}, {"s4", 30},
      {"c2xc2xc2xc2", 67}};
  for (const std::string& name : kSmallCorpus) {
    GroupPtr g = catalog_group(name);
    SubgroupLattice lat = SubgroupLattice::build(g);
    auto oracle = subgroups_by_subsets(g);
    CAPTURE(name);
    CHECK(lattice_node_sets(lat) == oracle);
    CHECK(subgroups_by_extension(g) == oracle);
    CHECK(lat.size() == expected.at(name));
  }
}

TEST_CASE("larger lattices match the extension enumeration") {
  for (const std::string name : {"a5", "sl25"}) {
    GroupPtr g = catalog_group(name);
    SubgroupLattice lat = SubgroupLattice::build(g);
    CAPTURE(name);
    CHECK(lattice_node_sets(lat) == subgroups_by_extension(g));
  }
  CHECK(SubgroupLattice::build(catalog_group("a5")).size() == 59);
  CHECK(SubgroupLattice::build(catalog_group("sl25")).size() == 76);
}

TEST_CASE("leq join meet are the order-theoretic operations") {
  for (const std::string name : {"d12", "s4"}) {
    SubgroupLattice lat = SubgroupLattice::build(catalog_group(name));
    CAPTURE(name);
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b) {
        CHECK(lat.leq(a, b) == lat.node(a).subset_of(lat.node(b)));
        int j = lat.join(a, b);
        CHECK(lat.leq(a, j));
        CHECK(lat.leq(b, j));
        int m = lat.meet(a, b);
        CHECK(lat.leq(m, a));
        CHECK(lat.leq(m, b));
        for (int c = 0; c < lat.size(); ++c) {
          if (lat.leq(a, c) && lat.leq(b, c)) CHECK(lat.leq(j, c));
          if (lat.leq(c, a) && lat.leq(c, b)) CHECK(lat.leq(c, m));
        }
        CHECK(lat.join(a, b) == lat.join(b, a));
        CHECK(lat.meet(a, b) == lat.meet(b, a));
      }
    CHECK(lat.node(lat.bottom()).is_trivial());
    CHECK(lat.node(lat.top()).is_full());
  }
}

TEST_CASE("node order is deterministic and index_of inverts node") {
  SubgroupLattice lat = SubgroupLattice::build(catalog_group("s4"));
  for (int i = 0; i + 1 < lat.size(); ++i)
    CHECK(lat.node(i).order() <= lat.node(i + 1).order());
  for (int i = 0; i < lat.size(); ++i) CHECK(lat.index_of(lat.node(i)) == i);
}

TEST_CASE("maximal subgroups of S4") {
  SubgroupLattice lat = SubgroupLattice::build(catalog_group("s4"));
  std::vector<int> maxes = lat.maximal_subgroups();
  CHECK(maxes.size() == 8);  // A4, three D8, four S3
  std::multiset<long> orders;
  for (int m : maxes) orders.insert(lat.node(m).order());
  CHECK(orders == std::multiset<long>{6, 6, 6, 6, 8, 8, 8, 12});
}

TEST_CASE("covering pairs are exactly the gap-free comparable pairs") {
  SubgroupLattice lat = SubgroupLattice::build(catalog_group("d12"));
  auto covers = lat.covering_pairs();
  std::set<std::pair<int, int>> got(covers.begin(), covers.end());
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b) {
      if (a == b || !lat.leq(a, b)) continue;
      bool gap_free = true;
      for (int c = 0; c < lat.size(); ++c)
        if (c != a && c != b && lat.leq(a, c) && lat.leq(c, b)) gap_free = false;
      CHECK(got.count({a, b}) == (gap_free ? 1u : 0u));
    }
}

TEST_CASE("interval rebuilds the sublattice") {
  GroupPtr g = catalog_group("s4");
  SubgroupLattice lat = SubgroupLattice::build(g);
  int v4 = lat.index_of(o_pi(full_subgroup(g), {2}));
  REQUIRE(v4 >= 0);
  SubgroupLattice iv = lat.interval(v4, lat.top());
  CHECK(iv.size() == 6);  // V4, three D8, A4, S4
  CHECK(iv.node(iv.bottom()).order() == 4);
  CHECK(iv.node(iv.top()).order() == 24);
}

TEST_CASE("modular lattice agrees with the pentagon search") {
  for (const std::string& name : kSmallCorpus) {
    SubgroupLattice lat = SubgroupLattice::build(catalog_group(name));
    CAPTURE(name);
    CHECK(is_modular_lattice(lat) == !has_pentagon(lat));
  }
  // Frozen anchors: abelian and Hamiltonian lattices are modular, the
  // dihedral and symmetric ones are not.
  CHECK(is_modular_lattice(SubgroupLattice::build(catalog_group("q8"))));
  CHECK(is_modular_lattice(SubgroupLattice::build(catalog_group("s3"))));
  CHECK(is_modular_lattice(SubgroupLattice::build(catalog_group("c12"))));
  CHECK(!is_modular_lattice(SubgroupLattice::build(catalog_group("d8"))));
  CHECK(!is_modular_lattice(SubgroupLattice::build(catalog_group("s4"))));
  CHECK(!is_modular_lattice(SubgroupLattice::build(catalog_group("a4"))));
}

TEST_CASE("modular-law witnesses are honest") {
  SubgroupLattice lat = SubgroupLattice::build(catalog_group("s4"));
  LatticeWitness w;
  REQUIRE(!is_modular_lattice(lat, &w));
  CHECK(w.kind == 3);
  REQUIRE(lat.leq(w.x, w.z));  // a <= b, middle element in y
  CHECK(lat.join(w.x, lat.meet(w.y, w.z)) != lat.meet(lat.join(w.x, w.y), w.z));
}

TEST_CASE("modular elements and their witnesses") {
  GroupPtr g = catalog_group("s4");
  SubgroupLattice lat = SubgroupLattice::build(g);
  LatticeAnalysis an{SubgroupLattice::build(g)};
  for (int m = 0; m < lat.size(); ++m) {
    // Normal subgroups are always modular elements.
    if (an.normal_in(m, lat.top())) CHECK(is_modular_element(lat, m));
    LatticeWitness w;
    if (!is_modular_element(lat, m, &w)) {
      if (w.kind == 1) {
        REQUIRE(lat.leq(w.x, w.z));
        CHECK(lat.join(w.x, lat.meet(m, w.z)) != lat.meet(lat.join(w.x, m), w.z));
      } else {
        REQUIRE(w.kind == 2);
        REQUIRE(lat.leq(m, w.z));
        CHECK(lat.join(m, lat.meet(w.y, w.z)) != lat.meet(lat.join(m, w.y), w.z));
      }
    }
  }
  // A point subgroup generated by a transposition is not modular in S4.
  int t = lat.index_of(generate_subgroup(g, {Perm::parse_cycles("(0 1)", 4)}));
  REQUIRE(t >= 0);
  CHECK(!is_modular_element(lat, t));
}

TEST_CASE("modular element below k matches the full check on the interval") {
  GroupPtr g = catalog_group("s4");
  SubgroupLattice lat = SubgroupLattice::build(g);
  for (int k = 0; k < lat.size(); ++k) {
    if (lat.node(k).order() != 8) continue;  // the Sylow D8s
    for (int m = 0; m < lat.size(); ++m) {
      if (!lat.leq(m, k)) continue;
      SubgroupLattice below = SubgroupLattice::build_below(lat.node(k));
      int mm = below.index_of(lat.node(m));
      REQUIRE(mm >= 0);
      CHECK(is_modular_element_in(lat, m, k) == is_modular_element(below, mm));
    }
  }
  CHECK_THROWS_AS(is_modular_element_in(lat, lat.top(), lat.bottom()), DomainError);
}

TEST_CASE("analysis normality and cores match first principles") {
  GroupPtr g = catalog_group("sl23");
  SubgroupLattice lat = SubgroupLattice::build(g);
  LatticeAnalysis an{SubgroupLattice::build(g)};
  for (int h = 0; h < lat.size(); ++h)
    for (int k = 0; k < lat.size(); ++k) {
      if (!lat.leq(h, k)) continue;
      const Subgroup& hs = lat.node(h);
      const Subgroup& ks = lat.node(k);
      bool normal = true;
      for (std::int32_t x : ks.indices())
        for (std::int32_t e : hs.indices())
          if (!hs.contains(g->conj(e, x))) normal = false;
      CHECK(an.normal_in(h, k) == normal);

      // Core = intersection of the k-conjugates of h, computed directly.
      std::set<std::int32_t> core(hs.indices().begin(), hs.indices().end());
      for (std::int32_t x : ks.indices()) {
        std::set<std::int32_t> conj;
        for (std::int32_t e : hs.indices()) conj.insert(g->conj(e, x));
        std::set<std::int32_t> both;
        for (std::int32_t e : core)
          if (conj.count(e)) both.insert(e);
        core = std::move(both);
      }
      CHECK(lat.node(an.core_in(h, k)).indices() ==
            std::vector<std::int32_t>(core.begin(), core.end()));
      CHECK(an.modular_in(h, k) == is_modular_element_in(lat, h, k));
    }
}

TEST_CASE("plain subnormality agrees with the normal-closure series") {
  for (const std::string name : {"s4", "a4", "d12", "sl23"}) {
    GroupPtr g = catalog_group(name);
    LatticeAnalysis an{SubgroupLattice::build(g)};
    const SubgroupLattice& lat = an.lattice();
    CAPTURE(name);
    for (int k = 0; k < lat.size(); ++k) {
      std::vector<char> sn = subnormal_in(an, k);
      for (int h = 0; h < lat.size(); ++h) {
        if (!lat.leq(h, k)) continue;
        CHECK(static_cast<bool>(sn[static_cast<size_t>(h)]) ==
              subnormal_oracle(lat.node(h), lat.node(k)));
      }
    }
  }
}

TEST_CASE("submodularity agrees with explicit chain search") {
  for (const std::string name : {"s4", "sl23", "d12"}) {
    SubgroupLattice lat = SubgroupLattice::build(catalog_group(name));
    CAPTURE(name);
    std::map<int, int> memo;
    for (int a = 0; a < lat.size(); ++a)
      CHECK(is_submodular(lat, a) == submodular_oracle(lat, a, memo));
  }
}

TEST_CASE("build_below restricts to the given top") {
  GroupPtr g = catalog_group("s4");
  Subgroup a4 = derived_subgroup(full_subgroup(g));
  REQUIRE(a4.order() == 12);
  SubgroupLattice lat = SubgroupLattice::build_below(a4);
  CHECK(lat.size() == 10);
  for (int i = 0; i < lat.size(); ++i) CHECK(lat.node(i).subset_of(a4));
}

TEST_CASE("dot export lists every node and every covering edge") {
  GroupPtr g = catalog_group("d8");
  LatticeAnalysis an{SubgroupLattice::build(g)};
  std::string dot = to_dot(an, nullptr);
  CHECK(dot.find("digraph") != std::string::npos);
  size_t edges = 0;
  for (size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2))
    ++edges;
  CHECK(edges == an.lattice().covering_pairs().size());
}
