#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sigmaforge/catalog.hpp"
#include "sigmaforge/errors.hpp"
#include "sigmaforge/lattice.hpp"
#include "sigmaforge/ops.hpp"
#include "sigmaforge/sigma.hpp"

using namespace sigmaforge;

namespace {

const std::string kFourSigmas[] = {"finest", "coarsest", "pi:2,3", "onepi:2,3"};

// Definitional sigma-subnormality: depth-first search for an ascending
// chain whose steps are normal or have sigma-primary M / core_M(H).
bool sigma_subnormal_oracle(const LatticeAnalysis& an, const SigmaPartition& s,
                            int h, int k, std::map<std::pair<int, int>, int>& memo) {
  if (h == k) return true;
  const SubgroupLattice& lat = an.lattice();
  auto it = memo.find({h, k});
  if (it != memo.end()) return it->second != 0;
  memo[{h, k}] = 0;
  for (int m = 0; m < lat.size(); ++m) {
    if (m == h || !lat.leq(h, m) || !lat.leq(m, k)) continue;
    bool step = an.normal_in(h, m) ||
                is_sigma_primary_order(
                    lat.node(m).order() / lat.node(an.core_in(h, m)).order(), s);
    if (step && sigma_subnormal_oracle(an, s, m, k, memo)) {
      memo[{h, k}] = 1;
      return true;
    }
  }
  return false;
}

// Definitional sigma-subquasinormality: descending chains of
// sigma-quasinormal steps starting at the whole group.
std::set<int> subqn_oracle(const SigmaQuasinormalDB& db) {
  const SubgroupLattice& lat = db.analysis().lattice();
  std::set<int> reach{lat.top()};
  std::vector<int> work{lat.top()};
  while (!work.empty()) {
    int k = work.back();
    work.pop_back();
    for (int h = 0; h < lat.size(); ++h)
      if (lat.leq(h, k) && db.qn(h, k) && reach.insert(h).second)
        work.push_back(h);
  }
  return reach;
}

}  // namespace

TEST_CASE("partition grammar round-trips through name") {
  for (const char* text :
       {"finest", "coarsest", "pi:2,3", "onepi:2,3", "pi:5", "onepi:7",
        "classes:[2,3][5]", "classes:[2,3][5]rest", "classes:[2][3][5]rest"}) {
    SigmaPartition s = SigmaPartition::parse(text);
    CAPTURE(text);
    CHECK(SigmaPartition::parse(s.name()) == s);
  }
  CHECK(SigmaPartition::parse("pi:2,3").name() == "pi:2,3");
  CHECK(SigmaPartition::parse("classes:[2,3]rest").name() == "pi:2,3");
  CHECK(SigmaPartition::parse("classes:[2][3]rest").name() == "onepi:2,3");
  CHECK(SigmaPartition::parse(" coarsest ") == SigmaPartition::coarsest());
}

TEST_CASE("partition grammar rejections") {
  CHECK_THROWS_AS(SigmaPartition::parse("classes:[2,3][2]rest"), ConfigError);
  CHECK_THROWS_AS(SigmaPartition::parse("pi:4"), ConfigError);
  CHECK_THROWS_AS(SigmaPartition::parse("pi:"), ConfigError);
  CHECK_THROWS_AS(SigmaPartition::parse("onepi:2,x"), ConfigError);
  CHECK_THROWS_AS(SigmaPartition::parse("classes:"), ConfigError);
  CHECK_THROWS_AS(SigmaPartition::parse("classes:[2)"), ConfigError);
  CHECK_THROWS_AS(SigmaPartition::parse("classes:[]rest"), ConfigError);
  CHECK_THROWS_AS(SigmaPartition::parse("classes:[2]tail"), ConfigError);
  CHECK_THROWS_AS(SigmaPartition::parse("mystery"), ConfigError);
}

TEST_CASE("class assignment and the uncovered-prime refusal") {
  SigmaPartition fine = SigmaPartition::finest();
  CHECK(fine.class_of(7) == 7);
  SigmaPartition coarse = SigmaPartition::coarsest();
  CHECK(coarse.class_of(7) == 0);
  CHECK(coarse.class_of(2) == coarse.class_of(97));

  SigmaPartition pi23 = SigmaPartition::parse("pi:2,3");
  CHECK(pi23.class_of(2) == pi23.class_of(3));
  CHECK(pi23.class_of(5) == pi23.class_of(7));
  CHECK(pi23.class_of(2) != pi23.class_of(5));

  SigmaPartition partial = SigmaPartition::parse("classes:[2,3][5]");
  CHECK(partial.class_of(5) == 1);
  CHECK_THROWS_AS(partial.class_of(7), ConfigError);  // no rest class
  CHECK(SigmaPartition::parse("classes:[2,3][5]rest").class_of(7) == 2);
}

TEST_CASE("sigma_of and class_part factor orders by class") {
  SigmaPartition s = SigmaPartition::parse("onepi:2,3");
  CHECK(s.sigma_of(1).empty());
  CHECK(s.sigma_of(12) == std::set<int>{0, 1});
  CHECK(s.sigma_of(35) == std::set<int>{2});  // 5 and 7 share the rest class
  CHECK(s.class_part(360, 0) == 8);
  CHECK(s.class_part(360, 1) == 9);
  CHECK(s.class_part(360, 2) == 5);
  CHECK(SigmaPartition::coarsest().class_part(360, 0) == 360);
  CHECK(SigmaPartition::finest().class_part(360, 5) == 5);
}

TEST_CASE("sigma-primary orders") {
  SigmaPartition fine = SigmaPartition::finest();
  CHECK(is_sigma_primary_order(1, fine));
  CHECK(is_sigma_primary_order(8, fine));
  CHECK(!is_sigma_primary_order(12, fine));
  CHECK(is_sigma_primary_order(12, SigmaPartition::parse("pi:2,3")));
  CHECK(is_sigma_primary_order(12, SigmaPartition::coarsest()));
  GroupPtr g = catalog_group("a4");
  CHECK(is_sigma_primary(full_subgroup(g), SigmaPartition::parse("pi:2,3")));
  CHECK(!is_sigma_primary(full_subgroup(g), fine));
  CHECK(is_sigma_primary(trivial_subgroup(g), fine));
}

TEST_CASE("sigma-nilpotency under finest equals nilpotency") {
  // Independent nilpotency route: a unique Sylow p-subgroup per prime.
  for (const std::string name : {"c12", "q8", "s3", "a4", "d12", "sl23", "c3xs3",
                           "q8xc3", "s4"}) {
    GroupPtr g = catalog_group(name);
    Subgroup full = full_subgroup(g);
    bool nilpotent = true;
    for (int p : prime_factors(g->order()))
      if (all_sylow_subgroups(full, p).size() != 1) nilpotent = false;
    CAPTURE(name);
    CHECK(is_sigma_nilpotent(full, SigmaPartition::finest()) == nilpotent);
    CHECK(is_sigma_nilpotent(full, SigmaPartition::coarsest()));
  }
  // A4 is {2,3}-primary, so sigma-nilpotent for pi:2,3 despite not being
  // nilpotent.
  CHECK(is_sigma_nilpotent(full_subgroup(catalog_group("a4")),
                           SigmaPartition::parse("pi:2,3")));
}

TEST_CASE("sigma-nilpotent residual is the least normal subgroup with sigma-nilpotent quotient") {
  for (const std::string name : {"s3", "s4", "sl23", "d12", "a4", "c12"}) {
    GroupPtr g = catalog_group(name);
    for (const std::string& stext : kFourSigmas) {
      SigmaPartition s = SigmaPartition::parse(stext);
      Subgroup d = sigma_nilpotent_residual(g, s);
      CAPTURE(name);
      CAPTURE(stext);
      CHECK(is_sigma_nilpotent(full_subgroup(quotient(g, d).group()), s));
      for (const Subgroup& n : normal_subgroups(full_subgroup(g)))
        if (is_sigma_nilpotent(full_subgroup(quotient(g, n).group()), s))
          CHECK(d.subset_of(n));
    }
  }
  // Frozen anchors.
  CHECK(sigma_nilpotent_residual(catalog_group("s3"), SigmaPartition::finest())
            .order() == 3);
  CHECK(sigma_nilpotent_residual(catalog_group("sl23"), SigmaPartition::finest())
            .order() == 8);
  CHECK(sigma_nilpotent_residual(catalog_group("s4"), SigmaPartition::finest())
            .order() == 12);
  CHECK(sigma_nilpotent_residual(catalog_group("a4"),
                                 SigmaPartition::parse("pi:2,3"))
            .is_trivial());
}

TEST_CASE("hall subgroups by class") {
  GroupPtr g = catalog_group("s4");
  SubgroupLattice lat = SubgroupLattice::build(g);
  SigmaPartition fine = SigmaPartition::finest();
  CHECK(hall_subgroups(lat, fine, 2).size() == 3);   // the Sylow D8s
  CHECK(hall_subgroups(lat, fine, 3).size() == 4);   // the Sylow C3s
  CHECK(classes_meeting(lat, fine) == std::vector<int>{2, 3});
  SigmaPartition pi23 = SigmaPartition::parse("pi:2,3");
  std::vector<int> whole = hall_subgroups(lat, pi23, pi23.class_of(2));
  REQUIRE(whole.size() == 1);
  CHECK(lat.node(whole[0]).is_full());
  CHECK(classes_meeting(lat, pi23) == std::vector<int>{0});

  // A5 has no Hall {2,3}-subgroup of order 12?  It does: A4.  But no Hall
  // {3,5}-subgroup of order 15 (no group of order 15 inside A5).
  GroupPtr a5 = catalog_group("a5");
  SubgroupLattice alat = SubgroupLattice::build(a5);
  SigmaPartition pi35 = SigmaPartition::parse("pi:3,5");
  CHECK(hall_subgroups(alat, pi35, pi35.class_of(3)).empty());
  SigmaPartition pi23b = SigmaPartition::parse("pi:2,3");
  CHECK(hall_subgroups(alat, pi23b, pi23b.class_of(2)).size() == 5);
}

TEST_CASE("sigma-subnormality matches the chain search") {
  for (const std::string name : {"s3", "d12", "sl23", "s4"}) {
    GroupPtr g = catalog_group(name);
    LatticeAnalysis an{SubgroupLattice::build(g)};
    const SubgroupLattice& lat = an.lattice();
    for (const std::string& stext : kFourSigmas) {
      SigmaPartition s = SigmaPartition::parse(stext);
      std::map<std::pair<int, int>, int> memo;
      for (int k = 0; k < lat.size(); ++k) {
        std::vector<char> ssn = sigma_subnormal_in(an, s, k);
        for (int h = 0; h < lat.size(); ++h) {
          if (!lat.leq(h, k)) continue;
          CAPTURE(name);
          CAPTURE(stext);
          CHECK(static_cast<bool>(ssn[static_cast<size_t>(h)]) ==
                sigma_subnormal_oracle(an, s, h, k, memo));
        }
      }
    }
  }
}

TEST_CASE("with the coarsest partition everything is sigma-subnormal") {
  GroupPtr g = catalog_group("s4");
  LatticeAnalysis an{SubgroupLattice::build(g)};
  const SubgroupLattice& lat = an.lattice();
  std::vector<char> ssn = sigma_subnormal_in(an, SigmaPartition::coarsest(), lat.top());
  for (int h = 0; h < lat.size(); ++h) CHECK(ssn[static_cast<size_t>(h)] != 0);
}

TEST_CASE("quasinormality by direct permutes check") {
  GroupPtr g = catalog_group("s4");
  LatticeAnalysis an{SubgroupLattice::build(g)};
  const SubgroupLattice& lat = an.lattice();
  int t = lat.index_of(generate_subgroup(g, {Perm::parse_cycles("(0 1)", 4)}));
  int a4 = lat.index_of(derived_subgroup(full_subgroup(g)));
  REQUIRE(t >= 0);
  REQUIRE(a4 >= 0);
  REQUIRE(lat.node(a4).order() == 12);
  CHECK(!is_quasinormal_in(an, t, lat.top()));
  CHECK(is_quasinormal_in(an, a4, lat.top()));
  // Q8: every subgroup is quasinormal (all are normal).
  GroupPtr q = catalog_group("q8");
  LatticeAnalysis qan{SubgroupLattice::build(q)};
  for (int h = 0; h < qan.lattice().size(); ++h)
    CHECK(is_quasinormal_in(qan, h, qan.lattice().top()));
}

TEST_CASE("sigma-seminormality") {
  GroupPtr g = catalog_group("s3");
  SigmaPartition fine = SigmaPartition::finest();
  Subgroup a3 = o_pi(full_subgroup(g), {3});
  CHECK(is_sigma_seminormal(a3, fine));  // 2-elements normalize A3
  Subgroup c2 = generate_subgroup(g, {Perm::parse_cycles("(0 1)", 3)});
  CHECK(!is_sigma_seminormal(c2, fine));  // (0 1 2) moves <(0 1)>
  CHECK(is_sigma_seminormal(c2, SigmaPartition::coarsest()));  // vacuous
}

TEST_CASE("db internal consistency and subqn closure") {
  for (const std::string name : {"s3", "sl23", "s4", "d12"}) {
    GroupPtr g = catalog_group(name);
    LatticeAnalysis an{SubgroupLattice::build(g)};
    const SubgroupLattice& lat = an.lattice();
    for (const std::string& stext : kFourSigmas) {
      SigmaPartition s = SigmaPartition::parse(stext);
      SigmaQuasinormalDB db(an, s);
      std::vector<char> ssn_top = sigma_subnormal_in(an, s, lat.top());
      std::set<int> subqn = subqn_oracle(db);
      CAPTURE(name);
      CAPTURE(stext);
      for (int h = 0; h < lat.size(); ++h) {
        CHECK(db.sigma_subnormal(h, lat.top()) ==
              static_cast<bool>(ssn_top[static_cast<size_t>(h)]));
        CHECK(db.qn(h, lat.top()) ==
              (db.sigma_subnormal(h, lat.top()) && an.modular_in(h, lat.top())));
        CHECK(db.subqn(h) == (subqn.count(h) == 1));
      }
    }
  }
}

TEST_CASE("db rejects queries outside the order relation") {
  GroupPtr g = catalog_group("s3");
  LatticeAnalysis an{SubgroupLattice::build(g)};
  SigmaQuasinormalDB db(an, SigmaPartition::finest());
  const SubgroupLattice& lat = an.lattice();
  int c2 = -1, a3 = -1;
  for (int i = 0; i < lat.size(); ++i) {
    if (lat.node(i).order() == 2 && c2 < 0) c2 = i;
    if (lat.node(i).order() == 3) a3 = i;
  }
  CHECK_THROWS_AS(db.qn(a3, c2), DomainError);
  CHECK_THROWS_AS(db.sigma_subnormal(a3, c2), DomainError);
}

TEST_CASE("qsigmat verdicts on anchor groups") {
  std::map<std::string, std::map<std::string, bool>> frozen{
      {"s3", {{"finest", true}, {"coarsest", true}}},
      {"q8", {{"finest", true}, {"coarsest", true}}},
      {"sl23", {{"finest", false}, {"coarsest", false}}},
      {"s4", {{"finest", false}, {"coarsest", false}}},
      {"c12", {{"finest", true}, {"coarsest", true}}},
  };
  for (const auto& [name, bysigma] : frozen) {
    GroupPtr g = catalog_group(name);
    LatticeAnalysis an{SubgroupLattice::build(g)};
    for (const auto& [stext, want] : bysigma) {
      SigmaQuasinormalDB db(an, SigmaPartition::parse(stext));
      std::vector<int> bad;
      CAPTURE(name);
      CAPTURE(stext);
      CHECK(db.qsigmat_holds(&bad) == want);
      CHECK(bad.empty() == want);
      for (int h : bad) {
        CHECK(db.subqn(h));
        CHECK(!db.qn(h, an.lattice().top()));
      }
    }
  }
}
