#include <algorithm>
#include <set>

#include <doctest.h>

#include "frattini/corpus.hpp"
#include "frattini/perm_group.hpp"
#include "oracles.hpp"

using namespace frattini;

namespace {

PermGroup s3() {
  return PermGroup(3, {Permutation::parse_cycles(3, "(1 2)"),
                       Permutation::parse_cycles(3, "(1 2 3)")});
}

}  // namespace

TEST_CASE("construction and order") {
  CHECK(s3().order() == 6);
  CHECK(PermGroup(5, {}).order() == 1);
  CHECK(PermGroup::trivial(5).is_trivial());

  // Degree mismatch among generators is rejected.
  CHECK_THROWS_AS(PermGroup(4, {Permutation::parse_cycles(3, "(1 2)")}), GroupError);

  // PGammaL(2,9): the chain order must agree with exhaustive closure.
  PermGroup big = aut_a6();
  CHECK(big.order() == 1440);
  CHECK(oracle::closure(big.degree(), big.generators()).size() == 1440);
}

TEST_CASE("membership by sifting") {
  PermGroup c3(3, {Permutation::parse_cycles(3, "(1 2 3)")});
  CHECK(c3.contains(Permutation::parse_cycles(3, "(1 3 2)")));
  CHECK(!c3.contains(Permutation::parse_cycles(3, "(1 2)")));

  PermGroup a5 = alternating(5);
  CHECK(a5.contains(Permutation::parse_cycles(5, "(1 2)(3 4)")));

  CHECK_THROWS_AS(c3.contains(Permutation(4)), GroupError);
}

TEST_CASE("membership agrees with exhaustive enumeration") {
  // Chain membership versus the closure oracle, for every permutation of the
  // ambient symmetric group.
  for (const PermGroup& g : {s3(), dihedral(4), alternating(4)}) {
    std::set<Permutation> closed;
    for (auto& e : oracle::closure(g.degree(), g.generators())) closed.insert(e);
    std::vector<int> img(g.degree());
    for (int i = 0; i < g.degree(); ++i) img[i] = i;
    do {
      Permutation p = Permutation::from_images(img);
      CHECK(g.contains(p) == (closed.count(p) > 0));
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("element enumeration") {
  CHECK(elements(PermGroup::trivial(3)).size() == 1);
  CHECK(elements(PermGroup::trivial(3))[0].is_identity());

  PermGroup klein(4, {Permutation::parse_cycles(4, "(1 2)(3 4)"),
                      Permutation::parse_cycles(4, "(1 3)(2 4)")});
  CHECK(elements(klein).size() == 4);

  PermGroup big = aut_a6();
  std::vector<Permutation> all = elements(big);
  CHECK(all.size() == 1440);
  CHECK(std::set<Permutation>(all.begin(), all.end()).size() == 1440);
  CHECK(all[0].is_identity());

  Caps tight;
  tight.enumeration_cap = 100;
  CHECK_THROWS_AS(elements(big, tight), CapExceededError);
}

TEST_CASE("normal closure") {
  PermGroup g = s3();
  PermGroup already_normal = normal_closure(g, {Permutation::parse_cycles(3, "(1 2 3)")});
  CHECK(already_normal.order() == 3);

  PermGroup whole = normal_closure(g, {Permutation::parse_cycles(3, "(1 2)")});
  CHECK(whole.order() == 6);
  CHECK(oracle::normal_closure(3, g.generators(), {Permutation::parse_cycles(3, "(1 2)")}).size() ==
        6);

  CHECK(normal_closure(g, {}).is_trivial());
  CHECK_THROWS_AS(normal_closure(PermGroup(3, {Permutation::parse_cycles(3, "(1 2 3)")}),
                                 {Permutation::parse_cycles(3, "(1 2)")}),
                  GroupError);
}

TEST_CASE("normal closure is normal and contains its seed") {
  for (const PermGroup& g : {symmetric(4), frobenius20(), dihedral(6)}) {
    for (const auto& seed : elements(g)) {
      if (seed.is_identity()) continue;
      PermGroup n = normal_closure(g, {seed});
      CHECK(n.contains(seed));
      CHECK(is_normal(g, n));
    }
  }
}

TEST_CASE("is_normal") {
  PermGroup g = s3();
  CHECK(is_normal(g, PermGroup(3, {Permutation::parse_cycles(3, "(1 2 3)")})));
  CHECK(!is_normal(g, PermGroup(3, {Permutation::parse_cycles(3, "(1 2)")})));
  CHECK_THROWS_AS(is_normal(PermGroup(3, {Permutation::parse_cycles(3, "(1 2 3)")}),
                            PermGroup(3, {Permutation::parse_cycles(3, "(1 2)")})),
                  GroupError);

  PermGroup f20 = frobenius20();
  PermGroup c5(5, {Permutation::parse_cycles(5, "(1 2 3 4 5)")});
  CHECK(is_normal(f20, c5));
  CHECK(oracle::normal_closure(5, f20.generators(), c5.generators()).size() == 5);
}

TEST_CASE("center, derived subgroup, centralizer") {
  CHECK(center(s3()).is_trivial());
  CHECK(derived_subgroup(s3()).order() == 3);

  PermGroup d8 = dihedral(4);
  PermGroup z = center(d8);
  CHECK(z.order() == 2);
  // Oracle: brute element filtering over the closure.
  int commuting = 0;
  for (const auto& e : oracle::closure(4, d8.generators())) {
    bool central = true;
    for (const auto& x : d8.generators())
      if (!(e * x == x * e)) central = false;
    if (central) ++commuting;
  }
  CHECK(commuting == 2);

  // Centralizer elements commute with every generator of the argument.
  PermGroup s4 = symmetric(4);
  PermGroup v(4, {Permutation::parse_cycles(4, "(1 2)(3 4)")});
  PermGroup c = centralizer(s4, v);
  CHECK(c.order() == 8);
  for (const auto& e : elements(c))
    for (const auto& x : v.generators()) CHECK(e * x == x * e);
}

TEST_CASE("commutator subgroup") {
  PermGroup s4 = symmetric(4);
  PermGroup a4 = alternating(4);
  CHECK(commutator_subgroup(s4, s4).order() == 12);
  CHECK(commutator_subgroup(a4, a4).order() == 4);
}

TEST_CASE("direct product") {
  CHECK(direct_product(cyclic(2), cyclic(3)).order() == 6);
  CHECK(direct_product(alternating(5), cyclic(6)).order() == 360);

  PermGroup p = direct_product(symmetric(3), symmetric(3));
  CHECK(p.order() == 36);
  CHECK(center(p).is_trivial());
}

TEST_CASE("intersection and join") {
  PermGroup s4 = symmetric(4);
  PermGroup a4 = alternating(4);
  PermGroup d8 = PermGroup(4, {Permutation::parse_cycles(4, "(1 2 3 4)"),
                               Permutation::parse_cycles(4, "(1 3)")});
  PermGroup meet = intersection(a4, d8);
  CHECK(meet.order() == 4);  // the Klein four-group inside D8
  CHECK(subgroup_join(a4, d8).order() == 24);
  CHECK(is_subgroup(s4, meet));
}

TEST_CASE("orbits and restriction") {
  PermGroup p = direct_product(symmetric(3), cyclic(2));
  auto orbs = orbits(p);
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0] == std::vector<int>{0, 1, 2});
  CHECK(orbs[1] == std::vector<int>{3, 4});
  CHECK(restrict_group(p, orbs[0]).order() == 6);
  CHECK(restrict_group(p, orbs[1]).order() == 2);
}

TEST_CASE("conjugacy class representatives") {
  auto reps = conjugacy_class_representatives(symmetric(4));
  CHECK(reps.size() == 5);  // one per cycle type
  auto reps_a6 = conjugacy_class_representatives(alternating(6));
  CHECK(reps_a6.size() == 7);
}
