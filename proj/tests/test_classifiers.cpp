#include <doctest.h>

#include "frattini/classifiers.hpp"
#include "frattini/corpus.hpp"

using namespace frattini;

TEST_CASE("phi-free groups") {
  CHECK(is_phi_free(paper_example_100().group));
  CHECK(!is_phi_free(cyclic(4)));
  CHECK(is_phi_free(frobenius20()));
  CHECK(is_phi_free(PermGroup::trivial(1)));
}

TEST_CASE("B-group membership via both routes") {
  CHECK(is_b_group(aut_a6()));
  CHECK(!is_b_group(frobenius20()));  // the quotient by C5 is C4
  CHECK(is_b_group(PermGroup::trivial(2)));
  CHECK(is_b_group(symmetric(4)));
  CHECK(!is_b_group(paper_example_100().group));

  for (const PermGroup& g : {symmetric(4), frobenius20(), dihedral(6), cyclic(12), sl2_3()})
    CHECK(is_b_group_via_quotients(g) == is_b_group_via_chief_series(g));
}

TEST_CASE("B-residual") {
  CHECK(b_residual(alternating(5)).is_trivial());
  CHECK(b_residual(cyclic(4)).order() == 2);
  CHECK(b_residual(frobenius20()).order() == 10);
  CHECK(b_residual(cyclic(100)).order() == 10);
  CHECK(b_residual(symmetric(4)).is_trivial());
}

TEST_CASE("F-group membership and the Doerk report") {
  // Nilpotent groups satisfy all five conditions.
  for (const PermGroup& g : {cyclic(4), dihedral(4), elementary_abelian(2, 3)}) {
    CHECK(is_f_group(g));
    DoerkReport r = doerk_report(g);
    CHECK(r.all_equal());
    CHECK(r.all_true());
  }

  // The Frobenius group of order 20 fails all five.
  DoerkReport f20 = doerk_report(frobenius20());
  CHECK(f20.all_equal());
  CHECK(!f20.all_true());
  CHECK(!is_f_group(frobenius20()));

  // The order-100 example fails condition (1) with witness N = E of order 25.
  DoerkReport g100 = doerk_report(paper_example_100().group);
  CHECK(g100.all_equal());
  CHECK(!g100.conditions[0]);
  CHECK(g100.witnesses[0].find("order 25") != std::string::npos);

  CHECK(is_f_group(aut_a6()));
}

TEST_CASE("NC-group membership") {
  CHECK(is_nc_group(symmetric(4)));
  CHECK(is_nc_group(elementary_abelian(3, 2)));
  CHECK(!is_nc_group(aut_a6()));
  auto witness = nc_witness(aut_a6());
  REQUIRE(witness.has_value());
  CHECK(witness->order() == 360);

  CHECK(!is_nc_group(frobenius20()));
  CHECK(!is_nc_group(dihedral(4)));  // the centre has no complement
}

TEST_CASE("splitting over the generalised Fitting series") {
  CHECK(splits_over_gf_series(symmetric(4)));
  CHECK(!splits_over_gf_series(aut_a6()));  // F*_1 = A6 has no complement
  CHECK(splits_over_gf_series(PermGroup::trivial(3)));
  CHECK(splits_over_gf_series(alternating(5)));
}

TEST_CASE("good normal subgroups") {
  Example100 ex = paper_example_100();
  CHECK(is_good_normal(ex.group, ex.m));
  CHECK(is_good_normal(ex.group, ex.n));
  PermGroup e = subgroup_join(ex.m, ex.n);
  CHECK(e.order() == 25);
  CHECK(!is_good_normal(ex.group, e));

  // N inside Phi(G) is always good.
  PermGroup c4 = cyclic(4);
  CHECK(is_good_normal(c4, frattini_subgroup(c4)));

  CHECK_THROWS_AS(is_good_normal(symmetric(3),
                                 PermGroup(3, {Permutation::parse_cycles(3, "(1 2)")})),
                  GroupError);
}

TEST_CASE("S-series") {
  // Trivial centre: the series stops at 1 immediately.
  CHECK(s_series(symmetric(3)).size() == 1);
  CHECK(s_series(paper_example_100().group).size() == 1);

  std::vector<std::uint64_t> c4_orders;
  for (const auto& t : s_series(cyclic(4))) c4_orders.push_back(t.order());
  CHECK(c4_orders == std::vector<std::uint64_t>{1, 2, 4});

  std::vector<std::uint64_t> e8_orders;
  for (const auto& t : s_series(elementary_abelian(2, 3))) e8_orders.push_back(t.order());
  CHECK(e8_orders == std::vector<std::uint64_t>{1, 8});
}

TEST_CASE("class reports") {
  ClassReport f20 = class_report(frobenius20(), "F20");
  CHECK(f20.phi_free);
  CHECK(!f20.in_b);
  CHECK(!f20.in_f);
  CHECK(!f20.in_nc);
  CHECK(f20.b_residual.order == 10);
  CHECK(f20.fitting.order == 5);
  CHECK(f20.good_normals.size() == 3);
  CHECK(f20.bad_normals.size() == 1);
  CHECK(f20.bad_normals[0].order == 5);  // Phi(G/C5) = Phi(C4) is nontrivial

  ClassReport g100 = class_report(paper_example_100().group, "G100");
  CHECK(g100.phi_free);
  CHECK(!g100.in_b);
  REQUIRE(g100.bad_normals.size() == 1);
  CHECK(g100.bad_normals[0].order == 25);
  CHECK(g100.good_normals.size() == 9);

  ClassReport trivial = class_report(PermGroup::trivial(1), "C1");
  CHECK(trivial.phi_free);
  CHECK(trivial.in_b);
  CHECK(trivial.in_f);
  CHECK(trivial.in_nc);
  CHECK(trivial.frattini.order == 1);

  ClassReport big = class_report(aut_a6(), "AutA6");
  CHECK(big.in_b);
  CHECK(big.in_f);
  CHECK(!big.in_nc);
  CHECK(big.f_star.order == 360);
  CHECK(big.f_prime.order == 360);
  CHECK(big.layer.order == 360);
  CHECK(big.fitting.order == 1);
  CHECK(big.f_star_series_orders == std::vector<std::uint64_t>{1, 360, 1440});
}
