#include <doctest.h>

#include "frattini/caps.hpp"
#include "frattini/perm.hpp"

using namespace frattini;

TEST_CASE("identity and basic accessors") {
  Permutation id(4);
  CHECK(id.is_identity());
  CHECK(id.degree() == 4);
  CHECK(id.first_moved() == -1);
  CHECK(id.element_order() == 1);
  CHECK(id.cycle_string() == "()");
  CHECK_THROWS_AS(Permutation(0), GroupError);
}

TEST_CASE("cycle parsing round trip") {
  Permutation p = Permutation::parse_cycles(6, "(1 2 3)(4 5)");
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[5] == 5);
  CHECK(p.cycle_string() == "(1 2 3)(4 5)");
  CHECK(Permutation::parse_cycles(3, "()").is_identity());
  CHECK(Permutation::parse_cycles(5, " ( 1 , 2 ) ( 3 4 ) ").cycle_string() == "(1 2)(3 4)");

  CHECK_THROWS_AS(Permutation::parse_cycles(5, "(1 2"), GroupError);
  CHECK_THROWS_AS(Permutation::parse_cycles(5, "(1 9)"), GroupError);
  CHECK_THROWS_AS(Permutation::parse_cycles(5, "(1 2)(2 3)"), GroupError);
  CHECK_THROWS_AS(Permutation::parse_cycles(5, "1 2 3"), GroupError);
}

TEST_CASE("image validation") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 2}), GroupError);
  CHECK_THROWS_AS(Permutation::from_images({0, 3, 1}), GroupError);
  CHECK(Permutation::from_one_based_images({2, 3, 1}).cycle_string() == "(1 2 3)");
}

TEST_CASE("composition applies left factor first") {
  Permutation a = Permutation::parse_cycles(3, "(1 2)");
  Permutation b = Permutation::parse_cycles(3, "(2 3)");
  Permutation ab = a * b;
  // 1 -> 2 under a, then 2 -> 3 under b.
  CHECK(ab[0] == 2);
  CHECK(ab.cycle_string() == "(1 3 2)");
  CHECK((b * a).cycle_string() == "(1 2 3)");
  CHECK((a * a).is_identity());
}

TEST_CASE("inverse, conjugation, commutator") {
  Permutation c = Permutation::parse_cycles(4, "(1 2 3 4)");
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.inverse().cycle_string() == "(1 4 3 2)");

  Permutation t = Permutation::parse_cycles(4, "(1 2)");
  // Conjugation relabels the cycle through the conjugator.
  CHECK(t.conjugated_by(c).cycle_string() == "(2 3)");
  CHECK(commutator(c, c).is_identity());
  CHECK(!commutator(t, c).is_identity());
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(Permutation::parse_cycles(5, "(1 2 3)(4 5)").element_order() == 6);
  CHECK(Permutation::parse_cycles(7, "(1 2 3 4 5 6 7)").element_order() == 7);
  CHECK(Permutation::parse_cycles(4, "(1 2)(3 4)").element_order() == 2);
}

TEST_CASE("ordering and hashing distinguish permutations") {
  Permutation a = Permutation::parse_cycles(3, "(1 2)");
  Permutation b = Permutation::parse_cycles(3, "(1 3)");
  CHECK(a != b);
  CHECK((a < b || b < a));
  CHECK(PermHash{}(a) != PermHash{}(b));
}
