#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frattini/classifiers.hpp"

namespace frattini {

// Serialized group description. Line-oriented text:
//   name: S3            (optional)
//   degree: 3
//   gen: (1 2)          (one line per generator, disjoint cycles, 1-based)
//   gen: (1 2 3)
//   order: 6            (optional checksum)
struct GroupSpec {
  std::string name;
  int degree = 1;
  std::vector<std::string> generators;
  std::vector<int> generator_lines;  // source lines, for parse diagnostics
  std::optional<std::uint64_t> expected_order;
};

GroupSpec parse_group_spec(const std::string& text);
std::string serialize_group_spec(const GroupSpec& spec);
// Builds the group and enforces the order checksum when present.
PermGroup build_group(const GroupSpec& spec);
GroupSpec spec_of(const std::string& name, const PermGroup& g);

// ---- named constructors ----

PermGroup cyclic(int n);
PermGroup elementary_abelian(int p, int k);
PermGroup dihedral(int n);  // order 2n
PermGroup symmetric(int n);
PermGroup alternating(int n);
// C5 x| C4 with the generator acting as squaring, faithful on 5 points.
PermGroup frobenius20();
// The order-100 group E x| C with E elementary abelian of order 25 and a
// cyclic C of order 4 squaring every element of E; M and N are the two
// designated order-5 normal subgroups with E = MN.
struct Example100 {
  PermGroup group;
  PermGroup m;
  PermGroup n;
};
Example100 paper_example_100();
// PGammaL(2,9) on the 10-point projective line over the 9-element field,
// i.e. Aut(A6); order 1440 enforced at construction.
PermGroup aut_a6();
// SL(2,3) acting on the 8 nonzero vectors of a 2-dimensional space over the
// 3-element field.
PermGroup sl2_3();

struct NamedGroup {
  std::string name;
  PermGroup group;
};

// The deterministic verification corpus: the named constructors, small
// family members, and a handful of direct products, with aut_a6 as the
// single large member.
std::vector<NamedGroup> default_corpus();

// ---- reports ----

std::string save_report(const ClassReport& report);

}  // namespace frattini
