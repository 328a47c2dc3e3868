#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frattini/quotient.hpp"

namespace frattini {

// One factor K/L of a chief series of `group`, annotated. Flags that could
// not be computed within caps are absent and `annotation_error` says why.
struct ChiefFactorInfo {
  PermGroup lower;  // L
  PermGroup upper;  // K
  std::uint64_t factor_order = 0;
  bool is_abelian = false;
  std::optional<bool> is_frattini;       // K/L <= Phi(G/L)
  std::optional<PermGroup> centralizer;  // C_G(K/L)
  std::string annotation_error;
};

// Ascending chain 1 = N_0 < N_1 < ... < N_k = G, each term normal in G and
// each factor minimal normal in the corresponding quotient.
struct ChiefSeries {
  PermGroup group;
  std::vector<PermGroup> terms;
  std::vector<ChiefFactorInfo> factors;
};

// Generalised Fitting series 1 = F*_0 <= F*_1 <= ... = G with
// F*_{i+1}/F*_i = F*(G/F*_i).
struct GFSeries {
  std::vector<PermGroup> terms;
};

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// ---- subgroup lattice (bounded by caps.lattice_cap) ----

// Every subgroup, found by closing the cyclic subgroups under one-element
// extensions; canonically ordered (order, then element set).
std::vector<PermGroup> all_subgroups(const PermGroup& g, const Caps& caps = {});
std::vector<PermGroup> maximal_subgroups(const PermGroup& g, const Caps& caps = {});
// Intersection of the maximal subgroups, straight from the lattice. This is
// the reference route; frattini_subgroup dispatches between strategies.
PermGroup frattini_via_lattice(const PermGroup& g, const Caps& caps = {});

// Multi-strategy Frattini subgroup:
//   (a) lattice intersection when |G| is within the lattice cap,
//   (b) trivial Fitting subgroup forces a trivial Frattini subgroup,
//   (c) p-groups use G' * G^p,
//   (d) internal direct products along orbit blocks multiply factorwise.
// A group admitting no strategy is an error, never a guess.
PermGroup frattini_subgroup(const PermGroup& g, const Caps& caps = {});

// ---- normal structure ----

// All normal subgroups: the join closure of the normal closures of single
// elements (one per conjugacy class). Includes 1 and G.
std::vector<PermGroup> normal_subgroups(const PermGroup& g, const Caps& caps = {});
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, const Caps& caps = {});
PermGroup socle(const PermGroup& g, const Caps& caps = {});
PermGroup p_core(const PermGroup& g, std::uint64_t p, const Caps& caps = {});
PermGroup fitting_subgroup(const PermGroup& g, const Caps& caps = {});

bool is_nilpotent(const PermGroup& g, const Caps& caps = {});
bool is_soluble(const PermGroup& g);
bool is_perfect(const PermGroup& g);
bool is_simple(const PermGroup& g, const Caps& caps = {});
bool is_quasisimple(const PermGroup& g, const Caps& caps = {});

// Subnormal subgroups by recursive descent through normal subgroups,
// memoized on element-set identity within one invocation.
std::vector<PermGroup> subnormal_subgroups(const PermGroup& g, const Caps& caps = {});
// Subnormal quasi-simple subgroups; pairwise distinct components commute.
std::vector<PermGroup> components(const PermGroup& g, const Caps& caps = {});
PermGroup layer(const PermGroup& g, const Caps& caps = {});

// F*(G) = F(G) Lay(G), and the series iterating it through quotients.
PermGroup generalized_fitting(const PermGroup& g, const Caps& caps = {});
GFSeries f_star_series(const PermGroup& g, const Caps& caps = {});

// F'(G): the full preimage of Soc(G/Phi(G)).
PermGroup f_prime(const PermGroup& g, const Caps& caps = {});

ChiefSeries chief_series(const PermGroup& g, const Caps& caps = {});
// Chief series whose bottom term is the given minimal normal subgroup; the
// rest of the series is the deterministic continuation.
ChiefSeries chief_series_with_bottom(const PermGroup& g, const PermGroup& bottom,
                                     const Caps& caps = {});

// A complement to the normal subgroup n in g (C with C meet N = 1, CN = G),
// or absent if none exists. Exhaustive backtracking over generator tuples of
// length at most ceil(log2 |G:N|) drawn from elements of order dividing the
// index; bounded by caps.complement_cap.
std::optional<PermGroup> find_complement(const PermGroup& g, const PermGroup& n,
                                         const Caps& caps = {});

}  // namespace frattini
