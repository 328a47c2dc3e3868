#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "frattini/caps.hpp"
#include "frattini/perm.hpp"

namespace frattini {

// Deterministic Schreier-Sims stabilizer chain. Base points are the first
// moved points in natural order, so identical generator lists always produce
// identical chains.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Permutation>& generators);

  std::uint64_t order() const { return order_; }
  bool contains(const Permutation& g) const;

  // Visits every element exactly once, identity first, in a fixed order.
  // The callback may return false to stop early.
  void for_each_element(const std::function<bool(const Permutation&)>& fn) const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<int> orbit;                     // BFS order, orbit[0] == base_point
    std::vector<int> orbit_pos;                 // degree-sized, -1 if outside
    std::vector<Permutation> transversal;       // transversal[i] maps base_point -> orbit[i]
    std::vector<Permutation> inv_transversal;
  };

  void build();
  void rebuild_orbit(std::size_t level);
  std::vector<const Permutation*> level_generators(std::size_t level) const;
  // Strips g through levels [from, ...); returns the residue and the level at
  // which stripping stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  int degree_;
  std::vector<Permutation> strong_gens_;
  std::vector<std::size_t> strong_gen_level_;  // first level whose base prefix the gen fixes
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

// An immutable permutation group given by generators, with a stabilizer
// chain built at construction. Copies share the chain.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  std::uint64_t order() const { return chain_->order(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  bool is_trivial() const { return order() == 1; }

  bool contains(const Permutation& g) const;
  void for_each_element(const std::function<bool(const Permutation&)>& fn) const {
    chain_->for_each_element(fn);
  }

 private:
  int degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabilizerChain> chain_;
};

// ---- element access ----

// All elements, identity first, in chain order. Errors if order() exceeds
// caps.enumeration_cap.
std::vector<Permutation> elements(const PermGroup& g, const Caps& caps = {});

// ---- subgroup relations ----

bool is_subgroup(const PermGroup& g, const PermGroup& h);   // h <= g
bool same_group(const PermGroup& a, const PermGroup& b);    // equal element sets
// Pre: h <= g (checked). True iff h is invariant under conjugation by g.
bool is_normal(const PermGroup& g, const PermGroup& h);

// ---- constructions ----

// Smallest normal subgroup of g containing the given elements (which must
// lie in g).
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& elts);
PermGroup derived_subgroup(const PermGroup& g);
// [a, b] as a subgroup of <a, b>; a and b must share g's degree.
PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b);
// <a, b>
PermGroup subgroup_join(const PermGroup& a, const PermGroup& b);
PermGroup intersection(const PermGroup& a, const PermGroup& b, const Caps& caps = {});
PermGroup center(const PermGroup& g, const Caps& caps = {});
// Centralizer of h in g by element filtering; errors above the enumeration cap.
PermGroup centralizer(const PermGroup& g, const PermGroup& h, const Caps& caps = {});

// Group acting on the disjoint union of the two point sets; the left factor
// keeps its points, the right factor is shifted by a.degree().
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
// Embeddings into a direct product of the given total degree.
Permutation extend_degree(const Permutation& p, int new_degree);
Permutation shift_points(const Permutation& p, int offset, int new_degree);

// ---- decomposition helpers ----

// Orbits of the natural action, each sorted ascending, ordered by smallest
// point.
std::vector<std::vector<int>> orbits(const PermGroup& g);
// Restriction of p to an invariant block (sorted point list).
Permutation restrict_to_block(const Permutation& p, const std::vector<int>& block);
PermGroup restrict_group(const PermGroup& g, const std::vector<int>& block);

// One representative per conjugacy class, in element-enumeration order.
std::vector<Permutation> conjugacy_class_representatives(const PermGroup& g,
                                                         const Caps& caps = {});

// The subgroup generated by a set of elements of a common degree.
PermGroup group_from_elements(int degree, const std::vector<Permutation>& elts);

}  // namespace frattini
