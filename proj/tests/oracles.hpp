#pragma once

// Brute-force reference computations for the tests. Everything here stays
// independent of the stabilizer-chain machinery: closures are computed by
// plain multiplication until stable.

#include <set>
#include <vector>

#include "frattini/perm.hpp"

namespace oracle {

using frattini::Permutation;

// Exhaustive closure of a generating set under products.
inline std::vector<Permutation> closure(int degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Permutation p = e * g;
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Closure of a subset under conjugation by the group generators and under
// products: the normal closure, element by element.
inline std::vector<Permutation> normal_closure(int degree, const std::vector<Permutation>& group_gens,
                                               const std::vector<Permutation>& seed) {
  std::set<Permutation> gens(seed.begin(), seed.end());
  for (;;) {
    std::set<Permutation> grown = gens;
    for (const auto& s : gens)
      for (const auto& g : group_gens) grown.insert(s.conjugated_by(g));
    std::vector<Permutation> base(grown.begin(), grown.end());
    std::vector<Permutation> closed = closure(degree, base);
    std::set<Permutation> next(closed.begin(), closed.end());
    if (next == gens) return {next.begin(), next.end()};
    gens = std::move(next);
  }
}

// All subgroups of a tiny group, by testing every subset for closure under
// products. Only feasible for orders up to about 10.
inline std::vector<std::set<Permutation>> all_subgroups_by_subsets(
    const std::vector<Permutation>& elements) {
  std::vector<std::set<Permutation>> out;
  std::size_t n = elements.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::set<Permutation> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.insert(elements[i]);
    if (subset.empty()) continue;
    bool closed = true;
    for (const auto& a : subset) {
      for (const auto& b : subset) {
        if (!subset.count(a * b)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(subset));
  }
  return out;
}

// Multiplication table of the cosets of a subgroup (given by its element
// set) inside a group (given by its element set). Returns coset count and a
// table of coset products.
struct CosetTable {
  std::vector<std::vector<Permutation>> cosets;
  std::vector<std::vector<int>> product;
};

inline CosetTable coset_table(const std::vector<Permutation>& group_elements,
                              const std::set<Permutation>& subgroup) {
  CosetTable t;
  std::set<Permutation> assigned;
  for (const auto& g : group_elements) {
    if (assigned.count(g)) continue;
    std::vector<Permutation> coset;
    for (const auto& h : subgroup) {
      Permutation x = h * g;
      coset.push_back(x);
      assigned.insert(x);
    }
    t.cosets.push_back(std::move(coset));
  }
  auto coset_of = [&](const Permutation& x) {
    for (std::size_t i = 0; i < t.cosets.size(); ++i)
      for (const auto& y : t.cosets[i])
        if (y == x) return static_cast<int>(i);
    return -1;
  };
  t.product.assign(t.cosets.size(), std::vector<int>(t.cosets.size(), -1));
  for (std::size_t i = 0; i < t.cosets.size(); ++i)
    for (std::size_t j = 0; j < t.cosets.size(); ++j)
      t.product[i][j] = coset_of(t.cosets[i][0] * t.cosets[j][0]);
  return t;
}

}  // namespace oracle
