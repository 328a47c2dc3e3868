#pragma once

#include <memory>
#include <vector>

#include "frattini/perm_group.hpp"

namespace frattini {

// An epimorphism G -> G/N realized as the action of G on the right cosets of
// N. The coset action of G/N on itself is regular, which makes exact element
// lifting possible: a target element is determined by the image of coset 0.
//
// Two degree reductions are applied where valid, both permitted because the
// contract is the isomorphism type reachable through image/preimage/order:
//   * trivial kernel: the target is the source itself;
//   * when G is the internal direct product of its orbit restrictions and N
//     splits along the same blocks, the quotient is assembled blockwise.
class QuotientMap {
 public:
  static QuotientMap build(const PermGroup& source, const PermGroup& kernel,
                           const Caps& caps = {});

  const PermGroup& source() const { return *source_; }
  const PermGroup& kernel() const { return *kernel_; }
  const PermGroup& target() const { return *target_; }
  std::uint64_t index() const { return target_->order(); }

  Permutation image(const Permutation& g) const;
  PermGroup image_subgroup(const PermGroup& h) const;
  // An exact preimage of a target element: image(lift(q)) == q.
  Permutation lift(const Permutation& q) const;
  // Full preimage of a subgroup of the target.
  PermGroup preimage_subgroup(const PermGroup& k) const;

 private:
  QuotientMap() = default;

  enum class Mode { Identity, Coset, Product };

  int coset_of(const Permutation& g) const;

  Mode mode_ = Mode::Identity;
  std::shared_ptr<PermGroup> source_, kernel_, target_;
  // Coset mode
  std::vector<Permutation> reps_, inv_reps_;
  // Product mode
  std::vector<std::vector<int>> source_blocks_;  // sorted point lists
  std::vector<int> target_offsets_;
  std::vector<QuotientMap> children_;
};

}  // namespace frattini
