#include "frattini/quotient.hpp"

#include <algorithm>
#include <string>

namespace frattini {

namespace {

// Source blocks on which both the group and the kernel decompose as internal
// direct products, or empty when no such decomposition exists.
struct BlockSplit {
  std::vector<std::vector<int>> blocks;
  std::vector<PermGroup> group_parts;
  std::vector<PermGroup> kernel_parts;
};

bool try_block_split(const PermGroup& g, const PermGroup& n, const Caps& caps,
                     BlockSplit& out) {
  std::vector<std::vector<int>> blocks = orbits(g);
  if (blocks.size() < 2) return false;
  std::vector<PermGroup> parts;
  std::uint64_t prod = 1;
  for (const auto& b : blocks) {
    parts.push_back(restrict_group(g, b));
    std::uint64_t po = parts.back().order();
    if (prod > g.order() / po) return false;  // product already exceeds |g|
    prod *= po;
  }
  if (prod != g.order()) return false;
  if (n.order() > caps.enumeration_cap) return false;

  // Kernel elements supported on a single block, restricted to it.
  std::vector<std::vector<Permutation>> kernel_gens(blocks.size());
  std::vector<int> block_of_point(g.degree(), -1);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    for (int p : blocks[bi]) block_of_point[p] = static_cast<int>(bi);
  n.for_each_element([&](const Permutation& e) {
    int moved = e.first_moved();
    if (moved < 0) return true;
    int bi = block_of_point[moved];
    for (int p = 0; p < e.degree(); ++p)
      if (e[p] != p && block_of_point[p] != bi) return true;  // spans blocks
    kernel_gens[bi].push_back(restrict_to_block(e, blocks[bi]));
    return true;
  });
  std::vector<PermGroup> kparts;
  std::uint64_t kprod = 1;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    kparts.emplace_back(static_cast<int>(blocks[bi].size()), kernel_gens[bi]);
    kprod *= kparts.back().order();
  }
  if (kprod != n.order()) return false;

  out.blocks = std::move(blocks);
  out.group_parts = std::move(parts);
  out.kernel_parts = std::move(kparts);
  return true;
}

}  // namespace

QuotientMap QuotientMap::build(const PermGroup& source, const PermGroup& kernel,
                               const Caps& caps) {
  if (source.degree() != kernel.degree())
    throw GroupError("quotient: kernel degree differs from source degree");
  if (!is_subgroup(source, kernel) || !is_normal(source, kernel))
    throw GroupError("quotient: kernel is not a normal subgroup of the source");
  std::uint64_t index = source.order() / kernel.order();
  if (index > caps.index_cap)
    throw CapExceededError("quotient: index " + std::to_string(index) + " exceeds cap " +
                           std::to_string(caps.index_cap));

  QuotientMap q;
  q.source_ = std::make_shared<PermGroup>(source);
  q.kernel_ = std::make_shared<PermGroup>(kernel);

  if (kernel.order() == source.order()) {
    // Quotient by the whole group: one coset.
    q.mode_ = Mode::Coset;
    q.reps_ = {Permutation(source.degree())};
    q.inv_reps_ = q.reps_;
    q.target_ = std::make_shared<PermGroup>(PermGroup::trivial(1));
    return q;
  }
  if (kernel.is_trivial()) {
    q.mode_ = Mode::Identity;
    q.target_ = q.source_;
    return q;
  }

  BlockSplit split;
  if (try_block_split(source, kernel, caps, split)) {
    q.mode_ = Mode::Product;
    q.source_blocks_ = std::move(split.blocks);
    int offset = 0;
    for (std::size_t bi = 0; bi < q.source_blocks_.size(); ++bi) {
      q.children_.push_back(build(split.group_parts[bi], split.kernel_parts[bi], caps));
      q.target_offsets_.push_back(offset);
      offset += q.children_.back().target().degree();
    }
    std::vector<Permutation> tgens;
    for (const auto& g : source.generators()) {
      std::vector<int> img(offset);
      for (std::size_t bi = 0; bi < q.source_blocks_.size(); ++bi) {
        Permutation part =
            q.children_[bi].image(restrict_to_block(g, q.source_blocks_[bi]));
        int off = q.target_offsets_[bi];
        for (int p = 0; p < part.degree(); ++p) img[off + p] = off + part[p];
      }
      tgens.push_back(Permutation::from_images(std::move(img)));
    }
    q.target_ = std::make_shared<PermGroup>(offset, std::move(tgens));
  } else {
    q.mode_ = Mode::Coset;
    q.reps_ = {Permutation(source.degree())};
    q.inv_reps_ = q.reps_;
    for (std::size_t head = 0; head < q.reps_.size(); ++head) {
      for (const auto& g : source.generators()) {
        Permutation y = q.reps_[head] * g;
        if (q.coset_of(y) < 0) {
          q.inv_reps_.push_back(y.inverse());
          q.reps_.push_back(std::move(y));
        }
      }
    }
    int deg = static_cast<int>(q.reps_.size());
    std::vector<Permutation> tgens;
    for (const auto& g : source.generators()) {
      std::vector<int> img(deg);
      for (int i = 0; i < deg; ++i) img[i] = q.coset_of(q.reps_[i] * g);
      tgens.push_back(Permutation::from_images(std::move(img)));
    }
    q.target_ = std::make_shared<PermGroup>(deg, std::move(tgens));
  }

  if (q.target_->order() * kernel.order() != source.order())
    throw InternalCheckError("quotient: target order times kernel order is not the source order");
  return q;
}

int QuotientMap::coset_of(const Permutation& g) const {
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (kernel_->contains(g * inv_reps_[i])) return static_cast<int>(i);
  return -1;
}

Permutation QuotientMap::image(const Permutation& g) const {
  if (!source_->contains(g)) throw GroupError("quotient image: element outside the source");
  switch (mode_) {
    case Mode::Identity:
      return g;
    case Mode::Coset: {
      int deg = static_cast<int>(reps_.size());
      std::vector<int> img(deg);
      for (int i = 0; i < deg; ++i) img[i] = coset_of(reps_[i] * g);
      return Permutation::from_images(std::move(img));
    }
    case Mode::Product: {
      std::vector<int> img(target_->degree());
      for (std::size_t bi = 0; bi < source_blocks_.size(); ++bi) {
        Permutation part = children_[bi].image(restrict_to_block(g, source_blocks_[bi]));
        int off = target_offsets_[bi];
        for (int p = 0; p < part.degree(); ++p) img[off + p] = off + part[p];
      }
      return Permutation::from_images(std::move(img));
    }
  }
  throw GroupError("unreachable");
}

PermGroup QuotientMap::image_subgroup(const PermGroup& h) const {
  std::vector<Permutation> gens;
  for (const auto& g : h.generators()) gens.push_back(image(g));
  return PermGroup(target_->degree(), std::move(gens));
}

Permutation QuotientMap::lift(const Permutation& q) const {
  if (!target_->contains(q)) throw GroupError("quotient lift: element outside the target");
  switch (mode_) {
    case Mode::Identity:
      return q;
    case Mode::Coset:
      // Regular action: the target element is determined by the image of
      // coset 0, and the representative of that coset maps onto it.
      return reps_[q[0]];
    case Mode::Product: {
      Permutation out(source_->degree());
      for (std::size_t bi = 0; bi < source_blocks_.size(); ++bi) {
        const auto& child = children_[bi];
        int off = target_offsets_[bi];
        std::vector<int> tblock(child.target().degree());
        for (int p = 0; p < child.target().degree(); ++p) tblock[p] = q[off + p] - off;
        Permutation part = child.lift(Permutation::from_images(std::move(tblock)));
        std::vector<int> img = out.images();
        for (int p = 0; p < part.degree(); ++p) img[source_blocks_[bi][p]] =
            source_blocks_[bi][part[p]];
        out = Permutation::from_images(std::move(img));
      }
      return out;
    }
  }
  throw GroupError("unreachable");
}

PermGroup QuotientMap::preimage_subgroup(const PermGroup& k) const {
  std::vector<Permutation> gens = kernel_->generators();
  for (const auto& g : k.generators()) gens.push_back(lift(g));
  return PermGroup(source_->degree(), std::move(gens));
}

}  // namespace frattini
