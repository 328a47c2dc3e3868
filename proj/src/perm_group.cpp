#include "frattini/perm_group.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace frattini {

// ---- StabilizerChain ----

StabilizerChain::StabilizerChain(int degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  if (degree_ < 1) throw GroupError("group degree must be at least 1");
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw GroupError("generator degree mismatch");
    if (!g.is_identity()) strong_gens_.push_back(g);
  }
  build();
}

std::vector<const Permutation*> StabilizerChain::level_generators(std::size_t level) const {
  std::vector<const Permutation*> out;
  for (const auto& g : strong_gens_) {
    bool fixes_prefix = true;
    for (std::size_t j = 0; j < level; ++j) {
      if (g[levels_[j].base_point] != levels_[j].base_point) {
        fixes_prefix = false;
        break;
      }
    }
    if (fixes_prefix) out.push_back(&g);
  }
  return out;
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.orbit.clear();
  lv.transversal.clear();
  lv.inv_transversal.clear();
  lv.orbit_pos.assign(degree_, -1);
  lv.orbit.push_back(lv.base_point);
  lv.orbit_pos[lv.base_point] = 0;
  lv.transversal.push_back(Permutation(degree_));
  lv.inv_transversal.push_back(Permutation(degree_));
  auto gens = level_generators(level);
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    for (const Permutation* s : gens) {
      int q = (*s)[lv.orbit[head]];
      if (lv.orbit_pos[q] < 0) {
        lv.orbit_pos[q] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(q);
        Permutation t = lv.transversal[head] * (*s);
        lv.inv_transversal.push_back(t.inverse());
        lv.transversal.push_back(std::move(t));
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g,
                                                           std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    int p = g[lv.base_point];
    if (p == lv.base_point) continue;
    int pos = lv.orbit_pos.empty() ? -1 : lv.orbit_pos[p];
    if (pos < 0) return {std::move(g), l};
    g = g * lv.inv_transversal[pos];
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::build() {
  // Every strong generator must move some base point.
  auto ensure_base_for = [&](const Permutation& g) {
    for (const Level& lv : levels_)
      if (g[lv.base_point] != lv.base_point) return;
    Level lv;
    lv.base_point = g.first_moved();
    levels_.push_back(std::move(lv));
  };
  for (const auto& g : strong_gens_) ensure_base_for(g);
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);

  // Bottom-up verification: levels below `i` satisfy the chain condition with
  // respect to the current strong generating set. A failing Schreier
  // generator is added as a strong generator at the level whose base point it
  // first moves, and verification descends to that level.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    rebuild_orbit(static_cast<std::size_t>(i));
    Level& lv = levels_[static_cast<std::size_t>(i)];
    auto gens = level_generators(static_cast<std::size_t>(i));
    bool clean = true;
    for (std::size_t oi = 0; oi < lv.orbit.size() && clean; ++oi) {
      for (const Permutation* s : gens) {
        int q = (*s)[lv.orbit[oi]];
        Permutation schreier = lv.transversal[oi] * (*s) * lv.inv_transversal[lv.orbit_pos[q]];
        if (schreier.is_identity()) continue;
        auto [res, lvl] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (res.is_identity()) continue;
        if (lvl == levels_.size()) ensure_base_for(res);
        strong_gens_.push_back(std::move(res));
        // Deeper levels above `lvl` are unaffected: the new generator moves
        // base point `lvl`, so it enters no level beyond it.
        i = static_cast<std::ptrdiff_t>(lvl);
        clean = false;
        break;
      }
    }
    if (clean) --i;
  }

  order_ = 1;
  for (const Level& lv : levels_) order_ *= static_cast<std::uint64_t>(lv.orbit.size());
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw GroupError("degree mismatch in membership test");
  auto [res, lvl] = strip(g, 0);
  return lvl == levels_.size() && res.is_identity();
}

void StabilizerChain::for_each_element(
    const std::function<bool(const Permutation&)>& fn) const {
  if (levels_.empty()) {
    fn(Permutation(degree_));
    return;
  }
  std::vector<std::size_t> idx(levels_.size(), 0);
  for (;;) {
    std::size_t last = levels_.size() - 1;
    Permutation e = levels_[last].transversal[idx[last]];
    for (std::size_t l = last; l-- > 0;) e = e * levels_[l].transversal[idx[l]];
    if (!fn(e)) return;
    std::size_t l = 0;
    while (l < levels_.size()) {
      if (++idx[l] < levels_[l].orbit.size()) break;
      idx[l] = 0;
      ++l;
    }
    if (l == levels_.size()) break;
  }
}

// ---- PermGroup ----

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  chain_ = std::make_shared<StabilizerChain>(degree_, gens_);
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

bool PermGroup::contains(const Permutation& g) const { return chain_->contains(g); }

// ---- element access ----

std::vector<Permutation> elements(const PermGroup& g, const Caps& caps) {
  if (g.order() > caps.enumeration_cap)
    throw CapExceededError("element enumeration: order " + std::to_string(g.order()) +
                           " exceeds cap " + std::to_string(caps.enumeration_cap));
  std::vector<Permutation> out;
  out.reserve(g.order());
  g.for_each_element([&](const Permutation& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

// ---- subgroup relations ----

bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) return false;
  for (const auto& x : h.generators())
    if (!g.contains(x)) return false;
  return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) throw GroupError("is_normal: not a subgroup");
  for (const auto& x : h.generators())
    for (const auto& y : g.generators())
      if (!h.contains(x.conjugated_by(y))) return false;
  return true;
}

// ---- constructions ----

namespace {

// Grows a generating set until `more` produces nothing new. `more` is called
// with each confirmed generator and the current group.
PermGroup conjugation_closure(int degree, std::vector<Permutation> seed,
                              const std::vector<Permutation>& conjugators) {
  std::vector<Permutation> gens;
  PermGroup cur = PermGroup::trivial(degree);
  for (auto& s : seed) {
    if (!cur.contains(s)) {
      gens.push_back(std::move(s));
      cur = PermGroup(degree, gens);
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& c : conjugators) {
      Permutation conj = gens[i].conjugated_by(c);
      if (!cur.contains(conj)) {
        gens.push_back(std::move(conj));
        cur = PermGroup(degree, gens);
      }
    }
  }
  return cur;
}

}  // namespace

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& elts) {
  for (const auto& e : elts)
    if (!g.contains(e)) throw GroupError("normal_closure: element outside the group");
  return conjugation_closure(g.degree(), elts, g.generators());
}

PermGroup derived_subgroup(const PermGroup& g) { return commutator_subgroup(g, g); }

PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw GroupError("commutator_subgroup: degree mismatch");
  std::vector<Permutation> seed;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) seed.push_back(commutator(x, y));
  std::vector<Permutation> conjugators = a.generators();
  conjugators.insert(conjugators.end(), b.generators().begin(), b.generators().end());
  return conjugation_closure(a.degree(), std::move(seed), conjugators);
}

PermGroup subgroup_join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw GroupError("subgroup_join: degree mismatch");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup intersection(const PermGroup& a, const PermGroup& b, const Caps& caps) {
  if (a.degree() != b.degree()) throw GroupError("intersection: degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  if (small.order() > caps.enumeration_cap)
    throw CapExceededError("intersection: order exceeds enumeration cap");
  std::vector<Permutation> gens;
  PermGroup cur = PermGroup::trivial(a.degree());
  small.for_each_element([&](const Permutation& e) {
    if (large.contains(e) && !cur.contains(e)) {
      gens.push_back(e);
      cur = PermGroup(a.degree(), gens);
    }
    return true;
  });
  return cur;
}

PermGroup center(const PermGroup& g, const Caps& caps) { return centralizer(g, g, caps); }

PermGroup centralizer(const PermGroup& g, const PermGroup& h, const Caps& caps) {
  if (g.degree() != h.degree()) throw GroupError("centralizer: degree mismatch");
  if (g.order() > caps.enumeration_cap)
    throw CapExceededError("centralizer: order " + std::to_string(g.order()) +
                           " exceeds enumeration cap");
  std::vector<Permutation> gens;
  PermGroup cur = PermGroup::trivial(g.degree());
  g.for_each_element([&](const Permutation& e) {
    for (const auto& x : h.generators())
      if (!(e * x == x * e)) return true;
    if (!cur.contains(e)) {
      gens.push_back(e);
      cur = PermGroup(g.degree(), gens);
    }
    return true;
  });
  return cur;
}

Permutation extend_degree(const Permutation& p, int new_degree) {
  if (new_degree < p.degree()) throw GroupError("extend_degree: smaller degree");
  std::vector<int> img(new_degree);
  for (int i = 0; i < p.degree(); ++i) img[i] = p[i];
  for (int i = p.degree(); i < new_degree; ++i) img[i] = i;
  return Permutation::from_images(std::move(img));
}

Permutation shift_points(const Permutation& p, int offset, int new_degree) {
  if (offset + p.degree() > new_degree) throw GroupError("shift_points: out of range");
  std::vector<int> img(new_degree);
  for (int i = 0; i < new_degree; ++i) img[i] = i;
  for (int i = 0; i < p.degree(); ++i) img[offset + i] = offset + p[i];
  return Permutation::from_images(std::move(img));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  int n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& p : a.generators()) gens.push_back(extend_degree(p, n));
  for (const auto& p : b.generators()) gens.push_back(shift_points(p, a.degree(), n));
  return PermGroup(n, std::move(gens));
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  int n = g.degree();
  std::vector<int> orbit_id(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (orbit_id[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<int> orb{start};
    orbit_id[start] = id;
    for (std::size_t head = 0; head < orb.size(); ++head) {
      for (const auto& s : g.generators()) {
        int q = s[orb[head]];
        if (orbit_id[q] < 0) {
          orbit_id[q] = id;
          orb.push_back(q);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

Permutation restrict_to_block(const Permutation& p, const std::vector<int>& block) {
  std::vector<int> img(block.size());
  for (std::size_t k = 0; k < block.size(); ++k) {
    int q = p[block[k]];
    auto it = std::lower_bound(block.begin(), block.end(), q);
    if (it == block.end() || *it != q) throw GroupError("restrict_to_block: block not invariant");
    img[k] = static_cast<int>(it - block.begin());
  }
  return Permutation::from_images(std::move(img));
}

PermGroup restrict_group(const PermGroup& g, const std::vector<int>& block) {
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(restrict_to_block(s, block));
  return PermGroup(static_cast<int>(block.size()), std::move(gens));
}

std::vector<Permutation> conjugacy_class_representatives(const PermGroup& g,
                                                         const Caps& caps) {
  std::vector<Permutation> elems = elements(g, caps);
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> reps;
  for (const auto& e : elems) {
    if (seen.count(e)) continue;
    reps.push_back(e);
    std::vector<Permutation> frontier{e};
    seen.insert(e);
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier) {
        for (const auto& s : g.generators()) {
          Permutation c = x.conjugated_by(s);
          if (seen.insert(c).second) next.push_back(std::move(c));
        }
      }
      frontier = std::move(next);
    }
  }
  return reps;
}

PermGroup group_from_elements(int degree, const std::vector<Permutation>& elts) {
  std::vector<Permutation> gens;
  PermGroup cur = PermGroup::trivial(degree);
  for (const auto& e : elts) {
    if (!cur.contains(e)) {
      gens.push_back(e);
      cur = PermGroup(degree, gens);
    }
  }
  return cur;
}

}  // namespace frattini
