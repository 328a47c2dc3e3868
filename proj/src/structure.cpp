#include "frattini/structure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace frattini {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

bool is_prime_power(std::uint64_t n, std::uint64_t& p) {
  if (n < 2) return false;
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return false;
  p = ps[0];
  return true;
}

// ---- element indexing and bitsets over a fixed ambient group ----

using Bitset = std::vector<std::uint64_t>;

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : b) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }
};

void bit_set(Bitset& b, int i) { b[i >> 6] |= 1ull << (i & 63); }
bool bit_test(const Bitset& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }

bool bit_subset(const Bitset& a, const Bitset& b) {  // a subseteq b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

int bit_count(const Bitset& b) {
  int c = 0;
  for (std::uint64_t w : b) c += __builtin_popcountll(w);
  return c;
}

struct ElementIndex {
  std::vector<Permutation> elems;
  std::unordered_map<Permutation, int, PermHash> pos;

  ElementIndex(const PermGroup& g, const Caps& caps) : elems(elements(g, caps)) {
    pos.reserve(elems.size() * 2);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  }

  int size() const { return static_cast<int>(elems.size()); }
  Bitset empty_set() const { return Bitset((elems.size() + 63) / 64, 0); }

  Bitset set_of(const PermGroup& h) const {
    Bitset b = empty_set();
    h.for_each_element([&](const Permutation& e) {
      bit_set(b, pos.at(e));
      return true;
    });
    return b;
  }
};

PermGroup group_from_bitset(const ElementIndex& idx, const Bitset& b, int degree) {
  std::vector<Permutation> gens;
  PermGroup cur = PermGroup::trivial(degree);
  for (int i = 0; i < idx.size(); ++i) {
    if (!bit_test(b, i)) continue;
    if (!cur.contains(idx.elems[i])) {
      gens.push_back(idx.elems[i]);
      cur = PermGroup(degree, gens);
    }
  }
  return cur;
}

// Canonical order for subgroup lists: by order, then by element set.
void sort_canonically(std::vector<PermGroup>& groups, const ElementIndex& idx) {
  std::vector<std::pair<Bitset, std::size_t>> keyed;
  keyed.reserve(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) keyed.emplace_back(idx.set_of(groups[i]), i);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    int ca = bit_count(a.first), cb = bit_count(b.first);
    if (ca != cb) return ca < cb;
    return a.first < b.first;
  });
  std::vector<PermGroup> out;
  out.reserve(groups.size());
  for (const auto& [bits, i] : keyed) out.push_back(std::move(groups[i]));
  groups = std::move(out);
}

// Linear-scan set of groups deduplicated by element-set equality.
struct GroupList {
  std::vector<PermGroup> groups;

  bool contains(const PermGroup& g) const {
    for (const auto& h : groups)
      if (same_group(h, g)) return true;
    return false;
  }
  bool add(PermGroup g) {
    if (contains(g)) return false;
    groups.push_back(std::move(g));
    return true;
  }
};

}  // namespace

// ---- subgroup lattice ----

namespace {

struct Lattice {
  ElementIndex idx;
  std::vector<int> table;  // idx.size() x idx.size() multiplication table
  std::vector<Bitset> subgroups;

  Lattice(const PermGroup& g, const Caps& caps) : idx(g, caps) {
    int n = idx.size();
    table.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[static_cast<std::size_t>(i) * n + j] = idx.pos.at(idx.elems[i] * idx.elems[j]);

    // Seed with cyclic subgroups, then extend every subgroup by every
    // outside element until closed.
    std::unordered_set<Bitset, BitsetHash> seen;
    std::deque<std::pair<Bitset, std::vector<int>>> queue;
    for (int i = 0; i < n; ++i) {
      auto [bits, members] = close({}, {}, i);
      if (seen.insert(bits).second) queue.emplace_back(bits, members);
    }
    while (!queue.empty()) {
      auto [bits, members] = std::move(queue.front());
      queue.pop_front();
      subgroups.push_back(bits);
      for (int gidx = 0; gidx < n; ++gidx) {
        if (bit_test(bits, gidx)) continue;
        auto [kb, km] = close(bits, members, gidx);
        if (seen.insert(kb).second) queue.emplace_back(std::move(kb), std::move(km));
      }
    }
    std::sort(subgroups.begin(), subgroups.end(), [](const Bitset& a, const Bitset& b) {
      int ca = bit_count(a), cb = bit_count(b);
      if (ca != cb) return ca < cb;
      return a < b;
    });
  }

  int mul(int i, int j) const { return table[static_cast<std::size_t>(i) * idx.size() + j]; }

  // Closure of a subgroup (given as bitset + member list) extended by one
  // element. Products inside the old subgroup need no revisit.
  std::pair<Bitset, std::vector<int>> close(const Bitset& base, const std::vector<int>& base_members,
                                            int extra) const {
    Bitset bits = base.empty() ? idx.empty_set() : base;
    std::vector<int> members = base_members;
    std::size_t first_new = members.size();
    if (!bit_test(bits, extra)) {
      bit_set(bits, extra);
      members.push_back(extra);
    }
    if (members.size() == 1) {  // fresh cyclic subgroup: include the identity
      int id = idx.pos.at(Permutation(idx.elems[0].degree()));
      if (!bit_test(bits, id)) {
        bit_set(bits, id);
        members.push_back(id);
      }
    }
    for (std::size_t i = first_new; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        for (int p : {mul(members[i], members[j]), mul(members[j], members[i])}) {
          if (!bit_test(bits, p)) {
            bit_set(bits, p);
            members.push_back(p);
          }
        }
      }
    }
    return {std::move(bits), std::move(members)};
  }
};

Lattice make_lattice(const PermGroup& g, const Caps& caps) {
  if (g.order() > caps.lattice_cap)
    throw CapExceededError("subgroup lattice: order " + std::to_string(g.order()) +
                           " exceeds cap " + std::to_string(caps.lattice_cap));
  return Lattice(g, caps);
}

std::vector<Bitset> maximal_bitsets(const Lattice& lat) {
  const Bitset whole = lat.subgroups.back();
  std::vector<Bitset> out;
  for (const Bitset& h : lat.subgroups) {
    if (h == whole) continue;
    bool maximal = true;
    for (const Bitset& k : lat.subgroups) {
      if (k == whole || k == h) continue;
      if (bit_count(k) > bit_count(h) && bit_subset(h, k)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g, const Caps& caps) {
  Lattice lat = make_lattice(g, caps);
  std::vector<PermGroup> out;
  out.reserve(lat.subgroups.size());
  for (const Bitset& b : lat.subgroups) out.push_back(group_from_bitset(lat.idx, b, g.degree()));
  return out;
}

std::vector<PermGroup> maximal_subgroups(const PermGroup& g, const Caps& caps) {
  Lattice lat = make_lattice(g, caps);
  std::vector<PermGroup> out;
  for (const Bitset& b : maximal_bitsets(lat)) out.push_back(group_from_bitset(lat.idx, b, g.degree()));
  return out;
}

PermGroup frattini_via_lattice(const PermGroup& g, const Caps& caps) {
  if (g.order() == 1) return PermGroup::trivial(g.degree());
  Lattice lat = make_lattice(g, caps);
  std::vector<Bitset> maxes = maximal_bitsets(lat);
  if (maxes.empty()) return g;  // no proper subgroup at all: |G| prime handled below anyway
  Bitset inter = maxes[0];
  for (std::size_t i = 1; i < maxes.size(); ++i)
    for (std::size_t w = 0; w < inter.size(); ++w) inter[w] &= maxes[i][w];
  return group_from_bitset(lat.idx, inter, g.degree());
}

namespace {

// Strategy (c): for a p-group, Phi(G) = G' G^p, and modulo G' the p-th powers
// of the generators suffice.
PermGroup frattini_of_p_group(const PermGroup& g, std::uint64_t p) {
  PermGroup derived = derived_subgroup(g);
  std::vector<Permutation> gens = derived.generators();
  for (const auto& x : g.generators()) {
    Permutation xp = x;
    for (std::uint64_t i = 1; i < p; ++i) xp = xp * x;
    gens.push_back(std::move(xp));
  }
  return PermGroup(g.degree(), std::move(gens));
}

// Strategy (d): when G is the internal direct product of its restrictions to
// orbit blocks, the Frattini subgroup is the product of the parts' Frattini
// subgroups.
std::optional<PermGroup> frattini_of_orbit_product(const PermGroup& g, const Caps& caps) {
  std::vector<std::vector<int>> blocks = orbits(g);
  if (blocks.size() < 2) return std::nullopt;
  std::vector<PermGroup> parts;
  std::uint64_t prod = 1;
  for (const auto& b : blocks) {
    parts.push_back(restrict_group(g, b));
    std::uint64_t po = parts.back().order();
    if (prod > g.order() / po) return std::nullopt;
    prod *= po;
  }
  if (prod != g.order()) return std::nullopt;
  std::vector<Permutation> gens;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    PermGroup phi = PermGroup::trivial(1);
    try {
      phi = frattini_subgroup(parts[bi], caps);
    } catch (const CapExceededError&) {
      return std::nullopt;  // a factor is out of reach; let another strategy try
    }
    for (const auto& x : phi.generators()) {
      std::vector<int> img(g.degree());
      for (int i = 0; i < g.degree(); ++i) img[i] = i;
      for (int k = 0; k < x.degree(); ++k) img[blocks[bi][k]] = blocks[bi][x[k]];
      gens.push_back(Permutation::from_images(std::move(img)));
    }
  }
  return PermGroup(g.degree(), std::move(gens));
}

}  // namespace

PermGroup frattini_subgroup(const PermGroup& g, const Caps& caps) {
  if (g.order() == 1) return PermGroup::trivial(g.degree());
  std::uint64_t p = 0;
  if (is_prime_power(g.order(), p)) return frattini_of_p_group(g, p);
  if (auto split = frattini_of_orbit_product(g, caps)) return *split;
  if (g.order() <= caps.enumeration_cap && fitting_subgroup(g, caps).is_trivial())
    return PermGroup::trivial(g.degree());
  if (g.order() <= caps.lattice_cap) return frattini_via_lattice(g, caps);
  throw CapExceededError(
      "frattini_subgroup: no strategy applies (order " + std::to_string(g.order()) +
      " exceeds the lattice cap, the Fitting subgroup is nontrivial, and the group is neither a "
      "p-group nor an orbit-block direct product)");
}

// ---- normal structure ----

std::vector<PermGroup> normal_subgroups(const PermGroup& g, const Caps& caps) {
  if (g.order() > caps.enumeration_cap)
    throw CapExceededError("normal_subgroups: order " + std::to_string(g.order()) +
                           " exceeds enumeration cap");
  GroupList normals;
  for (const auto& rep : conjugacy_class_representatives(g, caps))
    normals.add(normal_closure(g, {rep}));
  // Join closure: every normal subgroup is a join of single-element normal
  // closures.
  for (std::size_t i = 0; i < normals.groups.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      PermGroup join = subgroup_join(normals.groups[i], normals.groups[j]);
      normals.add(std::move(join));
    }
  }
  ElementIndex idx(g, caps);
  sort_canonically(normals.groups, idx);
  return normals.groups;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, const Caps& caps) {
  std::vector<PermGroup> normals = normal_subgroups(g, caps);
  std::vector<PermGroup> out;
  for (const auto& n : normals) {
    if (n.order() == 1) continue;
    bool minimal = true;
    for (const auto& m : normals) {
      if (m.order() == 1 || m.order() >= n.order()) continue;
      if (is_subgroup(n, m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

PermGroup socle(const PermGroup& g, const Caps& caps) {
  PermGroup s = PermGroup::trivial(g.degree());
  for (const auto& n : minimal_normal_subgroups(g, caps)) s = subgroup_join(s, n);
  return s;
}

namespace {

PermGroup p_core_from_normals(const PermGroup& g, std::uint64_t p,
                              const std::vector<PermGroup>& normals) {
  PermGroup core = PermGroup::trivial(g.degree());
  for (const auto& n : normals) {
    std::uint64_t q = 0;
    if (n.order() == 1) continue;
    if (is_prime_power(n.order(), q) && q == p) core = subgroup_join(core, n);
  }
  return core;
}

}  // namespace

PermGroup p_core(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  if (p < 2 || prime_divisors(p).size() != 1 || prime_divisors(p)[0] != p)
    throw GroupError("p_core: p must be prime");
  return p_core_from_normals(g, p, normal_subgroups(g, caps));
}

PermGroup fitting_subgroup(const PermGroup& g, const Caps& caps) {
  std::vector<PermGroup> normals = normal_subgroups(g, caps);
  PermGroup fit = PermGroup::trivial(g.degree());
  for (std::uint64_t p : prime_divisors(g.order()))
    fit = subgroup_join(fit, p_core_from_normals(g, p, normals));
  // The Fitting subgroup is nilpotent; verify through the lower central
  // series, which is independent of the p-core route above.
  PermGroup gamma = fit;
  for (;;) {
    PermGroup next = commutator_subgroup(gamma, fit);
    if (next.order() == gamma.order())
      break;
    gamma = std::move(next);
  }
  if (!gamma.is_trivial())
    throw InternalCheckError("fitting_subgroup: computed subgroup is not nilpotent");
  return fit;
}

bool is_nilpotent(const PermGroup& g, const Caps& caps) {
  return fitting_subgroup(g, caps).order() == g.order();
}

bool is_soluble(const PermGroup& g) {
  PermGroup d = g;
  for (;;) {
    PermGroup next = derived_subgroup(d);
    if (next.order() == d.order()) return d.is_trivial();
    d = std::move(next);
  }
}

bool is_perfect(const PermGroup& g) { return derived_subgroup(g).order() == g.order(); }

bool is_simple(const PermGroup& g, const Caps& caps) {
  if (g.order() == 1) return false;
  return normal_subgroups(g, caps).size() == 2;
}

bool is_quasisimple(const PermGroup& g, const Caps& caps) {
  if (g.order() == 1 || !is_perfect(g)) return false;
  QuotientMap q = QuotientMap::build(g, center(g, caps), caps);
  return is_simple(q.target(), caps);
}

std::vector<PermGroup> subnormal_subgroups(const PermGroup& g, const Caps& caps) {
  GroupList seen;
  std::vector<const PermGroup*> stack;
  seen.add(g);
  for (std::size_t head = 0; head < seen.groups.size(); ++head) {
    // seen.groups only grows; indices stay valid.
    std::vector<PermGroup> normals = normal_subgroups(seen.groups[head], caps);
    for (auto& n : normals) {
      if (n.order() == seen.groups[head].order()) continue;
      seen.add(std::move(n));
    }
  }
  ElementIndex idx(g, caps);
  sort_canonically(seen.groups, idx);
  return seen.groups;
}

std::vector<PermGroup> components(const PermGroup& g, const Caps& caps) {
  std::vector<PermGroup> out;
  for (const auto& h : subnormal_subgroups(g, caps)) {
    if (h.order() < 60) continue;  // no perfect group below A5
    if (is_quasisimple(h, caps)) out.push_back(h);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (const auto& a : out[i].generators())
        for (const auto& b : out[j].generators())
          if (!(a * b == b * a))
            throw InternalCheckError("components: two distinct components fail to commute");
    }
  }
  return out;
}

PermGroup layer(const PermGroup& g, const Caps& caps) {
  PermGroup lay = PermGroup::trivial(g.degree());
  for (const auto& c : components(g, caps)) lay = subgroup_join(lay, c);
  return lay;
}

PermGroup generalized_fitting(const PermGroup& g, const Caps& caps) {
  return subgroup_join(fitting_subgroup(g, caps), layer(g, caps));
}

GFSeries f_star_series(const PermGroup& g, const Caps& caps) {
  GFSeries series;
  series.terms.push_back(PermGroup::trivial(g.degree()));
  while (series.terms.back().order() < g.order()) {
    QuotientMap q = QuotientMap::build(g, series.terms.back(), caps);
    PermGroup fq = generalized_fitting(q.target(), caps);
    PermGroup next = q.preimage_subgroup(fq);
    if (next.order() <= series.terms.back().order())
      throw InternalCheckError("f_star_series: series failed to ascend");
    series.terms.push_back(std::move(next));
  }
  return series;
}

PermGroup f_prime(const PermGroup& g, const Caps& caps) {
  QuotientMap q = QuotientMap::build(g, frattini_subgroup(g, caps), caps);
  PermGroup pre = q.preimage_subgroup(socle(q.target(), caps));
  if (!is_subgroup(pre, fitting_subgroup(g, caps)))
    throw InternalCheckError("f_prime: does not contain the Fitting subgroup");
  return pre;
}

// ---- chief series ----

namespace {

std::vector<PermGroup> chief_terms(const PermGroup& g, const Caps& caps,
                                   const PermGroup* bottom) {
  std::vector<PermGroup> terms{PermGroup::trivial(g.degree())};
  if (g.order() == 1) return terms;
  PermGroup n1 = bottom ? *bottom : minimal_normal_subgroups(g, caps)[0];
  QuotientMap q = QuotientMap::build(g, n1, caps);
  std::vector<PermGroup> upper = chief_terms(q.target(), caps, nullptr);
  for (std::size_t i = 0; i < upper.size(); ++i) terms.push_back(q.preimage_subgroup(upper[i]));
  return terms;
}

ChiefSeries annotate_chief_series(const PermGroup& g, std::vector<PermGroup> terms,
                                  const Caps& caps) {
  ChiefSeries cs{g, std::move(terms), {}};
  for (std::size_t i = 0; i + 1 < cs.terms.size(); ++i) {
    const PermGroup& lo = cs.terms[i];
    const PermGroup& hi = cs.terms[i + 1];
    ChiefFactorInfo info{lo, hi, hi.order() / lo.order(), true, std::nullopt, std::nullopt, ""};
    for (const auto& a : hi.generators()) {
      for (const auto& b : hi.generators()) {
        if (!lo.contains(commutator(a, b))) {
          info.is_abelian = false;
          break;
        }
      }
      if (!info.is_abelian) break;
    }
    try {
      QuotientMap q = QuotientMap::build(g, lo, caps);
      PermGroup phi = frattini_subgroup(q.target(), caps);
      bool inside = true;
      for (const auto& k : hi.generators())
        if (!phi.contains(q.image(k))) {
          inside = false;
          break;
        }
      info.is_frattini = inside;
    } catch (const CapExceededError& e) {
      info.annotation_error = e.what();
    }
    if (g.order() <= caps.enumeration_cap) {
      std::vector<Permutation> cgens;
      PermGroup cur = PermGroup::trivial(g.degree());
      g.for_each_element([&](const Permutation& e) {
        for (const auto& k : hi.generators())
          if (!lo.contains(commutator(e, k))) return true;
        if (!cur.contains(e)) {
          cgens.push_back(e);
          cur = PermGroup(g.degree(), cgens);
        }
        return true;
      });
      info.centralizer = std::move(cur);
    } else if (info.annotation_error.empty()) {
      info.annotation_error = "centralizer: order exceeds enumeration cap";
    }
    cs.factors.push_back(std::move(info));
  }
  std::uint64_t prod = 1;
  for (const auto& f : cs.factors) prod *= f.factor_order;
  if (prod != g.order())
    throw InternalCheckError("chief_series: factor orders do not multiply to the group order");
  return cs;
}

}  // namespace

ChiefSeries chief_series(const PermGroup& g, const Caps& caps) {
  return annotate_chief_series(g, chief_terms(g, caps, nullptr), caps);
}

ChiefSeries chief_series_with_bottom(const PermGroup& g, const PermGroup& bottom,
                                     const Caps& caps) {
  return annotate_chief_series(g, chief_terms(g, caps, &bottom), caps);
}

// ---- complements ----

std::optional<PermGroup> find_complement(const PermGroup& g, const PermGroup& n,
                                         const Caps& caps) {
  if (!is_subgroup(g, n) || !is_normal(g, n))
    throw GroupError("find_complement: subgroup is not normal");
  std::uint64_t m = g.order() / n.order();
  if (m == 1) return PermGroup::trivial(g.degree());
  if (n.order() == 1) return g;
  if (m > caps.complement_cap)
    throw CapExceededError("find_complement: index " + std::to_string(m) +
                           " exceeds complement cap");
  ElementIndex idx(g, caps);

  // Only elements of order dividing m whose cyclic group misses n can lie in
  // a complement.
  std::vector<int> candidates;
  for (int i = 0; i < idx.size(); ++i) {
    const Permutation& e = idx.elems[i];
    if (e.is_identity()) continue;
    if (m % e.element_order() != 0) continue;
    bool meets_n = false;
    Permutation pow = e;
    while (!pow.is_identity()) {
      if (n.contains(pow)) {
        meets_n = true;
        break;
      }
      pow = pow * e;
    }
    if (!meets_n) candidates.push_back(i);
  }

  int max_gens = static_cast<int>(std::ceil(std::log2(static_cast<double>(m))));
  struct Node {
    std::vector<Permutation> gens;
    Bitset members;
    int depth;
  };
  std::unordered_set<Bitset, BitsetHash> visited;
  std::deque<Node> queue;
  Bitset trivial_set = idx.empty_set();
  bit_set(trivial_set, idx.pos.at(Permutation(g.degree())));
  visited.insert(trivial_set);
  queue.push_back({{}, trivial_set, 0});

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    if (node.depth >= max_gens) continue;
    for (int c : candidates) {
      if (bit_test(node.members, c)) continue;
      std::vector<Permutation> gens = node.gens;
      gens.push_back(idx.elems[c]);
      PermGroup k(g.degree(), gens);
      if (m % k.order() != 0) continue;  // cannot sit inside a complement
      Bitset members = idx.empty_set();
      bool meets_n = false;
      k.for_each_element([&](const Permutation& e) {
        bit_set(members, idx.pos.at(e));
        if (!e.is_identity() && n.contains(e)) meets_n = true;
        return !meets_n;
      });
      if (meets_n) continue;
      if (k.order() == m) return k;
      if (visited.insert(members).second)
        queue.push_back({std::move(gens), std::move(members), node.depth + 1});
    }
  }
  return std::nullopt;
}

}  // namespace frattini
