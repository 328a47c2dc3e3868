#include "frattini/corpus.hpp"

#include <sstream>

namespace frattini {

// ---- group spec format ----

GroupSpec parse_group_spec(const std::string& text) {
  GroupSpec spec;
  bool saw_degree = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::size_t colon = line.find(':', start);
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineno);
    std::string key = line.substr(start, colon - start);
    std::size_t vstart = line.find_first_not_of(" \t", colon + 1);
    std::string value = vstart == std::string::npos ? "" : line.substr(vstart);
    while (!value.empty() && (value.back() == '\r' || value.back() == ' ' || value.back() == '\t'))
      value.pop_back();
    if (key == "name") {
      spec.name = value;
    } else if (key == "degree") {
      try {
        spec.degree = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError("invalid degree '" + value + "'", lineno);
      }
      if (spec.degree < 1) throw ParseError("degree must be at least 1", lineno);
      saw_degree = true;
    } else if (key == "gen") {
      spec.generators.push_back(value);
      spec.generator_lines.push_back(lineno);
    } else if (key == "order") {
      try {
        spec.expected_order = std::stoull(value);
      } catch (const std::exception&) {
        throw ParseError("invalid order '" + value + "'", lineno);
      }
      if (*spec.expected_order < 1) throw ParseError("order must be positive", lineno);
    } else {
      throw ParseError("unknown key '" + key + "'", lineno);
    }
  }
  if (!saw_degree) throw ParseError("missing 'degree:' line", lineno);
  return spec;
}

std::string serialize_group_spec(const GroupSpec& spec) {
  std::ostringstream out;
  if (!spec.name.empty()) out << "name: " << spec.name << "\n";
  out << "degree: " << spec.degree << "\n";
  for (const auto& g : spec.generators) out << "gen: " << g << "\n";
  if (spec.expected_order) out << "order: " << *spec.expected_order << "\n";
  return out.str();
}

PermGroup build_group(const GroupSpec& spec) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    try {
      gens.push_back(Permutation::parse_cycles(spec.degree, spec.generators[i]));
    } catch (const GroupError& e) {
      int line = i < spec.generator_lines.size() ? spec.generator_lines[i] : 0;
      throw ParseError(e.what(), line);
    }
  }
  PermGroup g(spec.degree, std::move(gens));
  if (spec.expected_order && g.order() != *spec.expected_order)
    throw GroupError("order checksum mismatch for '" + spec.name + "': constructed " +
                     std::to_string(g.order()) + ", expected " +
                     std::to_string(*spec.expected_order));
  return g;
}

GroupSpec spec_of(const std::string& name, const PermGroup& g) {
  GroupSpec spec;
  spec.name = name;
  spec.degree = g.degree();
  for (const auto& x : g.generators())
    if (!x.is_identity()) spec.generators.push_back(x.cycle_string());
  spec.expected_order = g.order();
  return spec;
}

// ---- named constructors ----

namespace {

Permutation cycle_on(int degree, int from, int len) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (int i = 0; i < len; ++i) img[from + i] = from + (i + 1) % len;
  return Permutation::from_images(std::move(img));
}

}  // namespace

PermGroup cyclic(int n) {
  if (n < 1) throw GroupError("cyclic: n must be at least 1");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {cycle_on(n, 0, n)});
}

PermGroup elementary_abelian(int p, int k) {
  if (p < 2 || prime_divisors(p) != std::vector<std::uint64_t>{static_cast<std::uint64_t>(p)})
    throw GroupError("elementary_abelian: p must be prime");
  if (k < 1) throw GroupError("elementary_abelian: k must be at least 1");
  int degree = p * k;
  std::vector<Permutation> gens;
  for (int i = 0; i < k; ++i) gens.push_back(cycle_on(degree, i * p, p));
  return PermGroup(degree, std::move(gens));
}

PermGroup dihedral(int n) {
  if (n < 1) throw GroupError("dihedral: n must be at least 1");
  if (n == 1) return PermGroup(2, {Permutation::from_one_based_images({2, 1})});
  if (n == 2)
    return PermGroup(4, {Permutation::parse_cycles(4, "(1 2)"), Permutation::parse_cycles(4, "(3 4)")});
  std::vector<int> reflection(n);
  for (int i = 0; i < n; ++i) reflection[i] = n - 1 - i;
  return PermGroup(n, {cycle_on(n, 0, n), Permutation::from_images(std::move(reflection))});
}

PermGroup symmetric(int n) {
  if (n < 1 || n > 8) throw GroupError("symmetric: degree must be between 1 and 8");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Permutation> gens{Permutation::parse_cycles(n, "(1 2)")};
  if (n > 2) gens.push_back(cycle_on(n, 0, n));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating(int n) {
  if (n < 1 || n > 8) throw GroupError("alternating: degree must be between 1 and 8");
  if (n <= 2) return PermGroup::trivial(n);
  std::vector<Permutation> gens;
  for (int i = 3; i <= n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{1, 2, i}}));
  return PermGroup(n, std::move(gens));
}

namespace {

// x -> m*x on the residues mod p, as a permutation of 0..p-1 embedded at
// `from` in a permutation of the given degree.
Permutation mod_scaling(int degree, int from, int p, int m) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (int x = 0; x < p; ++x) img[from + x] = from + (m * x) % p;
  return Permutation::from_images(std::move(img));
}

}  // namespace

PermGroup frobenius20() {
  return PermGroup(5, {cycle_on(5, 0, 5), mod_scaling(5, 0, 5, 2)});
}

Example100 paper_example_100() {
  Permutation m1 = cycle_on(10, 0, 5);
  Permutation m2 = cycle_on(10, 5, 5);
  Permutation c = mod_scaling(10, 0, 5, 2) * mod_scaling(10, 5, 5, 2);
  PermGroup g(10, {m1, m2, c});
  if (g.order() != 100) throw GroupError("paper_example_100: order checksum failed");
  return Example100{g, PermGroup(10, {m1}), PermGroup(10, {m2})};
}

PermGroup aut_a6() {
  // PGammaL(2,9) on the projective line over the 9-element field: a
  // translation, multiplication by a primitive element, inversion, and the
  // field automorphism. Written down once; validated below.
  PermGroup g(10, {
                      Permutation::from_one_based_images({4, 5, 6, 7, 8, 9, 1, 2, 3, 10}),
                      Permutation::from_one_based_images({1, 8, 6, 5, 3, 7, 9, 4, 2, 10}),
                      Permutation::from_one_based_images({10, 3, 2, 4, 8, 9, 7, 5, 6, 1}),
                      Permutation::from_one_based_images({1, 3, 2, 4, 6, 5, 7, 9, 8, 10}),
                  });
  if (g.order() != 1440) throw GroupError("aut_a6: order checksum failed");
  PermGroup derived = derived_subgroup(g);
  if (derived.order() != 360 || !is_simple(derived))
    throw GroupError("aut_a6: derived subgroup is not the expected simple group of order 360");
  return g;
}

PermGroup sl2_3() {
  PermGroup g(8, {
                     Permutation::from_one_based_images({4, 8, 3, 7, 2, 6, 1, 5}),
                     Permutation::from_one_based_images({6, 3, 1, 7, 4, 2, 8, 5}),
                 });
  if (g.order() != 24) throw GroupError("sl2_3: order checksum failed");
  return g;
}

std::vector<NamedGroup> default_corpus() {
  std::vector<NamedGroup> corpus;
  auto add = [&](const std::string& name, PermGroup g) {
    corpus.push_back({name, std::move(g)});
  };
  add("C1", cyclic(1));
  add("C2", cyclic(2));
  add("C3", cyclic(3));
  add("C4", cyclic(4));
  add("C5", cyclic(5));
  add("C6", cyclic(6));
  add("C8", cyclic(8));
  add("C9", cyclic(9));
  add("C12", cyclic(12));
  add("C30", cyclic(30));
  add("C100", cyclic(100));
  add("E4", elementary_abelian(2, 2));
  add("E8", elementary_abelian(2, 3));
  add("E16", elementary_abelian(2, 4));
  add("E9", elementary_abelian(3, 2));
  add("E25", elementary_abelian(5, 2));
  add("E49", elementary_abelian(7, 2));
  add("D6", dihedral(3));
  add("D8", dihedral(4));
  add("D10", dihedral(5));
  add("D12", dihedral(6));
  add("D16", dihedral(8));
  add("D20", dihedral(10));
  add("D24", dihedral(12));
  add("S3", symmetric(3));
  add("S4", symmetric(4));
  add("S5", symmetric(5));
  add("A4", alternating(4));
  add("A5", alternating(5));
  add("A6", alternating(6));
  add("SL23", sl2_3());
  add("F20", frobenius20());
  add("G100", paper_example_100().group);
  add("C2xC3", direct_product(cyclic(2), cyclic(3)));
  add("V4xC3", direct_product(elementary_abelian(2, 2), cyclic(3)));
  add("S3xS3", direct_product(symmetric(3), symmetric(3)));
  add("D8xC3", direct_product(dihedral(4), cyclic(3)));
  add("S4xC2", direct_product(symmetric(4), cyclic(2)));
  add("A5xC2", direct_product(alternating(5), cyclic(2)));
  add("AutA6", aut_a6());
  return corpus;
}

// ---- reports ----

namespace {

void write_certificate(std::ostringstream& out, const std::string& key,
                       const SubgroupCertificate& cert, const char* indent) {
  out << indent << key << ":\n";
  out << indent << "  order: " << cert.order << "\n";
  out << indent << "  gens:";
  for (const auto& g : cert.generators) out << " " << g;
  out << "\n";
}

}  // namespace

std::string save_report(const ClassReport& r) {
  std::ostringstream out;
  out << "group: " << r.name << "\n";
  out << "degree: " << r.degree << "\n";
  out << "order: " << r.order << "\n";
  out << "phi_free: " << (r.phi_free ? "true" : "false") << "\n";
  out << "in_B: " << (r.in_b ? "true" : "false") << "\n";
  out << "in_F: " << (r.in_f ? "true" : "false") << "\n";
  out << "in_NC: " << (r.in_nc ? "true" : "false") << "\n";
  write_certificate(out, "frattini", r.frattini, "");
  write_certificate(out, "fitting", r.fitting, "");
  write_certificate(out, "socle", r.socle, "");
  write_certificate(out, "layer", r.layer, "");
  write_certificate(out, "f_star", r.f_star, "");
  write_certificate(out, "f_prime", r.f_prime, "");
  write_certificate(out, "b_residual", r.b_residual, "");
  out << "f_star_series:";
  for (auto o : r.f_star_series_orders) out << " " << o;
  out << "\n";
  out << "s_series:";
  for (auto o : r.s_series_orders) out << " " << o;
  out << "\n";
  out << "good_normals: " << r.good_normals.size() << "\n";
  for (const auto& c : r.good_normals) write_certificate(out, "normal", c, "  ");
  out << "bad_normals: " << r.bad_normals.size() << "\n";
  for (const auto& c : r.bad_normals) write_certificate(out, "normal", c, "  ");
  return out.str();
}

}  // namespace frattini
