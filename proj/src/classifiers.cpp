#include "frattini/classifiers.hpp"

#include <algorithm>

namespace frattini {

bool is_phi_free(const PermGroup& g, const Caps& caps) {
  return frattini_subgroup(g, caps).is_trivial();
}

bool is_b_group_via_quotients(const PermGroup& g, const Caps& caps) {
  for (const auto& n : normal_subgroups(g, caps)) {
    QuotientMap q = QuotientMap::build(g, n, caps);
    if (!is_phi_free(q.target(), caps)) return false;
  }
  return true;
}

bool is_b_group_via_chief_series(const PermGroup& g, const Caps& caps) {
  if (g.order() == 1) return true;
  for (const auto& bottom : minimal_normal_subgroups(g, caps)) {
    ChiefSeries cs = chief_series_with_bottom(g, bottom, caps);
    for (const auto& f : cs.factors) {
      if (!f.is_frattini.has_value())
        throw CapExceededError("is_b_group: " + f.annotation_error);
      if (*f.is_frattini) return false;
    }
  }
  return true;
}

bool is_b_group(const PermGroup& g, const Caps& caps) {
  bool via_quotients = is_b_group_via_quotients(g, caps);
  bool via_series = is_b_group_via_chief_series(g, caps);
  if (via_quotients != via_series)
    throw InternalCheckError("is_b_group: quotient route and chief-series route disagree");
  return via_quotients;
}

PermGroup b_residual(const PermGroup& g, const Caps& caps) {
  PermGroup residual = g;
  for (const auto& n : normal_subgroups(g, caps)) {
    QuotientMap q = QuotientMap::build(g, n, caps);
    if (is_b_group(q.target(), caps)) residual = intersection(residual, n, caps);
  }
  QuotientMap check = QuotientMap::build(g, residual, caps);
  if (!is_b_group(check.target(), caps))
    throw InternalCheckError(
        "b_residual: the quotient by the intersection is not in the class; "
        "intersection closure failed");
  return residual;
}

namespace {

bool good_normal_inner(const PermGroup& g, const PermGroup& n, const Caps& caps) {
  QuotientMap q = QuotientMap::build(g, n, caps);
  PermGroup lhs = frattini_subgroup(q.target(), caps);
  PermGroup rhs = q.image_subgroup(subgroup_join(frattini_subgroup(g, caps), n));
  return same_group(lhs, rhs);
}

std::string describe_subgroup(const PermGroup& h) {
  std::string out = "order " + std::to_string(h.order()) + ", gens";
  if (h.generators().empty()) out += " ()";
  for (const auto& g : h.generators()) out += " " + g.cycle_string();
  return out;
}

// A Frattini chief factor of h, described, if one exists in any
// bottom-variant chief series.
std::optional<std::string> find_frattini_factor(const PermGroup& h, const Caps& caps) {
  if (h.order() == 1) return std::nullopt;
  for (const auto& bottom : minimal_normal_subgroups(h, caps)) {
    ChiefSeries cs = chief_series_with_bottom(h, bottom, caps);
    for (const auto& f : cs.factors) {
      if (!f.is_frattini.has_value()) throw CapExceededError(f.annotation_error);
      if (*f.is_frattini)
        return "chief factor of order " + std::to_string(f.factor_order) + " above a term of order " +
               std::to_string(f.lower.order());
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_f_group(const PermGroup& g, const Caps& caps) {
  for (const auto& n : normal_subgroups(g, caps))
    if (!good_normal_inner(g, n, caps)) return false;
  return true;
}

DoerkReport doerk_report(const PermGroup& g, const Caps& caps) {
  DoerkReport report;

  report.conditions[0] = true;
  for (const auto& n : normal_subgroups(g, caps)) {
    if (!good_normal_inner(g, n, caps)) {
      report.conditions[0] = false;
      report.witnesses[0] = "N ⊴ G with Φ(G/N) ≠ Φ(G)N/N: " + describe_subgroup(n);
      break;
    }
  }

  auto quotient_condition = [&](std::size_t i, const PermGroup& kernel, const std::string& label) {
    QuotientMap q = QuotientMap::build(g, kernel, caps);
    std::optional<std::string> factor = find_frattini_factor(q.target(), caps);
    report.conditions[i] = !factor.has_value();
    if (factor) report.witnesses[i] = label + " has a Frattini chief factor: " + *factor;
  };
  quotient_condition(1, frattini_subgroup(g, caps), "G/Φ(G)");
  quotient_condition(2, fitting_subgroup(g, caps), "G/F(G)");
  quotient_condition(3, f_prime(g, caps), "G/F'(G)");

  report.conditions[4] = true;
  ChiefSeries cs = chief_series(g, caps);
  for (const auto& f : cs.factors) {
    if (!f.centralizer.has_value()) throw CapExceededError(f.annotation_error);
    QuotientMap q = QuotientMap::build(g, *f.centralizer, caps);
    std::optional<std::string> factor = find_frattini_factor(q.target(), caps);
    if (factor) {
      report.conditions[4] = false;
      report.witnesses[4] = "G/C_G(K/L) for the factor of order " +
                            std::to_string(f.factor_order) + " over a term of order " +
                            std::to_string(f.lower.order()) +
                            " has a Frattini chief factor: " + *factor;
      break;
    }
  }
  return report;
}

std::optional<PermGroup> nc_witness(const PermGroup& g, const Caps& caps) {
  for (const auto& n : normal_subgroups(g, caps))
    if (!find_complement(g, n, caps)) return n;
  return std::nullopt;
}

bool is_nc_group(const PermGroup& g, const Caps& caps) {
  return !nc_witness(g, caps).has_value();
}

bool splits_over_gf_series(const PermGroup& g, const Caps& caps) {
  for (const auto& term : f_star_series(g, caps).terms)
    if (!find_complement(g, term, caps)) return false;
  return true;
}

bool is_good_normal(const PermGroup& g, const PermGroup& n, const Caps& caps) {
  if (!is_subgroup(g, n) || !is_normal(g, n))
    throw GroupError("is_good_normal: subgroup is not normal");
  return good_normal_inner(g, n, caps);
}

std::vector<PermGroup> s_series(const PermGroup& g, const Caps& caps) {
  std::vector<PermGroup> terms{PermGroup::trivial(g.degree())};
  while (terms.back().order() < g.order()) {
    QuotientMap q = QuotientMap::build(g, terms.back(), caps);
    PermGroup soc_z = socle(center(q.target(), caps), caps);
    PermGroup next = q.preimage_subgroup(soc_z);
    if (next.order() == terms.back().order()) break;  // stationary short of G
    terms.push_back(std::move(next));
  }
  return terms;
}

SubgroupCertificate certificate(const PermGroup& g) {
  SubgroupCertificate cert;
  cert.order = g.order();
  for (const auto& x : g.generators())
    if (!x.is_identity()) cert.generators.push_back(x.cycle_string());
  return cert;
}

ClassReport class_report(const PermGroup& g, const std::string& name, const Caps& caps) {
  ClassReport r;
  r.name = name;
  r.degree = g.degree();
  r.order = g.order();
  r.phi_free = is_phi_free(g, caps);
  r.in_b = is_b_group(g, caps);
  r.in_f = is_f_group(g, caps);
  r.in_nc = is_nc_group(g, caps);

  if (r.in_nc && !r.in_b)
    throw InternalCheckError("class_report: an NC-group must be a B-group");
  if (r.in_b && !r.phi_free)
    throw InternalCheckError("class_report: a B-group must be Phi-free");
  if (r.in_f && r.phi_free && !r.in_b)
    throw InternalCheckError("class_report: a Phi-free F-group must be a B-group");

  r.frattini = certificate(frattini_subgroup(g, caps));
  r.fitting = certificate(fitting_subgroup(g, caps));
  r.socle = certificate(socle(g, caps));
  r.layer = certificate(layer(g, caps));
  r.f_star = certificate(generalized_fitting(g, caps));
  r.f_prime = certificate(f_prime(g, caps));
  r.b_residual = certificate(b_residual(g, caps));
  for (const auto& t : f_star_series(g, caps).terms) r.f_star_series_orders.push_back(t.order());
  for (const auto& t : s_series(g, caps)) r.s_series_orders.push_back(t.order());

  for (const auto& n : normal_subgroups(g, caps)) {
    SubgroupCertificate cert = certificate(n);
    cert.good = good_normal_inner(g, n, caps);
    (cert.good ? r.good_normals : r.bad_normals).push_back(std::move(cert));
  }
  return r;
}

}  // namespace frattini
