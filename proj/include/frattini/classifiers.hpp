#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "frattini/structure.hpp"

namespace frattini {

// The five equivalent conditions of the generalized Doerk characterization,
// evaluated independently. They must agree on every group; the type allows
// disagreement so that a defect would be observable.
struct DoerkReport {
  std::array<bool, 5> conditions{};
  std::array<std::string, 5> witnesses{};  // filled for false conditions

  bool all_true() const {
    for (bool c : conditions)
      if (!c) return false;
    return true;
  }
  bool all_equal() const {
    for (bool c : conditions)
      if (c != conditions[0]) return false;
    return true;
  }
};

struct SubgroupCertificate {
  std::uint64_t order = 1;
  std::vector<std::string> generators;  // cycle notation
  bool good = false;                    // used by the normal-subgroup lists
};

struct ClassReport {
  std::string name;
  int degree = 1;
  std::uint64_t order = 1;
  bool phi_free = false, in_b = false, in_f = false, in_nc = false;
  SubgroupCertificate frattini, fitting, socle, layer, f_star, f_prime, b_residual;
  std::vector<std::uint64_t> f_star_series_orders;
  std::vector<std::uint64_t> s_series_orders;
  std::vector<SubgroupCertificate> good_normals;
  std::vector<SubgroupCertificate> bad_normals;
};

bool is_phi_free(const PermGroup& g, const Caps& caps = {});

// Route (a): Phi(G/N) = 1 for every normal N.
bool is_b_group_via_quotients(const PermGroup& g, const Caps& caps = {});
// Route (b): no Frattini factor in any chief series obtained by varying the
// bottom minimal normal subgroup.
bool is_b_group_via_chief_series(const PermGroup& g, const Caps& caps = {});
// Computes both routes and insists they agree.
bool is_b_group(const PermGroup& g, const Caps& caps = {});

// Smallest normal subgroup with quotient in the class; the quotient by the
// result is re-verified to lie in the class.
PermGroup b_residual(const PermGroup& g, const Caps& caps = {});

// Phi(G/N) = Phi(G)N/N for every normal N.
bool is_f_group(const PermGroup& g, const Caps& caps = {});
DoerkReport doerk_report(const PermGroup& g, const Caps& caps = {});

// Every normal subgroup has a complement.
bool is_nc_group(const PermGroup& g, const Caps& caps = {});
// The first normal subgroup (in canonical order) without a complement.
std::optional<PermGroup> nc_witness(const PermGroup& g, const Caps& caps = {});

// G splits over every term of its generalised Fitting series.
bool splits_over_gf_series(const PermGroup& g, const Caps& caps = {});

bool is_good_normal(const PermGroup& g, const PermGroup& n, const Caps& caps = {});

// 1 = S_0 <= S_1 <= ... with S_{i+1}/S_i = Soc(Z(G/S_i)), stopped when
// stationary or when the whole group is reached.
std::vector<PermGroup> s_series(const PermGroup& g, const Caps& caps = {});

SubgroupCertificate certificate(const PermGroup& g);
ClassReport class_report(const PermGroup& g, const std::string& name, const Caps& caps = {});

}  // namespace frattini
