#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frattini/verifier.hpp"

namespace py = pybind11;
using namespace frattini;

namespace {

std::vector<NamedGroup> to_corpus(const std::vector<std::pair<std::string, PermGroup>>& members) {
  std::vector<NamedGroup> corpus;
  for (const auto& [name, group] : members) corpus.push_back({name, group});
  return corpus;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Structural analysis of finite permutation groups: Frattini-type "
            "group classes, chief series, and normal-subgroup complements.";

  auto group_error = py::register_exception<GroupError>(m, "GroupError");
  py::register_exception<CapExceededError>(m, "CapExceededError", group_error);

  py::class_<Caps>(m, "Caps")
      .def(py::init<>())
      .def_readwrite("enumeration_cap", &Caps::enumeration_cap)
      .def_readwrite("lattice_cap", &Caps::lattice_cap)
      .def_readwrite("index_cap", &Caps::index_cap)
      .def_readwrite("complement_cap", &Caps::complement_cap);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](int degree, const std::string& cycles) {
             return Permutation::parse_cycles(degree, cycles);
           }),
           py::arg("degree"), py::arg("cycles") = "()")
      .def_static("from_images",
                  [](const std::vector<int>& images) {
                    return Permutation::from_one_based_images(images);
                  },
                  py::arg("one_based_images"))
      .def_property_readonly("degree", &Permutation::degree)
      .def("is_identity", &Permutation::is_identity)
      .def("order", &Permutation::element_order)
      .def("inverse", &Permutation::inverse)
      .def("cycles", &Permutation::cycle_string)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__",
           [](const Permutation& p) { return "Permutation(" + p.cycle_string() + ")"; });

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init<int, std::vector<Permutation>>(), py::arg("degree"), py::arg("generators"))
      .def(py::init([](int degree, const std::vector<std::string>& cycles) {
             std::vector<Permutation> gens;
             for (const auto& c : cycles) gens.push_back(Permutation::parse_cycles(degree, c));
             return PermGroup(degree, std::move(gens));
           }),
           py::arg("degree"), py::arg("generators"))
      .def_static("trivial", &PermGroup::trivial, py::arg("degree") = 1)
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("order", &PermGroup::order)
      .def("generators", &PermGroup::generators)
      .def("contains", &PermGroup::contains)
      .def("elements", [](const PermGroup& g, const Caps& caps) { return elements(g, caps); },
           py::arg("caps") = Caps{})
      .def("__repr__", [](const PermGroup& g) {
        return "PermGroup(degree=" + std::to_string(g.degree()) +
               ", order=" + std::to_string(g.order()) + ")";
      });

  py::class_<QuotientMap>(m, "QuotientMap")
      .def_property_readonly("source", &QuotientMap::source)
      .def_property_readonly("kernel", &QuotientMap::kernel)
      .def_property_readonly("target", &QuotientMap::target)
      .def("image", &QuotientMap::image)
      .def("image_subgroup", &QuotientMap::image_subgroup)
      .def("lift", &QuotientMap::lift)
      .def("preimage_subgroup", &QuotientMap::preimage_subgroup);

  // Group arithmetic.
  m.def("is_subgroup", &is_subgroup, py::arg("g"), py::arg("h"));
  m.def("same_group", &same_group);
  m.def("is_normal", &is_normal, py::arg("g"), py::arg("h"));
  m.def("normal_closure", &normal_closure);
  m.def("derived_subgroup", &derived_subgroup);
  m.def("center", &center, py::arg("g"), py::arg("caps") = Caps{});
  m.def("centralizer", &centralizer, py::arg("g"), py::arg("h"), py::arg("caps") = Caps{});
  m.def("intersection", &intersection, py::arg("a"), py::arg("b"), py::arg("caps") = Caps{});
  m.def("subgroup_join", &subgroup_join);
  m.def("direct_product", &direct_product);
  m.def("quotient", &QuotientMap::build, py::arg("source"), py::arg("kernel"),
        py::arg("caps") = Caps{});

  // Structure.
  m.def("all_subgroups", &all_subgroups, py::arg("g"), py::arg("caps") = Caps{});
  m.def("maximal_subgroups", &maximal_subgroups, py::arg("g"), py::arg("caps") = Caps{});
  m.def("frattini_subgroup", &frattini_subgroup, py::arg("g"), py::arg("caps") = Caps{});
  m.def("normal_subgroups", &normal_subgroups, py::arg("g"), py::arg("caps") = Caps{});
  m.def("minimal_normal_subgroups", &minimal_normal_subgroups, py::arg("g"),
        py::arg("caps") = Caps{});
  m.def("socle", &socle, py::arg("g"), py::arg("caps") = Caps{});
  m.def("p_core", &p_core, py::arg("g"), py::arg("p"), py::arg("caps") = Caps{});
  m.def("fitting_subgroup", &fitting_subgroup, py::arg("g"), py::arg("caps") = Caps{});
  m.def("is_nilpotent", &is_nilpotent, py::arg("g"), py::arg("caps") = Caps{});
  m.def("is_soluble", &is_soluble);
  m.def("is_perfect", &is_perfect);
  m.def("is_simple", &is_simple, py::arg("g"), py::arg("caps") = Caps{});
  m.def("is_quasisimple", &is_quasisimple, py::arg("g"), py::arg("caps") = Caps{});
  m.def("subnormal_subgroups", &subnormal_subgroups, py::arg("g"), py::arg("caps") = Caps{});
  m.def("components", &components, py::arg("g"), py::arg("caps") = Caps{});
  m.def("layer", &layer, py::arg("g"), py::arg("caps") = Caps{});
  m.def("generalized_fitting", &generalized_fitting, py::arg("g"), py::arg("caps") = Caps{});
  m.def("f_star_series",
        [](const PermGroup& g, const Caps& caps) { return f_star_series(g, caps).terms; },
        py::arg("g"), py::arg("caps") = Caps{});
  m.def("f_prime", &f_prime, py::arg("g"), py::arg("caps") = Caps{});
  m.def("find_complement", &find_complement, py::arg("g"), py::arg("n"), py::arg("caps") = Caps{});
  m.def("chief_factors",
        [](const PermGroup& g, const Caps& caps) {
          py::list out;
          for (const auto& f : chief_series(g, caps).factors) {
            py::dict d;
            d["order"] = f.factor_order;
            d["abelian"] = f.is_abelian;
            d["frattini"] = f.is_frattini ? py::cast(*f.is_frattini) : py::none();
            d["centralizer_order"] =
                f.centralizer ? py::cast(f.centralizer->order()) : py::none();
            out.append(d);
          }
          return out;
        },
        py::arg("g"), py::arg("caps") = Caps{});

  // Classes.
  m.def("is_phi_free", &is_phi_free, py::arg("g"), py::arg("caps") = Caps{});
  m.def("is_b_group", &is_b_group, py::arg("g"), py::arg("caps") = Caps{});
  m.def("is_f_group", &is_f_group, py::arg("g"), py::arg("caps") = Caps{});
  m.def("is_nc_group", &is_nc_group, py::arg("g"), py::arg("caps") = Caps{});
  m.def("nc_witness", &nc_witness, py::arg("g"), py::arg("caps") = Caps{});
  m.def("b_residual", &b_residual, py::arg("g"), py::arg("caps") = Caps{});
  m.def("splits_over_gf_series", &splits_over_gf_series, py::arg("g"), py::arg("caps") = Caps{});
  m.def("is_good_normal", &is_good_normal, py::arg("g"), py::arg("n"), py::arg("caps") = Caps{});
  m.def("s_series", &s_series, py::arg("g"), py::arg("caps") = Caps{});
  m.def("doerk_report",
        [](const PermGroup& g, const Caps& caps) {
          DoerkReport r = doerk_report(g, caps);
          py::dict d;
          d["conditions"] = r.conditions;
          d["witnesses"] = r.witnesses;
          d["all_equal"] = r.all_equal();
          return d;
        },
        py::arg("g"), py::arg("caps") = Caps{});

  py::class_<SubgroupCertificate>(m, "SubgroupCertificate")
      .def_readonly("order", &SubgroupCertificate::order)
      .def_readonly("generators", &SubgroupCertificate::generators)
      .def_readonly("good", &SubgroupCertificate::good);

  py::class_<ClassReport>(m, "ClassReport")
      .def_readonly("name", &ClassReport::name)
      .def_readonly("degree", &ClassReport::degree)
      .def_readonly("order", &ClassReport::order)
      .def_readonly("phi_free", &ClassReport::phi_free)
      .def_readonly("in_b", &ClassReport::in_b)
      .def_readonly("in_f", &ClassReport::in_f)
      .def_readonly("in_nc", &ClassReport::in_nc)
      .def_readonly("frattini", &ClassReport::frattini)
      .def_readonly("fitting", &ClassReport::fitting)
      .def_readonly("socle", &ClassReport::socle)
      .def_readonly("layer", &ClassReport::layer)
      .def_readonly("f_star", &ClassReport::f_star)
      .def_readonly("f_prime", &ClassReport::f_prime)
      .def_readonly("b_residual", &ClassReport::b_residual)
      .def_readonly("f_star_series_orders", &ClassReport::f_star_series_orders)
      .def_readonly("s_series_orders", &ClassReport::s_series_orders)
      .def_readonly("good_normals", &ClassReport::good_normals)
      .def_readonly("bad_normals", &ClassReport::bad_normals);

  m.def("class_report", &class_report, py::arg("g"), py::arg("name") = "group",
        py::arg("caps") = Caps{});
  m.def("save_report", &save_report);

  // Corpus.
  m.def("cyclic", &cyclic);
  m.def("elementary_abelian", &elementary_abelian);
  m.def("dihedral", &dihedral);
  m.def("symmetric", &symmetric);
  m.def("alternating", &alternating);
  m.def("frobenius20", &frobenius20);
  m.def("paper_example_100", [] {
    Example100 ex = paper_example_100();
    return py::make_tuple(ex.group, ex.m, ex.n);
  });
  m.def("aut_a6", &aut_a6);
  m.def("sl2_3", &sl2_3);
  m.def("default_corpus", [] {
    std::vector<std::pair<std::string, PermGroup>> out;
    for (const auto& member : default_corpus()) out.emplace_back(member.name, member.group);
    return out;
  });
  m.def("load_group",
        [](const std::string& text) { return build_group(parse_group_spec(text)); },
        py::arg("spec_text"));
  m.def("group_spec", [](const std::string& name, const PermGroup& g) {
    return serialize_group_spec(spec_of(name, g));
  });

  // Verifier.
  m.def("check_names", &check_names);
  m.def("run_checks",
        [](const std::vector<std::pair<std::string, PermGroup>>& corpus,
           const std::vector<std::string>& checks, const Caps& caps) {
          py::list out;
          for (const auto& r : run_corpus(to_corpus(corpus), checks, caps)) {
            py::dict d;
            d["check"] = r.check_name;
            d["group"] = r.group_name;
            d["status"] = status_name(r.status);
            d["witness"] = r.witness;
            out.append(d);
          }
          return out;
        },
        py::arg("corpus"), py::arg("checks") = std::vector<std::string>{},
        py::arg("caps") = Caps{});
  m.def("run_default_verification",
        [](const std::vector<std::string>& checks, const Caps& caps) {
          return render_results(run_corpus(default_corpus(), checks, caps));
        },
        py::arg("checks") = std::vector<std::string>{}, py::arg("caps") = Caps{});
}
