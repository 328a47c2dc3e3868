#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frattini/verifier.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw frattini::GroupError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw frattini::GroupError("cannot write file: " + out_path);
  out << text;
}

frattini::NamedGroup load_named_group(const std::string& path) {
  frattini::GroupSpec spec = frattini::parse_group_spec(slurp(path));
  std::string name = spec.name.empty() ? path : spec.name;
  return {name, frattini::build_group(spec)};
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frattini: structural analysis of finite permutation groups\n"
               "(Frattini-type group classes, chief series, complements)"};
  app.require_subcommand(1);

  frattini::Caps caps;
  app.add_option("--lattice-cap", caps.lattice_cap, "subgroup-lattice order cap");
  app.add_option("--enum-cap", caps.enumeration_cap, "element-enumeration order cap");
  app.add_option("--index-cap", caps.index_cap, "quotient index cap");
  app.add_option("--complement-cap", caps.complement_cap, "complement-search order cap");
  int verbosity = 0;
  app.add_flag("-v,--verbose", verbosity, "print per-check timing to stderr");

  auto* analyze = app.add_subcommand("analyze", "classify one group from a spec file");
  std::string analyze_file, analyze_out;
  analyze->add_option("spec-file", analyze_file, "group spec file")->required();
  analyze->add_option("--out", analyze_out, "write the report here instead of stdout");
  analyze->fallthrough();

  auto* verify = app.add_subcommand("verify", "replay the verification suites over a corpus");
  std::vector<std::string> verify_corpus{"default"};
  std::string verify_checks = "all", verify_out;
  verify->add_option("--corpus", verify_corpus, "'default' or group spec files");
  verify->add_option("--checks", verify_checks, "'all' or a comma-separated check list");
  verify->add_option("--out", verify_out, "write the stable report here");
  verify->fallthrough();

  auto* corpus_list = app.add_subcommand("corpus-list", "list the default corpus");
  corpus_list->fallthrough();

  auto* residual = app.add_subcommand("residual", "B-residual of a group");
  std::string residual_file;
  residual->add_option("spec-file", residual_file, "group spec file")->required();
  residual->fallthrough();

  auto* complement = app.add_subcommand("complement", "complement of a normal subgroup");
  std::string complement_file;
  std::vector<std::string> complement_gens;
  complement->add_option("spec-file", complement_file, "group spec file")->required();
  complement->add_option("--gen", complement_gens, "generator of the normal subgroup (cycles)")
      ->required();
  complement->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      frattini::NamedGroup member = load_named_group(analyze_file);
      frattini::ClassReport report =
          frattini::class_report(member.group, member.name, caps);
      write_output(frattini::save_report(report), analyze_out);
      return 0;
    }

    if (*verify) {
      std::vector<frattini::NamedGroup> corpus;
      if (verify_corpus.size() == 1 && verify_corpus[0] == "default")
        corpus = frattini::default_corpus();
      else
        for (const auto& path : verify_corpus) corpus.push_back(load_named_group(path));
      std::vector<std::string> checks;
      if (verify_checks != "all") checks = split_csv(verify_checks);
      std::vector<frattini::CheckResult> results = frattini::run_corpus(corpus, checks, caps);
      for (const auto& r : results) {
        std::cout << std::left << std::setw(14) << r.check_name << std::setw(10) << r.group_name;
        switch (r.status) {
          case frattini::CheckStatus::Pass: std::cout << "pass"; break;
          case frattini::CheckStatus::Fail: std::cout << "FAIL  " << r.witness; break;
          case frattini::CheckStatus::Skip: std::cout << "skip  " << r.witness; break;
        }
        std::cout << "\n";
        if (verbosity > 0)
          std::cerr << r.check_name << " " << r.group_name << " " << std::fixed
                    << std::setprecision(3) << r.elapsed.count() << "s\n";
      }
      frattini::Summary s = frattini::summarize(results);
      std::cout << "summary: pass " << s.passed << " fail " << s.failed << " skip " << s.skipped
                << "\n";
      if (!verify_out.empty()) write_output(frattini::render_results(results), verify_out);
      return s.failed == 0 ? 0 : 1;
    }

    if (*corpus_list) {
      for (const auto& member : frattini::default_corpus())
        std::cout << std::left << std::setw(10) << member.name << " degree " << std::setw(4)
                  << member.group.degree() << " order " << member.group.order() << "\n";
      return 0;
    }

    if (*residual) {
      frattini::NamedGroup member = load_named_group(residual_file);
      frattini::PermGroup t = frattini::b_residual(member.group, caps);
      std::cout << "order: " << t.order() << "\n";
      std::cout << "gens:";
      for (const auto& g : t.generators())
        if (!g.is_identity()) std::cout << " " << g.cycle_string();
      std::cout << "\n";
      return 0;
    }

    if (*complement) {
      frattini::NamedGroup member = load_named_group(complement_file);
      std::vector<frattini::Permutation> gens;
      for (const auto& text : complement_gens)
        gens.push_back(frattini::Permutation::parse_cycles(member.group.degree(), text));
      for (const auto& g : gens)
        if (!member.group.contains(g))
          throw frattini::GroupError("generator outside the group: " + g.cycle_string());
      frattini::PermGroup n(member.group.degree(), gens);
      if (!frattini::is_normal(member.group, n))
        throw frattini::GroupError("the given generators do not span a normal subgroup");
      auto c = frattini::find_complement(member.group, n, caps);
      if (!c) {
        std::cout << "none\n";
        return 0;
      }
      std::cout << "order: " << c->order() << "\n";
      std::cout << "gens:";
      for (const auto& g : c->generators())
        if (!g.is_identity()) std::cout << " " << g.cycle_string();
      std::cout << "\n";
      return 0;
    }
  } catch (const frattini::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const frattini::GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
