#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "frattini/corpus.hpp"

namespace frattini {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string check_name;
  std::string group_name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // the violating object on failure, the reason on skip
  std::chrono::duration<double> elapsed{};

  bool passed() const { return status == CheckStatus::Pass; }
};

// Registered check names, in execution order.
std::vector<std::string> check_names();

// Runs the selected checks (empty = all) over the corpus, group-major, in
// deterministic order. Cap overruns inside a check yield Skip, not Fail.
std::vector<CheckResult> run_corpus(const std::vector<NamedGroup>& corpus,
                                    const std::vector<std::string>& checks = {},
                                    const Caps& caps = {});

// Stable text report (no timings) plus a summary line.
std::string render_results(const std::vector<CheckResult>& results);

struct Summary {
  int passed = 0, failed = 0, skipped = 0;
};
Summary summarize(const std::vector<CheckResult>& results);

}  // namespace frattini
