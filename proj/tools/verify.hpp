#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mattis/parallel.hpp"

namespace mattis {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

using CriterionFn = CriterionResult (*)(std::ostream& log, Exec exec);

struct Criterion {
  int id;
  const char* name;
  CriterionFn run;
};

const std::vector<Criterion>& acceptance_criteria();

// Runs the selected criteria (all when ids is empty); one PASS/FAIL line per criterion goes to out,
// diagnostics to log.
std::vector<CriterionResult> run_acceptance(std::ostream& out, std::ostream& log, const std::vector<int>& ids = {},
                                            Exec exec = Exec::parallel);

}  // namespace mattis
