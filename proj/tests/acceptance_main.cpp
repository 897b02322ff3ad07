#include <iostream>

#include "verify.hpp"

int main() {
  auto results = mattis::run_acceptance(std::cout, std::cerr);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
