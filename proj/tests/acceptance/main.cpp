// One line per acceptance criterion; exit status 1 if any fails.
#include <iostream>
#include <stdexcept>
#include <string>

#include "ordalg/cli/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace ordalg::cli;
  Selector selector = Selector::All;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    try {
      if (arg == "--criterion" && i + 1 < argc) {
        only = std::stoi(argv[++i]);
      } else {
        selector = selector_from_string(arg);
      }
    } catch (const std::exception& e) {
      std::cerr << "usage: ordalg_acceptance [all|fast] [--criterion N]: " << e.what() << "\n";
      return 2;
    }
  }
  std::vector<CriterionResult> results;
  if (only != 0) {
    results.push_back(run_criterion(only));
  } else {
    results = run_acceptance(selector);
  }
  int failed = 0;
  for (const auto& r : results) {
    std::cout << format_line(r) << std::endl;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
