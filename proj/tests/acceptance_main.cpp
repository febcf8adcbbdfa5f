// Runs the reproduction checks and prints one line per criterion.
//   monolab_acceptance [--only 1,3,primescan] [--fixtures path] [--nightly]

#include "monolab/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

int main(int argc, char** argv) {
  monolab::acceptance::Options opt;
  opt.fixture_path = MONOLAB_FIXTURE_PATH;
  const char* nightly = std::getenv("MONOLAB_NIGHTLY");
  opt.nightly = nightly && std::string(nightly) == "1";
  opt.solver.memory_budget = monolab::memory_budget_from_env();
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string item; std::getline(ss, item, ',');) opt.only.insert(item);
    } else if (a == "--fixtures" && i + 1 < argc) {
      opt.fixture_path = argv[++i];
    } else if (a == "--nightly") {
      opt.nightly = true;
    } else {
      std::cerr << "usage: " << argv[0] << " [--only ids] [--fixtures path] [--nightly]\n";
      return 1;
    }
  }
  const auto results = monolab::acceptance::run(opt);
  for (const auto& r : results) std::cout << monolab::acceptance::format_line(r) << "\n";
  int passed = 0;
  for (const auto& r : results) passed += r.pass;
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return monolab::acceptance::exit_code(results);
}
