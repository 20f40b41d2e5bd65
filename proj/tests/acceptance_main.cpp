// Runs the acceptance criteria and prints one line per criterion.
// Usage: acceptance [criterion-id ...]

#include "gaussrom/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  gaussrom::AcceptanceOptions options;
  bool all_passed = true;
  auto report = [&](const gaussrom::CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    all_passed = all_passed && r.passed;
  };
  try {
    if (argc > 1) {
      for (int i = 1; i < argc; ++i) report(gaussrom::run_criterion(std::stoi(argv[i]), options));
    } else {
      gaussrom::run_acceptance(options, report);
    }
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
  std::cout << (all_passed ? "acceptance: all criteria passed" : "acceptance: FAILED") << '\n';
  return all_passed ? EXIT_SUCCESS : EXIT_FAILURE;
}
