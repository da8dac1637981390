// Runs the acceptance criteria and prints one line per criterion.
//   efimov_acceptance_check            all criteria
//   efimov_acceptance_check 3 ulam     a subset, by id or key

#include "acceptance.hpp"

#include <iostream>
#include <stdexcept>

int main(int argc, char** argv) {
  std::vector<std::string> only(argv + 1, argv + argc);
  try {
    bool ok = true;
    for (const auto& r : efimov::acceptance::run(only)) {
      std::cout << efimov::acceptance::format_line(r) << std::endl;
      ok = ok && r.passed;
    }
    return ok ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
