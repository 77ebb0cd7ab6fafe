#include <cstdlib>
#include <iostream>
#include <string>

#include "ssf/acceptance.hpp"

// One line per criterion; nonzero exit if any fails.
int main(int argc, char** argv) {
  std::uint64_t seed = ssf::acceptance::kDefaultSeed;
  if (argc > 1) seed = std::stoull(argv[1]);
  bool ok = true;
  for (int id = 1; id <= ssf::acceptance::kCriteria; ++id) {
    const auto r = ssf::acceptance::run_criterion(id, seed);
    std::cout << ssf::acceptance::format_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
