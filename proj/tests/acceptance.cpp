#include <cstdlib>
#include <iostream>

#include "loopfact/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611;
  bool all = true;
  for (const auto& r : loopfact::run_suite("all", seed)) {
    std::cout << loopfact::format_result(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
