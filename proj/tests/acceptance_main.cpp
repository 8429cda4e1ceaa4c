#include <iostream>

#include "bqf/acceptance.hpp"

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  bool ok = true;
  for (const auto& r : bqf::acceptance::run(filter, std::cout)) ok = ok && r.passed;
  return ok ? 0 : 1;
}
