// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <iostream>

#include "eulerbound/acceptance.hpp"

int main() {
  using namespace eulerbound::acceptance;
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_all();
  bool all = true;
  for (const auto& r : results) {
    std::cout << format_line(r) << "\n";
    all = all && r.passed;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILURES") << " (" << secs << " s)\n";
  return all ? 0 : 1;
}
