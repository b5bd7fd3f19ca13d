// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <cstdio>

#include "f4/selftest.hpp"

int main() {
  auto results = f4::selftest::run_all();
  for (const auto& r : results) {
    std::printf("criterion %2d: %-62s %s (%.2fs)\n", r.number, r.title.c_str(),
                r.pass ? "PASS" : "FAIL", r.seconds);
    if (!r.pass) std::printf("              %s\n", r.detail.c_str());
  }
  bool ok = f4::selftest::all_passed(results);
  std::printf("%s\n", ok ? "all criteria passed" : "FAILURES PRESENT");
  return ok ? 0 : 1;
}
