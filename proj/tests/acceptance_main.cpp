// Acceptance suite runner: one pass/fail line per criterion.
//
//   pnc_acceptance            run everything
//   pnc_acceptance 3 7 12     run selected criteria
//   pnc_acceptance --seed N   override the sampling seed

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "pnc/selftest.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  std::uint64_t seed = pnc::kDefaultSeed;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
      continue;
    }
    ids.push_back(std::atoi(argv[i]));
  }
  auto results = pnc::run_acceptance(ids, seed);
  if (results.empty()) {
    std::cerr << "no matching criteria\n";
    return 1;
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << pnc::format_result_line(r) << std::endl;
    all = all && r.pass;
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present")
            << std::endl;
  return all ? 0 : 1;
}
