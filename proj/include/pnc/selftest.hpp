#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pnc/engine.hpp"

namespace pnc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0; // 0 = no stated limit
};

/// Run the acceptance criteria (all of them when ids is empty). Each result
/// carries its wall-clock time; a criterion with a stated runtime limit
/// fails when it exceeds it.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {},
                                            std::uint64_t seed = kDefaultSeed);

std::string format_result_line(const CriterionResult& r);

/// Catalog survey: analyze every catalog entry at the given bound and
/// render one block per entry, in catalog order. Entries are processed by a
/// small worker pool; the output is byte-stable for fixed flags.
std::string run_survey(std::size_t bound, bool as_json, double budget_seconds = 300.0);

} // namespace pnc
