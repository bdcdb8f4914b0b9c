#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace superchar::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// SUPERCHAR_SEED if set, a fixed default otherwise.
std::uint64_t seed_from_env();

std::vector<int> criterion_ids();

/// Runs one criterion; exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// "PASS  3  base enumeration ...  (0.12 s)  detail"
std::string format_line(const CriterionResult& r);

}  // namespace superchar::acceptance
