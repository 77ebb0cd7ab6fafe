#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ssf::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail;  // first failing witness, or a short summary
  double seconds = 0.0;
};

inline constexpr int kCriteria = 11;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// "[PASS] 3 idempotent classification (412 checks, 0.8 s)"
std::string format_line(const CriterionResult& r);

}  // namespace ssf::acceptance
