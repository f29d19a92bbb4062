#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace humbert {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

/// Parameter ranges for the verification sweep. Defaults match the
/// documented desk-scale guarantees.
struct AcceptanceConfig {
  int phi_m_max = 50;
  int sl2_m_max = 30;
  int corank1_samples = 200;
  int corank2_samples = 100;
  int y_pairs = 1000;
  int ideal_m_max = 20;
  int fiber_m_max = 12;
  int exponent_m_max = 10;
  int humbert_draws = 1000;
  std::uint64_t seed = 0;
};

/// Runs the whole verification sweep; one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {});

}  // namespace humbert
