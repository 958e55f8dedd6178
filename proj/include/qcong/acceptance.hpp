#pragma once

#include <string>
#include <vector>

#include "qcong/report.hpp"

namespace qcong {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;  // recorded outcomes, including non-gating ones
  std::vector<VerificationReport> reports;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 12;

// Runs one acceptance criterion (1..12) at its full size.
CriterionResult run_criterion(int number);

// Runs the selected criteria (all when empty), in ascending order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& selection = {});

nlohmann::ordered_json to_json(const CriterionResult& r);

}  // namespace qcong
