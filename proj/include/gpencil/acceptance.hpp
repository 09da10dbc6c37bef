#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gpencil {

struct AcceptanceOptions {
  /// Upper end of the probabilistic conjecture scan (criterion 8).
  std::size_t scan_limit = 1000;
  std::size_t jobs = 1;
  std::uint64_t seed = 20250601;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every acceptance criterion in order. `on_result`, when set, is called
/// as each criterion finishes.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result_line(const CriterionResult& r);

}  // namespace gpencil
