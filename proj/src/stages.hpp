#pragma once

#include <optional>
#include <vector>

namespace qecost {

// Ordered cryostat stages: temperatures T_1..T_K (cold to hot), per-stage
// attenuations A_1..A_{K-1}, amplifier temperature, and an optional override
// for the hot-boundary temperature feeding the attenuation chain.
struct StageStack {
  std::vector<double> temperatures; // K, strictly increasing
  std::vector<double> attenuations; // linear ratios >= 1, size K-1
  double t_amp = 4.0;               // K
  std::optional<double> boundary_override; // K; defaults to T_K when absent
};

} // namespace qecost
