#pragma once

#include <cstdint>
#include <vector>

#include "citerank/paper_graph.hpp"
#include "citerank/ranking.hpp"

namespace citerank {

struct WalkSimulationConfig {
  double damping = 0.5;
  std::uint64_t steps = 10'000'000;
  std::uint64_t batches = 100;
  std::uint64_t burn_in = 1'000;
  std::uint64_t seed = 1;
  DanglingPolicy dangling = DanglingPolicy::teleport;
};

// Per-journal visit frequencies of one simulated walker, with batch-means
// standard errors.
struct WalkEstimate {
  std::vector<double> mean;
  std::vector<double> standard_error;
  std::uint64_t steps = 0;
};

// Simulates the path-respecting walker directly on the citation lists. Shares
// no code with the power iteration, so it serves as a check of it.
WalkEstimate simulate_journal_walk(const PaperGraph& g, const WalkSimulationConfig& cfg);

}  // namespace citerank
