#include "citerank/walk_simulation.hpp"

#include <cmath>
#include <random>

#include "citerank/errors.hpp"

namespace citerank {

WalkEstimate simulate_journal_walk(const PaperGraph& g, const WalkSimulationConfig& cfg) {
  const auto n = g.paper_count();
  const auto jn = g.journal_count();
  if (n == 0) throw DomainError("cannot simulate a walk on an empty graph");
  if (cfg.batches < 2 || cfg.steps < cfg.batches) {
    throw ConfigError("walk simulation needs at least 2 batches and one step per batch");
  }
  for (std::uint32_t j = 0; j < jn; ++j) {
    if (g.journal_size(JournalId{j}) == 0) {
      throw ConfigError("journal '" + g.journal_name(JournalId{j}) + "' has no papers");
    }
  }

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> pick_journal(0, static_cast<std::uint32_t>(jn - 1));
  std::uniform_int_distribution<std::uint32_t> pick_paper(0, static_cast<std::uint32_t>(n - 1));

  auto teleport = [&]() {
    const JournalId j{pick_journal(rng)};
    const auto members = g.papers_in(j);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    return members[pick(rng)];
  };
  auto step = [&](std::uint32_t p) -> std::uint32_t {
    if (coin(rng) < cfg.damping) {
      const auto out = g.cited_by(PaperId{p});
      if (!out.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
        return out[pick(rng)];
      }
      if (cfg.dangling == DanglingPolicy::uniform) return pick_paper(rng);
    }
    return teleport();
  };

  std::uint32_t state = teleport();
  for (std::uint64_t i = 0; i < cfg.burn_in; ++i) state = step(state);

  const std::uint64_t per_batch = cfg.steps / cfg.batches;
  std::vector<std::vector<std::uint64_t>> visits(cfg.batches, std::vector<std::uint64_t>(jn, 0));
  for (std::uint64_t b = 0; b < cfg.batches; ++b) {
    auto& counts = visits[b];
    for (std::uint64_t i = 0; i < per_batch; ++i) {
      state = step(state);
      ++counts[g.journal(PaperId{state}).value];
    }
  }

  WalkEstimate est;
  est.steps = per_batch * cfg.batches;
  est.mean.assign(jn, 0.0);
  est.standard_error.assign(jn, 0.0);
  const auto batches = static_cast<double>(cfg.batches);
  for (std::size_t j = 0; j < jn; ++j) {
    double sum = 0.0;
    for (const auto& counts : visits) sum += static_cast<double>(counts[j]) / static_cast<double>(per_batch);
    const double mean = sum / batches;
    double ss = 0.0;
    for (const auto& counts : visits) {
      const double dev = static_cast<double>(counts[j]) / static_cast<double>(per_batch) - mean;
      ss += dev * dev;
    }
    est.mean[j] = mean;
    est.standard_error[j] = std::sqrt(ss / (batches - 1.0) / batches);
  }
  return est;
}

}  // namespace citerank
