#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "citerank/kernels.hpp"
#include "citerank/paper_graph.hpp"
#include "citerank/projection.hpp"

namespace citerank {

// Where the mass sitting on a node without out-links goes each step.
enum class DanglingPolicy {
  teleport,  // follow the teleport distribution of the walk
  uniform,   // spread uniformly over all nodes of the walk
};

std::string_view to_string(DanglingPolicy policy);
DanglingPolicy parse_dangling_policy(std::string_view text);

struct PageRankConfig {
  double damping = 0.5;
  double tolerance = 1e-12;  // L1 distance between successive iterates
  std::size_t max_iterations = 1000;
  DanglingPolicy dangling = DanglingPolicy::teleport;

  // Throws ConfigError unless 0 < damping < 1, tolerance > 0 and
  // max_iterations >= 1.
  void validate() const;
};

enum class EntityKind { journal, paper };

// Non-negative scores indexed by dense entity id, plus the ranking they
// induce: descending score, ties broken by ascending id.
class ScoreVector {
 public:
  ScoreVector() = default;
  ScoreVector(EntityKind kind, std::vector<double> scores);

  EntityKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return scores_.size(); }
  double operator[](std::size_t id) const { return scores_[id]; }
  std::span<const double> scores() const { return scores_; }

  // order()[r] is the id at 0-based position r.
  std::span<const std::uint32_t> order() const { return order_; }
  // 1-based rank of an id.
  std::size_t rank_of(std::size_t id) const { return rank_[id]; }
  std::span<const std::uint32_t> top(std::size_t k) const;

  bool operator==(const ScoreVector&) const = default;

 private:
  EntityKind kind_ = EntityKind::journal;
  std::vector<double> scores_;
  std::vector<std::uint32_t> order_;
  std::vector<std::size_t> rank_;
};

// Restart distribution of the path-respecting walk: a journal uniformly at
// random, then one of its papers uniformly at random.
struct TeleportDistribution {
  std::vector<double> probability;
};

// Throws ConfigError when a journal has no papers.
TeleportDistribution teleport_distribution(const PaperGraph& g);

struct JournalRankResult {
  ScoreVector scores;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Power iteration for PR = ((1-d)/n) E PR + d T PR with dangling mass spread
// uniformly. Throws ConvergenceError after max_iterations.
JournalRankResult pagerank_journal(const TransitionMatrix& t, const PageRankConfig& cfg = {},
                                   kernels::Backend backend = kernels::Backend::parallel);

struct PathRankResult {
  ScoreVector papers;
  ScoreVector journals;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Stationary distribution of the walk on the paper graph: with probability
// d follow a uniformly chosen citation of the current paper, otherwise (or
// from a paper that cites nothing) restart from the teleport distribution.
// Journal scores are the per-journal sums of paper scores.
PathRankResult pagerank_paths(const PaperGraph& g, const PageRankConfig& cfg = {},
                              kernels::Backend backend = kernels::Backend::parallel);

// Compensated per-journal sums of paper scores.
ScoreVector aggregate_to_journals(const ScoreVector& paper_scores, const PaperGraph& g);

// Weighted in-degree normalized to sum 1. Throws DegenerateInputError when
// no journal receives a citation.
ScoreVector citation_count_baseline(const JournalGraph& jg);

}  // namespace citerank
