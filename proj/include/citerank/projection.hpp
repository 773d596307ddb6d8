#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citerank/ids.hpp"
#include "citerank/kernels.hpp"
#include "citerank/paper_graph.hpp"

namespace citerank {

struct ProjectionOptions {
  // Drop A -> A edges (intra-journal citations). Off by default; the flag
  // exists for sensitivity runs.
  bool exclude_self_loops = false;
};

// Weighted directed journal graph. w(A -> B) counts paper citations from
// papers in A to papers in B. Rows are sorted by target.
class JournalGraph {
 public:
  JournalGraph() = default;
  JournalGraph(std::vector<std::uint64_t> offsets, std::vector<std::uint32_t> targets,
               std::vector<std::uint64_t> weights, std::vector<std::string> names);

  std::size_t journal_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size(); }
  std::uint64_t total_weight() const noexcept { return total_weight_; }

  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const std::uint32_t> targets() const { return targets_; }
  std::span<const std::uint64_t> weights() const { return weights_; }
  std::span<const std::uint64_t> in_weights() const { return in_weight_; }
  std::span<const std::uint64_t> out_weights() const { return out_weight_; }
  std::span<const std::string> names() const { return names_; }

  // 0 when there is no edge.
  std::uint64_t weight(JournalId from, JournalId to) const;

  bool operator==(const JournalGraph&) const = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> in_weight_;
  std::vector<std::uint64_t> out_weight_;
  std::vector<std::string> names_;
  std::uint64_t total_weight_ = 0;
};

JournalGraph project(const PaperGraph& g, const ProjectionOptions& options = {},
                     kernels::Backend backend = kernels::Backend::parallel);

// `source<TAB>target<TAB>weight`, one line per edge, ordered by (source,
// target) id. Journal ids follow name order, so this is also name order.
void write_journal_graph_tsv(std::ostream& out, const JournalGraph& jg);

// Row-stochastic transition matrix. Rows with zero out-weight are flagged
// dangling and left empty.
class TransitionMatrix {
 public:
  std::size_t size() const noexcept { return dangling_.size(); }
  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const std::uint32_t> targets() const { return targets_; }
  std::span<const double> probabilities() const { return probabilities_; }
  std::span<const std::uint8_t> dangling() const { return dangling_; }
  bool is_dangling(JournalId j) const { return dangling_[j.value] != 0; }
  std::size_t dangling_count() const;

  // 0 when there is no edge.
  double probability(JournalId from, JournalId to) const;

 private:
  friend TransitionMatrix transition_matrix(const JournalGraph& jg);

  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<double> probabilities_;
  std::vector<std::uint8_t> dangling_;
};

TransitionMatrix transition_matrix(const JournalGraph& jg);

// Returns the journals of one directed cycle in walk order, or nullopt.
// Self-loops only count as cycles when include_self_loops is set.
std::optional<std::vector<JournalId>> find_cycle(const JournalGraph& jg,
                                                 bool include_self_loops = false);

}  // namespace citerank
