#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "citerank/ranking.hpp"

namespace citerank {

// Jaccard similarity of the two top-k sets. Throws DomainError unless both
// vectors cover the same universe and 1 <= k <= n.
double topk_overlap(const ScoreVector& a, const ScoreVector& b, std::size_t k);

// Kendall tau-b between paired observations, O(n log n). NaN when either
// side is constant (tau-b undefined).
double kendall_tau_b(std::span<const double> x, std::span<const double> y);

// tau-b between a and b restricted to the top-k entities of a. Ties are
// detected on the raw scores of both vectors. Throws DomainError for k < 2.
double topk_kendall(const ScoreVector& a, const ScoreVector& b, std::size_t k);

struct RankChangeRow {
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::int64_t delta = 0;  // rank_a - rank_b; negative means the entity lost positions in b
  std::uint32_t entity = 0;

  bool operator==(const RankChangeRow&) const = default;
};

// One row per entity in the top-k of a, in a's order.
std::vector<RankChangeRow> rank_change_table(const ScoreVector& a, const ScoreVector& b,
                                             std::size_t k);

// ASCII change marker: "-3v", "+3^" or "=".
std::string render_delta(std::int64_t delta);

struct TieSummary {
  std::size_t distinct_scores = 0;
  std::size_t tied_entities = 0;  // entities sharing their score with another
  std::uint64_t tied_pairs = 0;
  std::size_t first_tied_rank = 0;  // 1-based; 0 when no ties

  nlohmann::ordered_json to_json() const;
};

TieSummary tie_summary(const ScoreVector& v);

struct CurvePoint {
  std::size_t k = 0;
  double overlap = 0.0;
  double kendall = 0.0;  // NaN for k < 2 or a constant side
};

struct RankingComparison {
  std::vector<CurvePoint> curve;
  double full_tau = 0.0;
  std::vector<RankChangeRow> rows;  // all entities, in a's order
  TieSummary ties_a;
  TieSummary ties_b;
};

// {10, 20, 50, 100, 250, 500, 1000, 2500, 5000, 12500, n} clipped to n.
std::vector<std::size_t> default_k_grid(std::size_t n);

// Values above n become n; zeros are dropped; result sorted and unique.
std::vector<std::size_t> clip_k_grid(std::span<const std::size_t> grid, std::size_t n);

RankingComparison comparison_curves(const ScoreVector& a, const ScoreVector& b,
                                    std::span<const std::size_t> grid);

// `k,overlap,kendall`
void write_curves_csv(std::ostream& out, const RankingComparison& cmp);

// `rank_pr<TAB>rank_prc<TAB>delta<TAB>journal`
void write_rank_change_tsv(std::ostream& out, std::span<const RankChangeRow> rows,
                           std::span<const std::string> names);

}  // namespace citerank
