#include "citerank/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "citerank/errors.hpp"
#include "citerank/format.hpp"

namespace citerank {

namespace {

void require_shared_universe(const ScoreVector& a, const ScoreVector& b) {
  if (a.size() != b.size() || a.kind() != b.kind()) {
    throw DomainError("score vectors rank different entity universes (" +
                      std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
}

std::uint64_t pairs(std::uint64_t t) { return t * (t - 1) / 2; }

// Counts i < j with v[i] > v[j] while sorting v ascending.
std::uint64_t count_inversions(std::vector<double>& v) {
  std::vector<double> buffer(v.size());
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, v.size());
      const std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t i = lo, j = mid, out = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          inversions += mid - i;
          buffer[out++] = v[j++];
        } else {
          buffer[out++] = v[i++];
        }
      }
      while (i < mid) buffer[out++] = v[i++];
      while (j < hi) buffer[out++] = v[j++];
    }
    v.swap(buffer);
  }
  return inversions;
}

}  // namespace

double topk_overlap(const ScoreVector& a, const ScoreVector& b, std::size_t k) {
  require_shared_universe(a, b);
  if (k < 1 || k > a.size()) {
    throw DomainError("k = " + std::to_string(k) + " outside [1, " + std::to_string(a.size()) +
                      "]");
  }
  std::size_t shared = 0;
  for (auto id : a.top(k)) {
    if (b.rank_of(id) <= k) ++shared;
  }
  const std::size_t union_size = 2 * k - shared;
  return static_cast<double>(shared) / static_cast<double>(union_size);
}

double kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();

  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0U);
  std::sort(idx.begin(), idx.end(), [&](auto i, auto j) {
    if (x[i] != x[j]) return x[i] < x[j];
    return y[i] < y[j];
  });

  const std::uint64_t n0 = pairs(n);
  std::uint64_t ties_x = 0;
  std::uint64_t ties_xy = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && x[idx[j]] == x[idx[i]]) ++j;
    ties_x += pairs(j - i);
    for (std::size_t s = i; s < j;) {
      std::size_t t = s;
      while (t < j && y[idx[t]] == y[idx[s]]) ++t;
      ties_xy += pairs(t - s);
      s = t;
    }
    i = j;
  }

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];
  const std::uint64_t discordant = count_inversions(ys);  // ys is sorted afterwards

  std::uint64_t ties_y = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && ys[j] == ys[i]) ++j;
    ties_y += pairs(j - i);
    i = j;
  }

  const auto untied = static_cast<std::int64_t>(n0 - ties_x - ties_y + ties_xy);
  const auto numerator = untied - 2 * static_cast<std::int64_t>(discordant);
  // Equal factors are common (no ties at all) and must give tau exactly +-1.
  const std::uint64_t fx = n0 - ties_x;
  const std::uint64_t fy = n0 - ties_y;
  const double denom = fx == fy ? static_cast<double>(fx)
                                : std::sqrt(static_cast<double>(fx)) *
                                      std::sqrt(static_cast<double>(fy));
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(numerator) / denom;
}

double topk_kendall(const ScoreVector& a, const ScoreVector& b, std::size_t k) {
  require_shared_universe(a, b);
  if (k < 2) throw DomainError("Kendall tau needs at least 2 entities (k = " + std::to_string(k) + ")");
  if (k > a.size()) {
    throw DomainError("k = " + std::to_string(k) + " exceeds universe size " +
                      std::to_string(a.size()));
  }
  const auto top = a.top(k);
  std::vector<double> x(k), y(k);
  for (std::size_t i = 0; i < k; ++i) {
    x[i] = a[top[i]];
    y[i] = b[top[i]];
  }
  return kendall_tau_b(x, y);
}

std::vector<RankChangeRow> rank_change_table(const ScoreVector& a, const ScoreVector& b,
                                             std::size_t k) {
  require_shared_universe(a, b);
  std::vector<RankChangeRow> rows;
  for (auto id : a.top(k)) {
    RankChangeRow row;
    row.rank_a = a.rank_of(id);
    row.rank_b = b.rank_of(id);
    row.delta = static_cast<std::int64_t>(row.rank_a) - static_cast<std::int64_t>(row.rank_b);
    row.entity = id;
    rows.push_back(row);
  }
  return rows;
}

std::string render_delta(std::int64_t delta) {
  if (delta == 0) return "=";
  if (delta < 0) return std::to_string(delta) + "v";
  return "+" + std::to_string(delta) + "^";
}

TieSummary tie_summary(const ScoreVector& v) {
  TieSummary t;
  const auto order = v.order();
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && v[order[j]] == v[order[i]]) ++j;
    ++t.distinct_scores;
    const std::size_t group = j - i;
    if (group > 1) {
      t.tied_entities += group;
      t.tied_pairs += pairs(group);
      if (t.first_tied_rank == 0) t.first_tied_rank = i + 1;
    }
    i = j;
  }
  return t;
}

nlohmann::ordered_json TieSummary::to_json() const {
  return {{"distinct_scores", distinct_scores},
          {"tied_entities", tied_entities},
          {"tied_pairs", tied_pairs},
          {"first_tied_rank", first_tied_rank}};
}

std::vector<std::size_t> default_k_grid(std::size_t n) {
  static constexpr std::size_t kGrid[] = {10, 20, 50, 100, 250, 500, 1000, 2500, 5000, 12500};
  std::vector<std::size_t> grid(std::begin(kGrid), std::end(kGrid));
  grid.push_back(n);
  return clip_k_grid(grid, n);
}

std::vector<std::size_t> clip_k_grid(std::span<const std::size_t> grid, std::size_t n) {
  std::vector<std::size_t> out;
  for (auto k : grid) {
    if (k == 0) continue;
    out.push_back(std::min(k, n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RankingComparison comparison_curves(const ScoreVector& a, const ScoreVector& b,
                                    std::span<const std::size_t> grid) {
  require_shared_universe(a, b);
  RankingComparison cmp;
  const auto ks = clip_k_grid(grid, a.size());
  cmp.curve.resize(ks.size());
  const auto points = static_cast<std::int64_t>(ks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < points; ++i) {
    const auto k = ks[static_cast<std::size_t>(i)];
    auto& p = cmp.curve[static_cast<std::size_t>(i)];
    p.k = k;
    p.overlap = topk_overlap(a, b, k);
    p.kendall = k >= 2 ? topk_kendall(a, b, k) : std::numeric_limits<double>::quiet_NaN();
  }
  cmp.full_tau = kendall_tau_b(a.scores(), b.scores());
  cmp.rows = rank_change_table(a, b, a.size());
  cmp.ties_a = tie_summary(a);
  cmp.ties_b = tie_summary(b);
  return cmp;
}

void write_curves_csv(std::ostream& out, const RankingComparison& cmp) {
  out << "k,overlap,kendall\n";
  for (const auto& p : cmp.curve) {
    out << p.k << ',' << format_double(p.overlap) << ',' << format_double(p.kendall) << '\n';
  }
}

void write_rank_change_tsv(std::ostream& out, std::span<const RankChangeRow> rows,
                           std::span<const std::string> names) {
  out << "rank_pr\trank_prc\tdelta\tjournal\n";
  for (const auto& r : rows) {
    out << r.rank_a << '\t' << r.rank_b << '\t' << render_delta(r.delta) << '\t'
        << names[r.entity] << '\n';
  }
}

}  // namespace citerank
