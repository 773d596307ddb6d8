#include "citerank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "citerank/errors.hpp"

namespace citerank {

std::string_view to_string(DanglingPolicy policy) {
  return policy == DanglingPolicy::teleport ? "teleport" : "uniform";
}

DanglingPolicy parse_dangling_policy(std::string_view text) {
  if (text == "teleport") return DanglingPolicy::teleport;
  if (text == "uniform") return DanglingPolicy::uniform;
  throw ConfigError("unknown dangling policy '" + std::string(text) +
                    "' (expected teleport or uniform)");
}

void PageRankConfig::validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw ConfigError("damping must lie in (0, 1), got " + std::to_string(damping));
  }
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (max_iterations < 1) throw ConfigError("max iterations must be at least 1");
}

ScoreVector::ScoreVector(EntityKind kind, std::vector<double> scores)
    : kind_(kind), scores_(std::move(scores)), order_(scores_.size()), rank_(scores_.size()) {
  for (double s : scores_) {
    if (!std::isfinite(s) || s < 0.0) throw DomainError("scores must be finite and non-negative");
  }
  std::iota(order_.begin(), order_.end(), 0U);
  std::sort(order_.begin(), order_.end(), [this](std::uint32_t a, std::uint32_t b) {
    if (scores_[a] != scores_[b]) return scores_[a] > scores_[b];
    return a < b;
  });
  for (std::size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = r + 1;
}

std::span<const std::uint32_t> ScoreVector::top(std::size_t k) const {
  return std::span<const std::uint32_t>(order_).first(std::min(k, order_.size()));
}

TeleportDistribution teleport_distribution(const PaperGraph& g) {
  const auto jn = g.journal_count();
  TeleportDistribution v;
  v.probability.assign(g.paper_count(), 0.0);
  for (std::uint32_t j = 0; j < jn; ++j) {
    const auto members = g.papers_in(JournalId{j});
    if (members.empty()) {
      throw ConfigError("journal '" + g.journal_name(JournalId{j}) + "' has no papers");
    }
    const double mass = 1.0 / static_cast<double>(jn) / static_cast<double>(members.size());
    for (auto p : members) v.probability[p] = mass;
  }
  return v;
}

namespace {

struct Ops {
  kernels::Backend backend;

  double sum(std::span<const double> x) const {
    return backend == kernels::Backend::parallel ? kernels::parallel::sum(x)
                                                 : kernels::reference::sum(x);
  }
  double l1(std::span<const double> a, std::span<const double> b) const {
    return backend == kernels::Backend::parallel ? kernels::parallel::l1_distance(a, b)
                                                 : kernels::reference::l1_distance(a, b);
  }
  double masked(std::span<const double> x, std::span<const std::uint8_t> m) const {
    return backend == kernels::Backend::parallel ? kernels::parallel::masked_sum(x, m)
                                                 : kernels::reference::masked_sum(x, m);
  }
};

void normalize(std::vector<double>& x, const Ops& ops) {
  const double total = ops.sum(x);
  for (auto& v : x) v /= total;
}

// Shared driver: `step` maps the current iterate to the next one.
template <typename Step>
std::pair<std::size_t, double> iterate(std::vector<double>& x, const PageRankConfig& cfg,
                                       const Ops& ops, Step&& step, const char* what) {
  std::vector<double> next(x.size());
  double residual = 0.0;
  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    step(x, next);
    residual = ops.l1(x, next);
    x.swap(next);
    if (residual < cfg.tolerance) return {it, residual};
  }
  throw ConvergenceError(std::string(what) + " did not converge within " +
                             std::to_string(cfg.max_iterations) +
                             " iterations (residual " + std::to_string(residual) + ")",
                         residual, cfg.max_iterations);
}

// Column-oriented copy of the transition matrix so each journal pulls from
// the journals that point to it.
struct Transposed {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> sources;
  std::vector<double> weights;
};

Transposed transpose(const TransitionMatrix& t) {
  const auto n = t.size();
  Transposed tr;
  tr.offsets.assign(n + 1, 0);
  for (auto target : t.targets()) ++tr.offsets[target + 1];
  for (std::size_t i = 0; i < n; ++i) tr.offsets[i + 1] += tr.offsets[i];
  tr.sources.resize(t.targets().size());
  tr.weights.resize(t.targets().size());
  std::vector<std::uint64_t> cursor(tr.offsets.begin(), tr.offsets.end() - 1);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (auto k = t.offsets()[a]; k < t.offsets()[a + 1]; ++k) {
      const auto slot = cursor[t.targets()[k]]++;
      tr.sources[slot] = a;
      tr.weights[slot] = t.probabilities()[k];
    }
  }
  return tr;
}

}  // namespace

JournalRankResult pagerank_journal(const TransitionMatrix& t, const PageRankConfig& cfg,
                                   kernels::Backend backend) {
  cfg.validate();
  const auto n = t.size();
  if (n == 0) throw DomainError("cannot rank an empty journal graph");
  const Ops ops{backend};
  const Transposed tr = transpose(t);
  const double d = cfg.damping;
  const double inv_n = 1.0 / static_cast<double>(n);

  std::vector<double> x(n, inv_n);
  auto step = [&](const std::vector<double>& cur, std::vector<double>& out) {
    const double dangling = ops.masked(cur, t.dangling());
    if (backend == kernels::Backend::parallel) {
      kernels::parallel::pull_weighted_sum(tr.offsets, tr.sources, tr.weights, cur, out);
    } else {
      kernels::reference::pull_weighted_sum(tr.offsets, tr.sources, tr.weights, cur, out);
    }
    // Both dangling policies are uniform at the journal level.
    const double base = ((1.0 - d) + d * dangling) * inv_n;
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (backend == kernels::Backend::parallel)
    for (std::int64_t j = 0; j < rows; ++j) out[j] = d * out[j] + base;
  };
  const auto [iterations, residual] = iterate(x, cfg, ops, step, "journal PageRank");
  normalize(x, ops);
  return {ScoreVector(EntityKind::journal, std::move(x)), iterations, residual};
}

PathRankResult pagerank_paths(const PaperGraph& g, const PageRankConfig& cfg,
                              kernels::Backend backend) {
  cfg.validate();
  const auto n = g.paper_count();
  if (n == 0) throw DomainError("cannot rank an empty paper graph");
  const Ops ops{backend};
  const double d = cfg.damping;

  const TeleportDistribution teleport = teleport_distribution(g);
  std::vector<double> restart_dangling;
  if (cfg.dangling == DanglingPolicy::uniform) {
    restart_dangling.assign(n, 1.0 / static_cast<double>(n));
  }
  const auto& dangling_target =
      cfg.dangling == DanglingPolicy::uniform ? restart_dangling : teleport.probability;

  std::vector<double> inv_out(n, 0.0);
  std::vector<std::uint8_t> is_dangling(n, 0);
  for (std::uint32_t p = 0; p < n; ++p) {
    const auto deg = g.out_degree(PaperId{p});
    if (deg == 0) {
      is_dangling[p] = 1;
    } else {
      inv_out[p] = 1.0 / static_cast<double>(deg);
    }
  }

  std::vector<double> x = teleport.probability;
  std::vector<double> share(n);
  auto step = [&](const std::vector<double>& cur, std::vector<double>& out) {
    const double dangling = ops.masked(cur, is_dangling);
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (backend == kernels::Backend::parallel)
    for (std::int64_t p = 0; p < rows; ++p) share[p] = cur[p] * inv_out[p];
    if (backend == kernels::Backend::parallel) {
      kernels::parallel::pull_sum(g.in_offsets(), g.in_sources(), share, out);
    } else {
      kernels::reference::pull_sum(g.in_offsets(), g.in_sources(), share, out);
    }
    const double restart = 1.0 - d;
    const double dangling_mass = d * dangling;
#pragma omp parallel for schedule(static) if (backend == kernels::Backend::parallel)
    for (std::int64_t p = 0; p < rows; ++p) {
      out[p] = d * out[p] + restart * teleport.probability[p] + dangling_mass * dangling_target[p];
    }
  };
  const auto [iterations, residual] = iterate(x, cfg, ops, step, "path PageRank");
  normalize(x, ops);

  ScoreVector papers(EntityKind::paper, std::move(x));
  ScoreVector journals = aggregate_to_journals(papers, g);
  return {std::move(papers), std::move(journals), iterations, residual};
}

ScoreVector aggregate_to_journals(const ScoreVector& paper_scores, const PaperGraph& g) {
  if (paper_scores.size() != g.paper_count()) {
    throw DomainError("paper score vector has " + std::to_string(paper_scores.size()) +
                      " entries for " + std::to_string(g.paper_count()) + " papers");
  }
  std::vector<double> journal(g.journal_count(), 0.0);
  kernels::parallel::grouped_sum(g.journal_offsets(), g.journal_members(), paper_scores.scores(),
                                 journal);
  return ScoreVector(EntityKind::journal, std::move(journal));
}

ScoreVector citation_count_baseline(const JournalGraph& jg) {
  const auto in = jg.in_weights();
  std::uint64_t total = 0;
  for (auto w : in) total += w;
  if (total == 0) throw DegenerateInputError("no journal receives any citation");
  std::vector<double> scores(in.size());
  const double denom = static_cast<double>(total);
  for (std::size_t j = 0; j < in.size(); ++j) scores[j] = static_cast<double>(in[j]) / denom;
  return ScoreVector(EntityKind::journal, std::move(scores));
}

}  // namespace citerank
