#include "oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <set>

namespace citerank::testing {

std::vector<double> dense_journal_pagerank(const JournalGraph& jg, double damping) {
  const auto n = static_cast<Eigen::Index>(jg.journal_count());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    double out = 0.0;
    for (Eigen::Index b = 0; b < n; ++b) {
      out += static_cast<double>(jg.weight(JournalId{static_cast<std::uint32_t>(a)},
                                           JournalId{static_cast<std::uint32_t>(b)}));
    }
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto w = jg.weight(JournalId{static_cast<std::uint32_t>(a)},
                               JournalId{static_cast<std::uint32_t>(b)});
      m(b, a) = out == 0.0 ? 1.0 / static_cast<double>(n) : static_cast<double>(w) / out;
    }
  }
  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - damping * m;
  const Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, (1.0 - damping) / static_cast<double>(n));
  const Eigen::VectorXd x = lhs.fullPivLu().solve(rhs);
  return {x.data(), x.data() + n};
}

std::vector<double> dense_path_pagerank(const CorpusInputs& corpus, double damping) {
  const auto n = static_cast<Eigen::Index>(corpus.records.size());
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& e : corpus.edges) {
    if (e.citing != e.cited) edges.emplace(e.citing.value, e.cited.value);
  }
  std::vector<std::uint32_t> journal(static_cast<std::size_t>(n));
  std::map<std::uint32_t, double> size;
  for (const auto& r : corpus.records) {
    journal[r.id.value] = r.journal.value;
    size[r.journal.value] += 1.0;
  }
  const double journals = static_cast<double>(size.size());
  Eigen::VectorXd v(n);
  for (Eigen::Index p = 0; p < n; ++p) v(p) = 1.0 / (journals * size[journal[static_cast<std::size_t>(p)]]);

  std::vector<double> out_degree(static_cast<std::size_t>(n), 0.0);
  for (const auto& [a, b] : edges) out_degree[a] += 1.0;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [a, b] : edges) m(b, a) += 1.0 / out_degree[a];
  for (Eigen::Index q = 0; q < n; ++q) {
    if (out_degree[static_cast<std::size_t>(q)] == 0.0) m.col(q) = v;
  }
  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - damping * m;
  const Eigen::VectorXd x = lhs.fullPivLu().solve((1.0 - damping) * v);
  return {x.data(), x.data() + n};
}

u128 enumerate_observed_2paths(const std::vector<CitationEdge>& raw) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> unique;
  for (const auto& e : raw) {
    if (e.citing != e.cited) unique.emplace(e.citing.value, e.cited.value);
  }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(unique.begin(), unique.end());
  u128 count = 0;
  for (const auto& first : edges) {
    for (const auto& second : edges) {
      if (first.second == second.first) ++count;
    }
  }
  return count;
}

u128 enumerate_implied_2paths(
    const std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>& w) {
  u128 count = 0;
  for (const auto& [first, w1] : w) {
    for (const auto& [second, w2] : w) {
      if (first.second == second.first) count += static_cast<u128>(w1) * w2;
    }
  }
  return count;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> tabulate_projection(
    const CorpusInputs& corpus) {
  std::vector<std::uint32_t> journal(corpus.records.size());
  for (const auto& r : corpus.records) journal[r.id.value] = r.journal.value;
  std::set<std::pair<std::uint32_t, std::uint32_t>> unique;
  for (const auto& e : corpus.edges) {
    if (e.citing != e.cited) unique.emplace(e.citing.value, e.cited.value);
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> w;
  for (const auto& [a, b] : unique) ++w[{journal[a], journal[b]}];
  return w;
}

double naive_kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  long double concordant = 0, discordant = 0, ties_x_only = 0, ties_y_only = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0 && dy == 0) continue;
      if (dx == 0) {
        ties_x_only += 1;
      } else if (dy == 0) {
        ties_y_only += 1;
      } else if ((dx > 0) == (dy > 0)) {
        concordant += 1;
      } else {
        discordant += 1;
      }
    }
  }
  const long double denom = std::sqrt((concordant + discordant + ties_x_only) *
                                      (concordant + discordant + ties_y_only));
  if (denom == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>((concordant - discordant) / denom);
}

}  // namespace citerank::testing
