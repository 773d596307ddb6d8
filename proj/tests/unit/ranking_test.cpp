#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "citerank/errors.hpp"
#include "citerank/parallel.hpp"
#include "citerank/ranking.hpp"
#include "citerank/walk_simulation.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace citerank {
namespace {

using kernels::Backend;

double total(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TEST(JournalPageRank, SingleJournal) {
  JournalGraph jg({0, 0}, {}, {}, {"A"});
  const auto r = pagerank_journal(transition_matrix(jg));
  EXPECT_DOUBLE_EQ(r.scores[0], 1.0);
}

TEST(JournalPageRank, SymmetricPair) {
  JournalGraph jg({0, 1, 2}, {1, 0}, {1, 1}, {"A", "B"});
  const auto r = pagerank_journal(transition_matrix(jg));
  EXPECT_NEAR(r.scores[0], 0.5, 1e-15);
  EXPECT_NEAR(r.scores[1], 0.5, 1e-15);
}

TEST(JournalPageRank, ChainClosedForm) {
  // Chain A -> B -> C with C dangling at d = 1/2: a = 4/17, b = 6/17, c = 7/17.
  const auto r = pagerank_journal(transition_matrix(project(testing::chain())));
  EXPECT_NEAR(r.scores[0], 4.0 / 17, 1e-12);
  EXPECT_NEAR(r.scores[1], 6.0 / 17, 1e-12);
  EXPECT_NEAR(r.scores[2], 7.0 / 17, 1e-12);
}

TEST(JournalPageRank, MatchesDenseSolve) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto jg = testing::random_journal_graph(seed, 30, 0.15, 0.1);
    for (double d : {0.5, 0.85}) {
      const auto r = pagerank_journal(transition_matrix(jg), {.damping = d});
      const auto expected = testing::dense_journal_pagerank(jg, d);
      EXPECT_LE(max_abs_diff(r.scores.scores(), expected), 1e-9) << seed;
      EXPECT_NEAR(total(r.scores.scores()), 1.0, 1e-9);
      for (double s : r.scores.scores()) EXPECT_GE(s, 0.0);
    }
  }
}

TEST(JournalPageRank, SmallDampingIsUniform) {
  const auto jg = testing::random_journal_graph(4, 40, 0.2, 0.2);
  const auto r = pagerank_journal(transition_matrix(jg), {.damping = 1e-6});
  for (double s : r.scores.scores()) EXPECT_NEAR(s, 1.0 / 40, 1e-4);
}

TEST(JournalPageRank, BackendsAgree) {
  const auto jg = testing::random_journal_graph(9, 200, 0.05, 0.1);
  const auto t = transition_matrix(jg);
  const auto par = pagerank_journal(t, {}, Backend::parallel);
  const auto ser = pagerank_journal(t, {}, Backend::serial);
  EXPECT_LE(max_abs_diff(par.scores.scores(), ser.scores.scores()), 1e-14);
}

TEST(JournalPageRank, NonConvergenceReportsResidual) {
  const auto jg = testing::random_journal_graph(2, 30, 0.2, 0.1);
  try {
    pagerank_journal(transition_matrix(jg), {.tolerance = 1e-300, .max_iterations = 3});
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.iterations(), 3u);
    EXPECT_GT(e.residual(), 0.0);
  }
}

TEST(PageRankConfig, Validation) {
  EXPECT_THROW(PageRankConfig{.damping = 0.0}.validate(), ConfigError);
  EXPECT_THROW(PageRankConfig{.damping = 1.0}.validate(), ConfigError);
  EXPECT_THROW(PageRankConfig{.tolerance = 0.0}.validate(), ConfigError);
  EXPECT_THROW(PageRankConfig{.max_iterations = 0}.validate(), ConfigError);
  EXPECT_NO_THROW(PageRankConfig{}.validate());
  EXPECT_EQ(parse_dangling_policy("uniform"), DanglingPolicy::uniform);
  EXPECT_THROW(parse_dangling_policy("x"), ConfigError);
}

TEST(ScoreVector, OrderAndTies) {
  ScoreVector v(EntityKind::journal, {0.2, 0.4, 0.2, 0.2});
  EXPECT_EQ(std::vector<std::uint32_t>(v.order().begin(), v.order().end()),
            (std::vector<std::uint32_t>{1, 0, 2, 3}));
  EXPECT_EQ(v.rank_of(1), 1u);
  EXPECT_EQ(v.rank_of(3), 4u);
  EXPECT_EQ(v.top(2).size(), 2u);
  EXPECT_THROW(ScoreVector(EntityKind::journal, {0.5, -0.1}), DomainError);
  EXPECT_THROW(ScoreVector(EntityKind::journal, {NAN}), DomainError);
}

TEST(PathPageRank, SplitChainChangesScores) {
  const auto a = pagerank_paths(testing::chain());
  const auto b = pagerank_paths(testing::broken_chain());
  EXPECT_NE(a.journals[2], b.journals[2]);
  // Hand-solved at d = 1/2: chain A 1/4, B 3/8, C 3/8; broken chain A 4/15, B 2/5, C 1/3.
  EXPECT_NEAR(a.journals[0], 0.25, 1e-12);
  EXPECT_NEAR(a.journals[1], 0.375, 1e-12);
  EXPECT_NEAR(a.journals[2], 0.375, 1e-12);
  EXPECT_NEAR(b.journals[0], 4.0 / 15, 1e-12);
  EXPECT_NEAR(b.journals[1], 0.4, 1e-12);
  EXPECT_NEAR(b.journals[2], 1.0 / 3, 1e-12);
}

TEST(PathPageRank, NoCitationsGivesTeleport) {
  auto c = testing::random_corpus(6, 300, 11, 0);
  const auto g = c.build();
  const auto r = pagerank_paths(g);
  for (std::uint32_t p = 0; p < g.paper_count(); ++p) {
    const double expected = 1.0 / 11 / static_cast<double>(g.journal_size(g.journal(PaperId{p})));
    EXPECT_NEAR(r.papers[p], expected, 1e-15);
  }
  for (std::uint32_t j = 0; j < 11; ++j) EXPECT_NEAR(r.journals[j], 1.0 / 11, 1e-14);
}

TEST(PathPageRank, MatchesDenseSolve) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = testing::random_corpus(seed, 40, 1 + seed % 6, 90);
    const auto r = pagerank_paths(c.build());
    const auto expected = testing::dense_path_pagerank(c, 0.5);
    EXPECT_LE(max_abs_diff(r.papers.scores(), expected), 1e-9) << seed;
    EXPECT_NEAR(total(r.papers.scores()), 1.0, 1e-12);
    EXPECT_NEAR(total(r.journals.scores()), 1.0, 1e-12);
  }
}

TEST(PathPageRank, SmallDampingGivesUniformJournals) {
  const auto g = testing::random_corpus(8, 2000, 25, 12000).build();
  const auto r = pagerank_paths(g, {.damping = 1e-6});
  for (double s : r.journals.scores()) EXPECT_NEAR(s, 1.0 / 25, 1e-4);
}

TEST(PathPageRank, DeterministicAcrossThreadsAndBackends) {
  const auto g = testing::random_corpus(10, 30'000, 300, 200'000).build();
  set_thread_count(1);
  const auto one = pagerank_paths(g);
  set_thread_count(4);
  const auto four = pagerank_paths(g);
  set_thread_count(0);
  EXPECT_TRUE(one.papers == four.papers);
  EXPECT_TRUE(one.journals == four.journals);
  EXPECT_EQ(one.iterations, four.iterations);
  const auto serial = pagerank_paths(g, {}, Backend::serial);
  EXPECT_LE(max_abs_diff(serial.papers.scores(), one.papers.scores()), 1e-15);
}

TEST(PathPageRank, AgreesWithSimulatedWalk) {
  const auto g = testing::random_corpus(21, 200, 10, 900).build();
  const auto r = pagerank_paths(g);
  const auto est = simulate_journal_walk(g, {.steps = 10'000'000, .seed = 99});
  for (std::uint32_t j = 0; j < 10; ++j) {
    EXPECT_LE(std::abs(est.mean[j] - r.journals[j]), 3 * est.standard_error[j]) << j;
  }
}

TEST(Teleport, Distribution) {
  const auto g = testing::chain();
  const auto v = teleport_distribution(g);
  EXPECT_DOUBLE_EQ(v.probability[0], 1.0 / 3);  // p1 alone in C
  EXPECT_DOUBLE_EQ(v.probability[1], 1.0 / 6);  // p2 shares B
  EXPECT_NEAR(total(v.probability), 1.0, 1e-15);

  auto c = testing::chain_inputs();
  c.names.journals.push_back("D");
  EXPECT_THROW(teleport_distribution(c.build()), ConfigError);
}

TEST(Aggregation, UniformPaperScores) {
  // Journals with 1, 2 and 1 papers.
  const auto g = testing::chain();
  const auto j = aggregate_to_journals(ScoreVector(EntityKind::paper, {0.25, 0.25, 0.25, 0.25}), g);
  EXPECT_DOUBLE_EQ(j[0], 0.25);
  EXPECT_DOUBLE_EQ(j[1], 0.5);
  EXPECT_DOUBLE_EQ(j[2], 0.25);
  EXPECT_THROW(aggregate_to_journals(ScoreVector(EntityKind::paper, {1.0}), g), DomainError);
}

TEST(Aggregation, SingleJournalAndMassConservation) {
  auto c = testing::random_corpus(1, 100, 1, 300);
  const auto single = pagerank_paths(c.build());
  EXPECT_NEAR(single.journals[0], 1.0, 1e-15);

  const auto g = testing::random_corpus(2, 5000, 60, 0).build();
  std::vector<double> s(g.paper_count());
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& x : s) x = u(rng);
  const auto j = aggregate_to_journals(ScoreVector(EntityKind::paper, s), g);
  EXPECT_NEAR(total(j.scores()), total(s), 1e-10);
}

TEST(CitationCounts, Examples) {
  const auto r = citation_count_baseline(project(testing::chain()));
  EXPECT_DOUBLE_EQ(r[0], 0.0);
  EXPECT_DOUBLE_EQ(r[1], 0.5);
  EXPECT_DOUBLE_EQ(r[2], 0.5);

  JournalGraph self({0, 1}, {0}, {5}, {"A"});
  EXPECT_DOUBLE_EQ(citation_count_baseline(self)[0], 1.0);

  JournalGraph none({0, 0, 0}, {}, {}, {"A", "B"});
  EXPECT_THROW(citation_count_baseline(none), DegenerateInputError);

  const auto jg = testing::random_journal_graph(5, 40, 0.2, 0.1);
  const auto c = citation_count_baseline(jg);
  for (std::size_t j = 0; j < 40; ++j) {
    EXPECT_NEAR(c[j], static_cast<double>(jg.in_weights()[j]) / jg.total_weight(), 1e-15);
  }
}

}  // namespace
}  // namespace citerank
