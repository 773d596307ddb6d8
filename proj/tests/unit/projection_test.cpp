#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "citerank/projection.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace citerank {
namespace {

using kernels::Backend;

std::string tsv(const JournalGraph& jg) {
  std::ostringstream out;
  write_journal_graph_tsv(out, jg);
  return out.str();
}

TEST(Projection, ChainCorporaProjectIdentically) {
  const auto a = project(testing::chain());
  const auto b = project(testing::broken_chain());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.weight(JournalId{0}, JournalId{1}), 1u);  // A -> B
  EXPECT_EQ(a.weight(JournalId{1}, JournalId{2}), 1u);  // B -> C
  EXPECT_EQ(a.edge_count(), 2u);
  EXPECT_EQ(tsv(a), tsv(b));
  EXPECT_EQ(tsv(a), "source_journal\ttarget_journal\tweight\nA\tB\t1\nB\tC\t1\n");
}

TEST(Projection, AcyclicPapersCyclicJournals) {
  const auto g = testing::hidden_cycle();
  EXPECT_TRUE(topological_order(g).has_value());
  const auto cycle = find_cycle(project(g));
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(cycle->size(), 4u);
  const auto jg = project(g);
  for (std::size_t i = 0; i < cycle->size(); ++i) {
    EXPECT_GT(jg.weight((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]), 0u);
  }
}

TEST(Projection, SelfLoopsAreNotCyclesByDefault) {
  JournalGraph jg({0, 1, 1}, {0}, {3}, {"A", "B"});
  EXPECT_FALSE(find_cycle(jg).has_value());
  EXPECT_TRUE(find_cycle(jg, true).has_value());
}

TEST(Projection, MatchesTabulation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto c = testing::random_corpus(seed, 80 + seed * 13, 2 + seed % 9, 400 + 17 * seed, 5);
    const auto g = c.build();
    const auto jg = project(g);
    const auto expected = testing::tabulate_projection(c);
    std::size_t edges = 0;
    std::uint64_t total = 0;
    for (const auto& [key, w] : expected) {
      EXPECT_EQ(jg.weight(JournalId{key.first}, JournalId{key.second}), w);
      ++edges;
      total += w;
    }
    EXPECT_EQ(jg.edge_count(), edges);
    // Conservation: every paper citation lands on exactly one journal edge.
    EXPECT_EQ(jg.total_weight(), g.edge_count());
    EXPECT_EQ(total, g.edge_count());
    EXPECT_EQ(project(g, {}, Backend::serial), jg);
  }
}

TEST(Projection, ExcludeSelfLoops) {
  const auto c = testing::random_corpus(3, 500, 4, 3000);
  const auto g = c.build();
  std::uint64_t intra = 0;
  for (std::uint32_t p = 0; p < g.paper_count(); ++p) {
    for (auto q : g.cited_by(PaperId{p})) intra += g.journal(PaperId{p}) == g.journal(PaperId{q});
  }
  ASSERT_GT(intra, 0u);
  const auto jg = project(g, {.exclude_self_loops = true});
  EXPECT_EQ(jg.total_weight(), g.edge_count() - intra);
  for (std::uint32_t j = 0; j < jg.journal_count(); ++j) {
    EXPECT_EQ(jg.weight(JournalId{j}, JournalId{j}), 0u);
  }
  EXPECT_EQ(project(g, {.exclude_self_loops = true}, Backend::serial), jg);
}

TEST(TransitionMatrix, RowProbabilitiesAndDangling) {
  // A -> B weight 3, A -> C weight 1, C dangling, B -> A weight 2.
  JournalGraph jg({0, 2, 3, 3}, {1, 2, 0}, {3, 1, 2}, {"A", "B", "C"});
  const auto t = transition_matrix(jg);
  EXPECT_DOUBLE_EQ(t.probability(JournalId{0}, JournalId{1}), 0.75);
  EXPECT_DOUBLE_EQ(t.probability(JournalId{0}, JournalId{2}), 0.25);
  EXPECT_DOUBLE_EQ(t.probability(JournalId{1}, JournalId{0}), 1.0);
  EXPECT_TRUE(t.is_dangling(JournalId{2}));
  EXPECT_FALSE(t.is_dangling(JournalId{0}));
  EXPECT_EQ(t.dangling_count(), 1u);
}

TEST(TransitionMatrix, RowsAreStochastic) {
  const auto jg = testing::random_journal_graph(77, 50, 0.2, 0.1);
  const auto t = transition_matrix(jg);
  for (std::size_t r = 0; r < t.size(); ++r) {
    double sum = 0.0;
    for (auto k = t.offsets()[r]; k < t.offsets()[r + 1]; ++k) sum += t.probabilities()[k];
    if (t.is_dangling(JournalId{static_cast<std::uint32_t>(r)})) {
      EXPECT_EQ(sum, 0.0);
      EXPECT_EQ(jg.out_weights()[r], 0u);
    } else {
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

}  // namespace
}  // namespace citerank
