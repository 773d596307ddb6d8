#include "fixtures.hpp"

#include <algorithm>
#include <set>

namespace citerank::testing {

namespace {

PaperId P(std::uint32_t v) { return PaperId{v}; }
JournalId J(std::uint32_t v) { return JournalId{v}; }

}  // namespace

CorpusInputs chain_inputs() {
  // journals in name order: A=0, B=1, C=2; papers p1..p4 = 0..3
  CorpusInputs c;
  c.names.papers = {"p1", "p2", "p3", "p4"};
  c.names.journals = {"A", "B", "C"};
  c.records = {{P(0), J(2), 2001}, {P(1), J(1), 2002}, {P(2), J(1), 2003}, {P(3), J(0), 2004}};
  c.edges = {{P(3), P(2)}, {P(2), P(0)}};
  return c;
}

CorpusInputs broken_chain_inputs() {
  CorpusInputs c = chain_inputs();
  c.edges = {{P(3), P(2)}, {P(1), P(0)}};
  return c;
}

CorpusInputs hidden_cycle_inputs() {
  CorpusInputs c;
  c.names.papers = {"a1", "b1", "c1", "d1", "a2"};
  c.names.journals = {"A", "B", "C", "D"};
  c.records = {{P(0), J(0), 2000},
               {P(1), J(1), 2001},
               {P(2), J(2), 2002},
               {P(3), J(3), 2003},
               {P(4), J(0), 2004}};
  c.edges = {{P(1), P(0)}, {P(2), P(1)}, {P(3), P(2)}, {P(4), P(3)}};
  return c;
}

CorpusInputs random_corpus(std::uint64_t seed, std::size_t papers, std::size_t journals,
                           std::size_t edges, std::size_t duplicates) {
  std::mt19937_64 rng(seed);
  CorpusInputs c;
  std::uniform_int_distribution<std::uint32_t> pick_journal(0, static_cast<std::uint32_t>(journals - 1));
  for (std::uint32_t p = 0; p < papers; ++p) {
    // first `journals` papers seed every journal
    const auto j = p < journals ? p : pick_journal(rng);
    c.records.push_back({P(p), J(j), 1950 + static_cast<int>(p * 60 / papers)});
    c.names.papers.push_back("paper" + std::to_string(p));
  }
  for (std::uint32_t j = 0; j < journals; ++j) {
    std::string name = std::to_string(j);
    name.insert(0, 6 - std::min<std::size_t>(6, name.size()), '0');
    c.names.journals.push_back("J" + name);
  }
  const std::size_t max_edges = papers * (papers - 1) / 2;
  edges = std::min(edges, max_edges);
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(papers - 1));
  while (seen.size() < edges) {
    auto a = pick(rng);
    auto b = pick(rng);
    if (a == b) continue;
    if (a < b) std::swap(a, b);
    if (seen.emplace(a, b).second) c.edges.push_back({P(a), P(b)});
  }
  std::shuffle(c.edges.begin(), c.edges.end(), rng);
  if (duplicates > 0) {
    std::uniform_int_distribution<std::size_t> pick_edge(0, c.edges.size() - 1);
    for (std::size_t i = 0; i < duplicates; ++i) c.edges.push_back(c.edges[pick_edge(rng)]);
  }
  return c;
}

CorpusInputs one_paper_per_journal(std::uint64_t seed, std::size_t papers, std::size_t edges) {
  CorpusInputs c = random_corpus(seed, papers, papers, edges);
  return c;
}

JournalGraph random_journal_graph(std::uint64_t seed, std::size_t journals, double edge_prob,
                                  double dangling_share) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> weight(1, 20);
  std::vector<std::uint64_t> offsets(journals + 1, 0);
  std::vector<std::uint32_t> targets;
  std::vector<std::uint64_t> weights;
  std::vector<std::string> names;
  bool any_dangling = false;
  for (std::size_t a = 0; a < journals; ++a) {
    names.push_back("J" + std::to_string(1000 + a));
    bool dangling = coin(rng) < dangling_share;
    // With a positive share, at least one journal is dangling.
    if (a + 1 == journals && dangling_share > 0 && !any_dangling) dangling = true;
    any_dangling = any_dangling || dangling;
    for (std::size_t b = 0; b < journals && !dangling; ++b) {
      if (coin(rng) < edge_prob) {
        targets.push_back(static_cast<std::uint32_t>(b));
        weights.push_back(weight(rng));
      }
    }
    offsets[a + 1] = targets.size();
  }
  return JournalGraph(std::move(offsets), std::move(targets), std::move(weights), std::move(names));
}

}  // namespace citerank::testing
