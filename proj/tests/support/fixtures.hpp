#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "citerank/paper_graph.hpp"
#include "citerank/projection.hpp"

namespace citerank::testing {

// Raw inputs of a corpus, kept so tests can rebuild or re-derive by hand.
struct CorpusInputs {
  std::vector<PaperRecord> records;
  std::vector<CitationEdge> edges;
  CorpusNames names;

  PaperGraph build(const ValidationOptions& options = {}) const {
    return build_paper_graph(records, edges, options, names);
  }
};

// Four papers, three journals. p1 in C, p2 and p3 in B, p4 in A, published
// in index order. The chain cites p4->p3, p3->p1; the broken chain cites
// p4->p3, p2->p1. Both project onto the same journal graph A -> B -> C.
CorpusInputs chain_inputs();
CorpusInputs broken_chain_inputs();
inline PaperGraph chain() { return chain_inputs().build(); }
inline PaperGraph broken_chain() { return broken_chain_inputs().build(); }

// Four journals whose papers form a DAG in time order while the journal
// projection closes the cycle A -> D -> C -> B -> A.
CorpusInputs hidden_cycle_inputs();
inline PaperGraph hidden_cycle() { return hidden_cycle_inputs().build(); }

// Random corpus: papers in publication order (years non-decreasing with the
// index), every journal non-empty, citations from later to earlier papers.
// Edges are distinct and free of self-loops unless `duplicates` > 0, in
// which case that many exact copies of existing edges are appended.
CorpusInputs random_corpus(std::uint64_t seed, std::size_t papers, std::size_t journals,
                           std::size_t edges, std::size_t duplicates = 0);

// One paper per journal; paper i cites a random subset of earlier papers.
CorpusInputs one_paper_per_journal(std::uint64_t seed, std::size_t papers, std::size_t edges);

// Random weighted journal graph with some journals left dangling.
JournalGraph random_journal_graph(std::uint64_t seed, std::size_t journals, double edge_prob,
                                  double dangling_share);

}  // namespace citerank::testing
