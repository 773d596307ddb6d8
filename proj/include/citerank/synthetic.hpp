#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "citerank/paper_graph.hpp"

namespace citerank {

// Growing-corpus generator: papers arrive in publication order, join
// journals by preferential attachment on journal size, and cite earlier
// papers by a mix of same-journal, uniform and preferential (by citations
// received) choices.
struct SyntheticCorpusConfig {
  std::size_t papers = 100'000;
  std::size_t journals = 500;
  double mean_references = 10.0;
  double new_journal_share = 0.2;    // journal choice uniform rather than by size
  double same_journal_share = 0.3;   // reference drawn from the citing paper's journal
  double uniform_share = 0.2;        // reference drawn uniformly from all earlier papers
  int first_year = 1940;
  int last_year = 2016;
  std::uint64_t seed = 1;
};

struct SyntheticCorpus {
  std::vector<PaperRecord> records;
  std::vector<CitationEdge> citations;
  CorpusNames names;
};

SyntheticCorpus generate_corpus(const SyntheticCorpusConfig& cfg);

void write_metadata_tsv(std::ostream& out, const SyntheticCorpus& corpus);
void write_citations_tsv(std::ostream& out, const SyntheticCorpus& corpus);

}  // namespace citerank
