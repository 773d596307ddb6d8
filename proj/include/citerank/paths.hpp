#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "citerank/kernels.hpp"
#include "citerank/paper_graph.hpp"
#include "citerank/projection.hpp"

namespace citerank {

using PathCount = kernels::u128;

std::string to_string(PathCount count);

// Length-2 paths a -> b -> c in the paper graph: sum of in(b) * out(b).
PathCount count_observed_2paths(const PaperGraph& g,
                                kernels::Backend backend = kernels::Backend::parallel);

// Length-2 paths implied by the journal projection, counted with citation
// multiplicity: sum over journals B of w_in(B) * w_out(B), self-loops
// included.
PathCount count_implied_2paths(const JournalGraph& jg,
                               kernels::Backend backend = kernels::Backend::parallel);

struct PathCensus {
  PathCount observed = 0;
  PathCount implied = 0;
  double ratio = 1.0;
  // Set when implied == 0; the ratio is then 1.0 by convention.
  bool degenerate = false;

  nlohmann::ordered_json to_json() const;
};

// Uses the full projection (self-loops kept), which guarantees
// observed <= implied.
PathCensus path_census(const PaperGraph& g);

struct PathFlowRow {
  JournalId source;
  JournalId via;
  std::uint64_t count = 0;

  bool operator==(const PathFlowRow&) const = default;
};

// Observed paths a -> b -> c with c in the focal journal, grouped by
// (journal of a, journal of b). Rows are ordered by count descending, then
// by (source, via).
struct PathFlowTable {
  JournalId focal;
  std::size_t top_k = 0;
  std::vector<PathFlowRow> rows;
  std::uint64_t remainder = 0;  // total of the rows cut by top_k
  std::uint64_t total = 0;      // all observed 2-paths ending in focal
};

// Throws LookupError for an unknown focal journal, DomainError for top_k 0.
PathFlowTable focal_path_flows(const PaperGraph& g, JournalId focal, std::size_t top_k);

// `source_journal<TAB>via_journal<TAB>count`; the remainder, if any, is the
// last row with both journal columns set to "<other>".
void write_path_flow_tsv(std::ostream& out, const PathFlowTable& table, const PaperGraph& g);

}  // namespace citerank
