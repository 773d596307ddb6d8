#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/ids.hpp"

namespace citerank {

struct PaperRecord {
  PaperId id;
  JournalId journal;
  int year = 0;

  auto operator<=>(const PaperRecord&) const = default;
};

// citing -> cited. Knowledge flows against the edge.
struct CitationEdge {
  PaperId citing;
  PaperId cited;

  auto operator<=>(const CitationEdge&) const = default;
};

enum class ForwardCitationPolicy { drop, reject };

std::string_view to_string(ForwardCitationPolicy policy);
ForwardCitationPolicy parse_forward_citation_policy(std::string_view text);

// Anomaly counters filled in by build_paper_graph.
struct BuildReport {
  std::size_t input_edges = 0;
  std::size_t accepted = 0;
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;
  std::size_t forward_citations = 0;

  bool operator==(const BuildReport&) const = default;
};

struct ValidationOptions {
  ForwardCitationPolicy forward_citation_policy = ForwardCitationPolicy::drop;
  // When false, a citation between two papers of the same year counts as a
  // forward citation.
  bool allow_same_year = true;
  BuildReport* report_sink = nullptr;
};

// External names for papers and journals, indexed by dense id. Either table
// may be left empty, in which case placeholder names are generated.
struct CorpusNames {
  std::vector<std::string> papers;
  std::vector<std::string> journals;
};

// Immutable paper-level citation graph. Adjacency is stored twice in CSR
// form (citing -> cited and cited -> citing) with sorted neighbor lists.
class PaperGraph {
 public:
  PaperGraph() = default;

  std::size_t paper_count() const noexcept { return journal_of_.size(); }
  std::size_t journal_count() const noexcept { return journal_offsets_.empty() ? 0 : journal_offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  std::span<const std::uint32_t> cited_by(PaperId p) const;   // out-list of p
  std::span<const std::uint32_t> citers_of(PaperId p) const;  // in-list of p
  std::size_t out_degree(PaperId p) const;
  std::size_t in_degree(PaperId p) const;

  JournalId journal(PaperId p) const { return JournalId{journal_of_[p.value]}; }
  int year(PaperId p) const { return years_[p.value]; }
  std::span<const std::uint32_t> papers_in(JournalId j) const;
  std::size_t journal_size(JournalId j) const;

  const std::string& paper_name(PaperId p) const { return paper_names_[p.value]; }
  const std::string& journal_name(JournalId j) const { return journal_names_[j.value]; }
  std::span<const std::string> paper_names() const { return paper_names_; }
  std::span<const std::string> journal_names() const { return journal_names_; }
  std::optional<JournalId> find_journal(std::string_view name) const;

  // Raw CSR arrays for the kernels.
  std::span<const std::uint64_t> out_offsets() const { return out_offsets_; }
  std::span<const std::uint32_t> out_targets() const { return out_targets_; }
  std::span<const std::uint64_t> in_offsets() const { return in_offsets_; }
  std::span<const std::uint32_t> in_sources() const { return in_sources_; }
  std::span<const std::uint32_t> journal_of() const { return journal_of_; }
  std::span<const int> years() const { return years_; }
  std::span<const std::uint64_t> journal_offsets() const { return journal_offsets_; }
  std::span<const std::uint32_t> journal_members() const { return journal_members_; }

  bool operator==(const PaperGraph&) const = default;

 private:
  friend class GraphAssembler;

  std::vector<std::uint64_t> out_offsets_;
  std::vector<std::uint32_t> out_targets_;
  std::vector<std::uint64_t> in_offsets_;
  std::vector<std::uint32_t> in_sources_;
  std::vector<std::uint32_t> journal_of_;
  std::vector<int> years_;
  std::vector<std::uint64_t> journal_offsets_;
  std::vector<std::uint32_t> journal_members_;
  std::vector<std::string> paper_names_;
  std::vector<std::string> journal_names_;
};

// Validates and assembles the graph. Record ids must be exactly 0..N-1.
// Self-loops and duplicate edges are removed and counted; forward-in-time
// citations are dropped or rejected per options. Journal count is
// names.journals.size() when given, otherwise max journal id + 1.
PaperGraph build_paper_graph(std::span<const PaperRecord> records,
                             std::span<const CitationEdge> edges,
                             const ValidationOptions& options = {}, CorpusNames names = {});

// Throws LookupError for out-of-range ids.
JournalId journal_of(const PaperGraph& g, PaperId p);

// Kahn ordering with citing papers before the papers they cite; nullopt
// when the graph has a cycle.
std::optional<std::vector<PaperId>> topological_order(const PaperGraph& g);

// Binary graph cache. Layout documented in docs/cache_format.md.
void write_graph_cache(std::ostream& out, const PaperGraph& g);
PaperGraph read_graph_cache(std::istream& in);

}  // namespace citerank
