#include "citerank/paper_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "citerank/errors.hpp"
#include "graph_assembler.hpp"

namespace citerank {

std::string_view to_string(ForwardCitationPolicy policy) {
  return policy == ForwardCitationPolicy::drop ? "drop" : "reject";
}

ForwardCitationPolicy parse_forward_citation_policy(std::string_view text) {
  if (text == "drop") return ForwardCitationPolicy::drop;
  if (text == "reject") return ForwardCitationPolicy::reject;
  throw ConfigError("unknown forward citation policy '" + std::string(text) +
                    "' (expected drop or reject)");
}

std::span<const std::uint32_t> PaperGraph::cited_by(PaperId p) const {
  const auto lo = out_offsets_[p.value];
  return std::span<const std::uint32_t>(out_targets_).subspan(lo, out_offsets_[p.value + 1] - lo);
}

std::span<const std::uint32_t> PaperGraph::citers_of(PaperId p) const {
  const auto lo = in_offsets_[p.value];
  return std::span<const std::uint32_t>(in_sources_).subspan(lo, in_offsets_[p.value + 1] - lo);
}

std::size_t PaperGraph::out_degree(PaperId p) const {
  return out_offsets_[p.value + 1] - out_offsets_[p.value];
}

std::size_t PaperGraph::in_degree(PaperId p) const {
  return in_offsets_[p.value + 1] - in_offsets_[p.value];
}

std::span<const std::uint32_t> PaperGraph::papers_in(JournalId j) const {
  const auto lo = journal_offsets_[j.value];
  return std::span<const std::uint32_t>(journal_members_)
      .subspan(lo, journal_offsets_[j.value + 1] - lo);
}

std::size_t PaperGraph::journal_size(JournalId j) const {
  return journal_offsets_[j.value + 1] - journal_offsets_[j.value];
}

std::optional<JournalId> PaperGraph::find_journal(std::string_view name) const {
  // Journal names are not required to be sorted, so this is a scan.
  for (std::size_t j = 0; j < journal_names_.size(); ++j) {
    if (journal_names_[j] == name) return JournalId{static_cast<std::uint32_t>(j)};
  }
  return std::nullopt;
}

PaperGraph GraphAssembler::assemble(std::size_t journal_count,
                                    std::vector<std::uint64_t> out_offsets,
                                    std::vector<std::uint32_t> out_targets,
                                    std::vector<std::uint32_t> journal_of, std::vector<int> years,
                                    std::vector<std::string> paper_names,
                                    std::vector<std::string> journal_names) {
  const std::size_t n = journal_of.size();
  PaperGraph g;

  // Reverse adjacency by counting sort; scanning sources in ascending order
  // leaves every in-list sorted.
  g.in_offsets_.assign(n + 1, 0);
  for (auto t : out_targets) ++g.in_offsets_[t + 1];
  for (std::size_t i = 0; i < n; ++i) g.in_offsets_[i + 1] += g.in_offsets_[i];
  g.in_sources_.resize(out_targets.size());
  {
    std::vector<std::uint64_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (std::size_t src = 0; src < n; ++src) {
      for (auto k = out_offsets[src]; k < out_offsets[src + 1]; ++k) {
        g.in_sources_[cursor[out_targets[k]]++] = static_cast<std::uint32_t>(src);
      }
    }
  }

  g.journal_offsets_.assign(journal_count + 1, 0);
  for (auto j : journal_of) ++g.journal_offsets_[j + 1];
  for (std::size_t j = 0; j < journal_count; ++j) g.journal_offsets_[j + 1] += g.journal_offsets_[j];
  g.journal_members_.resize(n);
  {
    std::vector<std::uint64_t> cursor(g.journal_offsets_.begin(), g.journal_offsets_.end() - 1);
    for (std::size_t p = 0; p < n; ++p) {
      g.journal_members_[cursor[journal_of[p]]++] = static_cast<std::uint32_t>(p);
    }
  }

  if (paper_names.empty()) {
    paper_names.reserve(n);
    for (std::size_t p = 0; p < n; ++p) paper_names.push_back("p" + std::to_string(p));
  }
  if (journal_names.empty()) {
    journal_names.reserve(journal_count);
    for (std::size_t j = 0; j < journal_count; ++j) journal_names.push_back("j" + std::to_string(j));
  }

  g.out_offsets_ = std::move(out_offsets);
  g.out_targets_ = std::move(out_targets);
  g.journal_of_ = std::move(journal_of);
  g.years_ = std::move(years);
  g.paper_names_ = std::move(paper_names);
  g.journal_names_ = std::move(journal_names);
  return g;
}

namespace {

std::string describe_edge(const CitationEdge& e, const CorpusNames& names) {
  auto name = [&](PaperId p) {
    if (p.value < names.papers.size()) return names.papers[p.value];
    return std::to_string(p.value);
  };
  return "(" + name(e.citing) + " -> " + name(e.cited) + ")";
}

}  // namespace

PaperGraph build_paper_graph(std::span<const PaperRecord> records,
                             std::span<const CitationEdge> edges,
                             const ValidationOptions& options, CorpusNames names) {
  const std::size_t n = records.size();
  if (!names.papers.empty() && names.papers.size() != n) {
    throw IngestError("paper name table has " + std::to_string(names.papers.size()) +
                      " entries for " + std::to_string(n) + " records");
  }

  std::vector<std::uint32_t> journal_of(n);
  std::vector<int> years(n);
  std::vector<std::uint8_t> seen(n, 0);
  std::uint32_t max_journal = 0;
  for (const auto& r : records) {
    if (r.id.value >= n) {
      throw IngestError("paper record id " + std::to_string(r.id.value) +
                        " is outside the dense range [0, " + std::to_string(n) + ")");
    }
    if (seen[r.id.value] != 0) {
      throw IngestError("duplicate paper record id " + std::to_string(r.id.value));
    }
    seen[r.id.value] = 1;
    journal_of[r.id.value] = r.journal.value;
    years[r.id.value] = r.year;
    max_journal = std::max(max_journal, r.journal.value);
  }

  std::size_t journal_count = names.journals.size();
  if (journal_count == 0) {
    journal_count = n == 0 ? 0 : static_cast<std::size_t>(max_journal) + 1;
  } else if (n > 0 && max_journal >= journal_count) {
    throw IngestError("journal id " + std::to_string(max_journal) + " has no name entry");
  }

  BuildReport report;
  report.input_edges = edges.size();

  // Counting sort of surviving edges by citing paper.
  std::vector<std::uint64_t> offsets(n + 1, 0);
  std::vector<std::uint8_t> keep(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.citing.value >= n || e.cited.value >= n) {
      throw IngestError("citation " + describe_edge(e, names) + " references an unknown paper");
    }
    if (e.citing == e.cited) {
      ++report.self_loops;
      continue;
    }
    const int yc = years[e.citing.value];
    const int yd = years[e.cited.value];
    const bool forward = yc < yd || (!options.allow_same_year && yc == yd);
    if (forward) {
      if (options.forward_citation_policy == ForwardCitationPolicy::reject) {
        throw IngestError("citation " + describe_edge(e, names) + " points forward in time (" +
                          std::to_string(yc) + " cites " + std::to_string(yd) + ")");
      }
      ++report.forward_citations;
      continue;
    }
    keep[i] = 1;
    ++offsets[e.citing.value + 1];
  }
  for (std::size_t p = 0; p < n; ++p) offsets[p + 1] += offsets[p];

  std::vector<std::uint32_t> targets(offsets[n]);
  {
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (keep[i] != 0) targets[cursor[edges[i].citing.value]++] = edges[i].cited.value;
    }
  }

  // Sort and deduplicate each row, compacting in place.
  std::uint64_t write = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const auto lo = offsets[p];
    const auto hi = offsets[p + 1];
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(lo),
              targets.begin() + static_cast<std::ptrdiff_t>(hi));
    offsets[p] = write;
    for (auto k = lo; k < hi; ++k) {
      if (k > lo && targets[k] == targets[k - 1]) {
        ++report.duplicates;
        continue;
      }
      targets[write++] = targets[k];
    }
  }
  offsets[n] = write;
  targets.resize(write);
  targets.shrink_to_fit();
  report.accepted = write;

  if (options.report_sink != nullptr) *options.report_sink = report;

  return GraphAssembler::assemble(journal_count, std::move(offsets), std::move(targets),
                                  std::move(journal_of), std::move(years),
                                  std::move(names.papers), std::move(names.journals));
}

JournalId journal_of(const PaperGraph& g, PaperId p) {
  if (p.value >= g.paper_count()) {
    throw LookupError("paper id " + std::to_string(p.value) + " is out of range (N = " +
                      std::to_string(g.paper_count()) + ")");
  }
  return g.journal(p);
}

std::optional<std::vector<PaperId>> topological_order(const PaperGraph& g) {
  const std::size_t n = g.paper_count();
  std::vector<std::uint64_t> pending(n);
  std::deque<std::uint32_t> ready;
  for (std::uint32_t p = 0; p < n; ++p) {
    pending[p] = g.in_degree(PaperId{p});
    if (pending[p] == 0) ready.push_back(p);
  }
  std::vector<PaperId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const auto p = ready.front();
    ready.pop_front();
    order.emplace_back(p);
    for (auto q : g.cited_by(PaperId{p})) {
      if (--pending[q] == 0) ready.push_back(q);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace citerank
