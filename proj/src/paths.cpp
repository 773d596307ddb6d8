#include "citerank/paths.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>

#include "citerank/errors.hpp"

namespace citerank {

std::string to_string(PathCount count) {
  if (count == 0) return "0";
  std::string digits;
  while (count > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(count % 10)));
    count /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

PathCount count_observed_2paths(const PaperGraph& g, kernels::Backend backend) {
  return backend == kernels::Backend::parallel
             ? kernels::parallel::offset_degree_product(g.in_offsets(), g.out_offsets())
             : kernels::reference::offset_degree_product(g.in_offsets(), g.out_offsets());
}

PathCount count_implied_2paths(const JournalGraph& jg, kernels::Backend backend) {
  return backend == kernels::Backend::parallel
             ? kernels::parallel::dot(jg.in_weights(), jg.out_weights())
             : kernels::reference::dot(jg.in_weights(), jg.out_weights());
}

PathCensus path_census(const PaperGraph& g) {
  PathCensus c;
  c.observed = count_observed_2paths(g);
  c.implied = count_implied_2paths(project(g));
  if (c.implied == 0) {
    c.degenerate = true;
    c.ratio = 1.0;
  } else {
    c.ratio = static_cast<double>(static_cast<long double>(c.observed) /
                                  static_cast<long double>(c.implied));
  }
  return c;
}

namespace {

nlohmann::ordered_json count_json(PathCount v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

}  // namespace

nlohmann::ordered_json PathCensus::to_json() const {
  return {{"observed", count_json(observed)},
          {"implied", count_json(implied)},
          {"ratio", ratio},
          {"degenerate", degenerate},
          {"implied_convention", "sum over journals of weighted in-degree times weighted "
                                 "out-degree, intra-journal citations included"}};
}

PathFlowTable focal_path_flows(const PaperGraph& g, JournalId focal, std::size_t top_k) {
  if (focal.value >= g.journal_count()) {
    throw LookupError("unknown focal journal id " + std::to_string(focal.value));
  }
  if (top_k == 0) throw DomainError("top_k must be at least 1");

  // b -> number of focal papers b cites. Every citer a of b then contributes
  // that many paths a -> b -> c.
  std::map<std::uint32_t, std::uint64_t> hits;
  for (auto c : g.papers_in(focal)) {
    for (auto b : g.citers_of(PaperId{c})) ++hits[b];
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> flows;
  PathFlowTable table;
  table.focal = focal;
  table.top_k = top_k;
  for (const auto& [b, m] : hits) {
    const auto via = g.journal(PaperId{b}).value;
    for (auto a : g.citers_of(PaperId{b})) {
      flows[{g.journal(PaperId{a}).value, via}] += m;
      table.total += m;
    }
  }

  std::vector<PathFlowRow> rows;
  rows.reserve(flows.size());
  for (const auto& [key, count] : flows) {
    rows.push_back({JournalId{key.first}, JournalId{key.second}, count});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const PathFlowRow& x, const PathFlowRow& y) { return x.count > y.count; });
  if (rows.size() > top_k) {
    for (std::size_t i = top_k; i < rows.size(); ++i) table.remainder += rows[i].count;
    rows.resize(top_k);
  }
  table.rows = std::move(rows);
  return table;
}

void write_path_flow_tsv(std::ostream& out, const PathFlowTable& table, const PaperGraph& g) {
  out << "source_journal\tvia_journal\tcount\n";
  for (const auto& row : table.rows) {
    out << g.journal_name(row.source) << '\t' << g.journal_name(row.via) << '\t' << row.count
        << '\n';
  }
  if (table.remainder > 0) out << "<other>\t<other>\t" << table.remainder << '\n';
}

}  // namespace citerank
