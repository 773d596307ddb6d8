#include "citerank/projection.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "citerank/errors.hpp"

namespace citerank {

JournalGraph::JournalGraph(std::vector<std::uint64_t> offsets, std::vector<std::uint32_t> targets,
                           std::vector<std::uint64_t> weights, std::vector<std::string> names)
    : offsets_(std::move(offsets)),
      targets_(std::move(targets)),
      weights_(std::move(weights)),
      in_weight_(names.size(), 0),
      out_weight_(names.size(), 0),
      names_(std::move(names)) {
  for (std::size_t a = 0; a < names_.size(); ++a) {
    for (auto k = offsets_[a]; k < offsets_[a + 1]; ++k) {
      out_weight_[a] += weights_[k];
      in_weight_[targets_[k]] += weights_[k];
      total_weight_ += weights_[k];
    }
  }
}

std::uint64_t JournalGraph::weight(JournalId from, JournalId to) const {
  const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[from.value]);
  const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[from.value + 1]);
  const auto it = std::lower_bound(first, last, to.value);
  if (it == last || *it != to.value) return 0;
  return weights_[static_cast<std::size_t>(it - targets_.begin())];
}

namespace {

struct Rows {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> targets;
  std::vector<std::uint64_t> weights;
};

// Each journal's row is built independently from its member papers, using a
// dense per-thread accumulator. Row contents do not depend on scheduling.
Rows project_parallel(const PaperGraph& g, const ProjectionOptions& options) {
  const std::size_t jn = g.journal_count();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> rows(jn);

#pragma omp parallel
  {
    std::vector<std::uint64_t> acc(jn, 0);
    std::vector<std::uint32_t> touched;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(jn); ++a) {
      touched.clear();
      for (auto p : g.papers_in(JournalId{static_cast<std::uint32_t>(a)})) {
        for (auto q : g.cited_by(PaperId{p})) {
          const auto b = g.journal(PaperId{q}).value;
          if (options.exclude_self_loops && b == static_cast<std::uint32_t>(a)) continue;
          if (acc[b]++ == 0) touched.push_back(b);
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& row = rows[static_cast<std::size_t>(a)];
      row.reserve(touched.size());
      for (auto b : touched) {
        row.emplace_back(b, acc[b]);
        acc[b] = 0;
      }
    }
  }

  Rows out;
  out.offsets.assign(jn + 1, 0);
  for (std::size_t a = 0; a < jn; ++a) out.offsets[a + 1] = out.offsets[a] + rows[a].size();
  out.targets.reserve(out.offsets[jn]);
  out.weights.reserve(out.offsets[jn]);
  for (const auto& row : rows) {
    for (const auto& [b, w] : row) {
      out.targets.push_back(b);
      out.weights.push_back(w);
    }
  }
  return out;
}

Rows project_reference(const PaperGraph& g, const ProjectionOptions& options) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts;
  for (std::uint32_t p = 0; p < g.paper_count(); ++p) {
    const auto a = g.journal(PaperId{p}).value;
    for (auto q : g.cited_by(PaperId{p})) {
      const auto b = g.journal(PaperId{q}).value;
      if (options.exclude_self_loops && a == b) continue;
      ++counts[{a, b}];
    }
  }
  Rows out;
  out.offsets.assign(g.journal_count() + 1, 0);
  for (const auto& [key, w] : counts) {
    ++out.offsets[key.first + 1];
    out.targets.push_back(key.second);
    out.weights.push_back(w);
  }
  for (std::size_t a = 0; a < g.journal_count(); ++a) out.offsets[a + 1] += out.offsets[a];
  return out;
}

}  // namespace

JournalGraph project(const PaperGraph& g, const ProjectionOptions& options,
                     kernels::Backend backend) {
  Rows rows = backend == kernels::Backend::parallel ? project_parallel(g, options)
                                                    : project_reference(g, options);
  std::vector<std::string> names(g.journal_names().begin(), g.journal_names().end());
  return JournalGraph(std::move(rows.offsets), std::move(rows.targets), std::move(rows.weights),
                      std::move(names));
}

void write_journal_graph_tsv(std::ostream& out, const JournalGraph& jg) {
  out << "source_journal\ttarget_journal\tweight\n";
  const auto names = jg.names();
  for (std::size_t a = 0; a < jg.journal_count(); ++a) {
    for (auto k = jg.offsets()[a]; k < jg.offsets()[a + 1]; ++k) {
      out << names[a] << '\t' << names[jg.targets()[k]] << '\t' << jg.weights()[k] << '\n';
    }
  }
}

std::size_t TransitionMatrix::dangling_count() const {
  return static_cast<std::size_t>(std::count(dangling_.begin(), dangling_.end(), 1));
}

double TransitionMatrix::probability(JournalId from, JournalId to) const {
  for (auto k = offsets_[from.value]; k < offsets_[from.value + 1]; ++k) {
    if (targets_[k] == to.value) return probabilities_[k];
  }
  return 0.0;
}

TransitionMatrix transition_matrix(const JournalGraph& jg) {
  TransitionMatrix t;
  const auto n = jg.journal_count();
  t.offsets_.assign(jg.offsets().begin(), jg.offsets().end());
  t.targets_.assign(jg.targets().begin(), jg.targets().end());
  t.probabilities_.resize(jg.edge_count());
  t.dangling_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto out = jg.out_weights()[a];
    if (out == 0) {
      t.dangling_[a] = 1;
      continue;
    }
    const double denom = static_cast<double>(out);
    for (auto k = t.offsets_[a]; k < t.offsets_[a + 1]; ++k) {
      t.probabilities_[k] = static_cast<double>(jg.weights()[k]) / denom;
    }
  }
  return t;
}

std::optional<std::vector<JournalId>> find_cycle(const JournalGraph& jg, bool include_self_loops) {
  const auto n = jg.journal_count();
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> color(n, kWhite);
  std::vector<std::uint32_t> parent(n, 0);

  // Iterative DFS; frame = (node, next edge index).
  std::vector<std::pair<std::uint32_t, std::uint64_t>> stack;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (color[root] != kWhite) continue;
    stack.emplace_back(root, jg.offsets()[root]);
    color[root] = kGrey;
    while (!stack.empty()) {
      auto& [u, k] = stack.back();
      if (k == jg.offsets()[u + 1]) {
        color[u] = kBlack;
        stack.pop_back();
        continue;
      }
      const auto v = jg.targets()[k++];
      if (v == u && !include_self_loops) continue;
      if (color[v] == kGrey) {
        std::vector<JournalId> cycle;
        for (auto w = u; w != v; w = parent[w]) cycle.emplace_back(w);
        cycle.emplace_back(v);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[v] == kWhite) {
        parent[v] = u;
        color[v] = kGrey;
        stack.emplace_back(v, jg.offsets()[v]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace citerank
