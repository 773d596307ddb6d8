#include "citerank/score_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "citerank/errors.hpp"
#include "citerank/format.hpp"
#include "citerank/ingest.hpp"

namespace citerank {

void write_scores_tsv(std::ostream& out, const ScoreVector& scores,
                      std::span<const std::string> names) {
  out << "rank\tentity\tscore\n";
  const auto order = scores.order();
  for (std::size_t r = 0; r < order.size(); ++r) {
    out << (r + 1) << '\t' << names[order[r]] << '\t' << format_double(scores[order[r]]) << '\n';
  }
}

NamedScores read_scores_tsv(std::istream& in) {
  NamedScores out;
  LineReader reader(in, std::size_t{1} << 16);
  std::string line;
  bool header = true;
  std::unordered_map<std::string, std::size_t> seen;
  while (reader.next(line)) {
    if (header) {
      header = false;
      continue;
    }
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line, '\t');
    if (fields.size() != 3 || fields[1].empty()) {
      throw IngestError("malformed score row at line " + std::to_string(reader.line_number()));
    }
    // strtod accepts the full %.17g output including exponents.
    const std::string text(fields[2]);
    char* end = nullptr;
    const double score = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty()) {
      throw IngestError("bad score '" + text + "' at line " + std::to_string(reader.line_number()));
    }
    std::string name(fields[1]);
    if (!seen.emplace(name, out.names.size()).second) {
      throw IngestError("duplicate entity '" + name + "' in score file");
    }
    out.names.push_back(std::move(name));
    out.scores.push_back(score);
  }
  return out;
}

AlignedScores align_scores(const NamedScores& a, const NamedScores& b, EntityKind kind) {
  std::unordered_map<std::string, std::size_t> index_b;
  for (std::size_t i = 0; i < b.names.size(); ++i) index_b.emplace(b.names[i], i);

  std::vector<std::string> only_a;
  for (const auto& name : a.names) {
    if (!index_b.contains(name)) only_a.push_back(name);
  }
  std::vector<std::string> only_b;
  {
    std::unordered_map<std::string, std::size_t> index_a;
    for (std::size_t i = 0; i < a.names.size(); ++i) index_a.emplace(a.names[i], i);
    for (const auto& name : b.names) {
      if (!index_a.contains(name)) only_b.push_back(name);
    }
  }
  std::sort(only_a.begin(), only_a.end());
  std::sort(only_b.begin(), only_b.end());
  if (!only_a.empty() || !only_b.empty()) {
    auto list = [](const std::vector<std::string>& names) {
      std::string s;
      for (std::size_t i = 0; i < names.size() && i < 10; ++i) {
        if (i > 0) s += ", ";
        s += names[i];
      }
      if (names.size() > 10) s += ", ... (" + std::to_string(names.size()) + " total)";
      return s.empty() ? std::string("none") : s;
    };
    throw DomainError("score files rank different journals; only in first: " + list(only_a) +
                      "; only in second: " + list(only_b));
  }

  std::vector<std::size_t> perm(a.names.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](auto x, auto y) { return a.names[x] < a.names[y]; });

  AlignedScores out;
  std::vector<double> sa(perm.size()), sb(perm.size());
  out.names.reserve(perm.size());
  for (std::size_t id = 0; id < perm.size(); ++id) {
    const auto& name = a.names[perm[id]];
    out.names.push_back(name);
    sa[id] = a.scores[perm[id]];
    sb[id] = b.scores[index_b.at(name)];
  }
  out.a = ScoreVector(kind, std::move(sa));
  out.b = ScoreVector(kind, std::move(sb));
  return out;
}

}  // namespace citerank
