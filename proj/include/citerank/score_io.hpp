#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "citerank/ranking.hpp"

namespace citerank {

// `rank<TAB>entity<TAB>score`, sorted by rank, scores at 17 significant digits.
void write_scores_tsv(std::ostream& out, const ScoreVector& scores,
                      std::span<const std::string> names);

struct NamedScores {
  std::vector<std::string> names;
  std::vector<double> scores;
};

// Reads a file written by write_scores_tsv. Throws IngestError on malformed
// rows or duplicate entity names.
NamedScores read_scores_tsv(std::istream& in);

// Two score files over the same names, re-indexed onto one universe whose
// ids follow the byte order of the names.
struct AlignedScores {
  std::vector<std::string> names;
  ScoreVector a;
  ScoreVector b;
};

// Throws DomainError naming the entities present in only one input.
AlignedScores align_scores(const NamedScores& a, const NamedScores& b, EntityKind kind);

}  // namespace citerank
