#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "citerank/paper_graph.hpp"

namespace citerank {

// Fills the derived parts of a PaperGraph (reverse adjacency, journal member
// lists) from the forward CSR and the per-paper attributes. Inputs must
// already be validated: sorted, deduplicated rows and in-range ids.
class GraphAssembler {
 public:
  static PaperGraph assemble(std::size_t journal_count, std::vector<std::uint64_t> out_offsets,
                             std::vector<std::uint32_t> out_targets,
                             std::vector<std::uint32_t> journal_of, std::vector<int> years,
                             std::vector<std::string> paper_names,
                             std::vector<std::string> journal_names);
};

}  // namespace citerank
