#pragma once

// Independent reference computations used to freeze and check expected
// values. None of these call into the code paths they check.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "citerank/paper_graph.hpp"
#include "citerank/projection.hpp"
#include "fixtures.hpp"

namespace citerank::testing {

using u128 = unsigned __int128;

// Dense solve of x = (1-d)/n + d M x, M built straight from the raw edge
// weights with dangling columns set to 1/n.
std::vector<double> dense_journal_pagerank(const JournalGraph& jg, double damping);

// Dense solve of the path-respecting walk from the raw edge list.
std::vector<double> dense_path_pagerank(const CorpusInputs& corpus, double damping);

// All pairs of edges (a->b), (b->c) over the deduplicated raw edge list.
u128 enumerate_observed_2paths(const std::vector<CitationEdge>& edges);

// All pairs of journal edges (A->B), (B->C), weighted by w(A,B)*w(B,C).
u128 enumerate_implied_2paths(const std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>& w);

// Journal edge weights tabulated directly from the raw corpus.
std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> tabulate_projection(
    const CorpusInputs& corpus);

// O(n^2) pair counting.
double naive_kendall_tau_b(std::span<const double> x, std::span<const double> y);

}  // namespace citerank::testing
