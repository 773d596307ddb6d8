#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "citerank/paper_graph.hpp"

namespace citerank {

struct TsvFormat {
  char delimiter = '\t';
  bool has_header = true;
  // Bytes requested from the stream per read. Output never depends on it.
  std::size_t buffer_size = std::size_t{1} << 16;
};

struct MetadataFormat : TsvFormat {
  // Inclusive corpus year range; rows outside it are rejected as malformed.
  std::optional<int> min_year;
  std::optional<int> max_year;
};

struct CitationFormat : TsvFormat {};

// Chunked line splitter over an input stream. Strips a trailing '\r' and a
// leading UTF-8 byte order mark.
class LineReader {
 public:
  LineReader(std::istream& in, std::size_t buffer_size);

  // Returns false at end of stream. Throws IngestError on a stream failure.
  bool next(std::string& line);
  std::size_t line_number() const noexcept { return line_number_; }

 private:
  bool fill();

  std::istream& in_;
  std::vector<char> chunk_;
  std::string carry_;
  std::size_t pos_ = 0;
  std::size_t line_number_ = 0;
  bool eof_ = false;
  bool first_ = true;
};

// Split on the delimiter and trim surrounding whitespace from each field.
std::vector<std::string_view> split_fields(std::string_view line, char delimiter);
std::string_view trim(std::string_view s);

struct Metadata {
  std::vector<PaperRecord> records;
  std::vector<std::string> paper_ids;      // PaperId -> external id
  std::vector<std::string> journal_names;  // JournalId -> name, ascending byte order
  std::unordered_map<std::string, PaperId> paper_index;

  std::size_t rows = 0;
  std::size_t malformed = 0;
  std::vector<std::size_t> malformed_lines;  // first few offending line numbers

  std::optional<PaperId> find_paper(const std::string& external_id) const;
  CorpusNames names() const { return {paper_ids, journal_names}; }
};

// Paper ids are interned in order of first appearance; journal ids follow
// the byte order of the trimmed journal names.
Metadata parse_metadata(std::istream& in, const MetadataFormat& format = {});

struct CitationList {
  std::vector<CitationEdge> edges;
  std::size_t rows = 0;
  std::size_t malformed = 0;
  std::size_t unresolvable = 0;
  std::vector<std::size_t> malformed_lines;
};

CitationList parse_citations(std::istream& in, const Metadata& metadata,
                             const CitationFormat& format = {});

struct IngestAudit {
  std::size_t metadata_rows = 0;
  std::size_t metadata_accepted = 0;
  std::size_t metadata_malformed = 0;
  std::size_t citation_rows = 0;
  std::size_t citation_malformed = 0;
  std::size_t citation_unresolvable = 0;
  BuildReport build;
  std::size_t papers = 0;
  std::size_t journals = 0;
  std::size_t citations = 0;

  nlohmann::ordered_json to_json() const;
};

IngestAudit make_audit(const Metadata& metadata, const CitationList& citations,
                       const BuildReport& build, const PaperGraph& g);

// One point of a complementary cumulative distribution: the fraction of
// journals whose value is at least `threshold`.
struct CcdfPoint {
  std::uint64_t threshold = 0;
  double fraction = 0.0;

  bool operator==(const CcdfPoint&) const = default;
};

// Thresholds are 0 followed by every distinct value in ascending order.
std::vector<CcdfPoint> ccdf(std::span<const std::uint64_t> values);

struct CorpusStats {
  std::size_t paper_count = 0;
  std::size_t journal_count = 0;
  std::size_t citation_count = 0;
  std::vector<std::uint64_t> journal_papers;
  std::vector<std::uint64_t> journal_in_citations;
  std::vector<std::uint64_t> journal_out_citations;
  std::vector<CcdfPoint> papers_ccdf;
  std::vector<CcdfPoint> in_citations_ccdf;
  std::vector<CcdfPoint> out_citations_ccdf;

  nlohmann::ordered_json to_json() const;
};

// Journal in/out citation counts include intra-journal citations.
CorpusStats corpus_stats(const PaperGraph& g);

// Lower median of the values; 0 for an empty input.
std::uint64_t median(std::vector<std::uint64_t> values);

}  // namespace citerank
