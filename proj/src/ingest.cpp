#include "citerank/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

constexpr std::size_t kMaxRecordedLines = 20;

void note_malformed(std::vector<std::size_t>& lines, std::size_t line) {
  if (lines.size() < kMaxRecordedLines) lines.push_back(line);
}

}  // namespace

LineReader::LineReader(std::istream& in, std::size_t buffer_size)
    : in_(in), chunk_(std::max<std::size_t>(buffer_size, 1)) {}

bool LineReader::fill() {
  if (eof_) return false;
  in_.read(chunk_.data(), static_cast<std::streamsize>(chunk_.size()));
  const auto got = static_cast<std::size_t>(in_.gcount());
  if (in_.bad()) throw IngestError("I/O error while reading input stream");
  if (got < chunk_.size()) eof_ = true;
  carry_.erase(0, pos_);
  pos_ = 0;
  carry_.append(chunk_.data(), got);
  return got > 0;
}

bool LineReader::next(std::string& line) {
  for (;;) {
    const auto nl = carry_.find('\n', pos_);
    if (nl != std::string::npos) {
      line.assign(carry_, pos_, nl - pos_);
      pos_ = nl + 1;
      break;
    }
    if (!fill()) {
      if (pos_ >= carry_.size()) return false;
      line.assign(carry_, pos_, std::string::npos);
      pos_ = carry_.size();
      break;
    }
  }
  ++line_number_;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (first_) {
    first_ = false;
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  }
  return true;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto lo = s.find_first_not_of(kSpace);
  if (lo == std::string_view::npos) return {};
  const auto hi = s.find_last_not_of(kSpace);
  return s.substr(lo, hi - lo + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto at = line.find(delimiter, start);
    if (at == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, at - start)));
    start = at + 1;
  }
}

std::optional<PaperId> Metadata::find_paper(const std::string& external_id) const {
  const auto it = paper_index.find(external_id);
  if (it == paper_index.end()) return std::nullopt;
  return it->second;
}

Metadata parse_metadata(std::istream& in, const MetadataFormat& format) {
  Metadata meta;
  LineReader reader(in, format.buffer_size);
  std::string line;
  bool header_pending = format.has_header;

  // Journals get provisional ids in order of appearance, remapped to name
  // order once the whole file is read.
  std::unordered_map<std::string, std::uint32_t> journal_index;
  std::vector<std::string> provisional_names;

  while (reader.next(line)) {
    if (header_pending) {
      header_pending = false;
      continue;
    }
    if (trim(line).empty()) continue;
    ++meta.rows;

    const auto fields = split_fields(line, format.delimiter);
    int year = 0;
    bool ok = fields.size() == 3 && !fields[0].empty() && !fields[1].empty() && !fields[2].empty();
    if (ok) {
      const auto* first = fields[2].data();
      const auto* last = first + fields[2].size();
      const auto [ptr, ec] = std::from_chars(first, last, year);
      ok = ec == std::errc{} && ptr == last;
    }
    if (ok && format.min_year && year < *format.min_year) ok = false;
    if (ok && format.max_year && year > *format.max_year) ok = false;
    if (!ok) {
      ++meta.malformed;
      note_malformed(meta.malformed_lines, reader.line_number());
      continue;
    }

    std::string paper(fields[0]);
    if (meta.paper_index.contains(paper)) {
      throw IngestError("duplicate paper id '" + paper + "' at metadata line " +
                        std::to_string(reader.line_number()));
    }
    std::string journal(fields[1]);
    auto [jit, inserted] =
        journal_index.try_emplace(journal, static_cast<std::uint32_t>(provisional_names.size()));
    if (inserted) provisional_names.push_back(journal);

    const PaperId id{static_cast<std::uint32_t>(meta.paper_ids.size())};
    meta.paper_index.emplace(paper, id);
    meta.paper_ids.push_back(std::move(paper));
    meta.records.push_back(PaperRecord{id, JournalId{jit->second}, year});
  }

  if (meta.records.empty()) {
    throw IngestError("metadata contains no usable rows (empty corpus)");
  }

  std::vector<std::uint32_t> by_name(provisional_names.size());
  for (std::uint32_t i = 0; i < by_name.size(); ++i) by_name[i] = i;
  std::sort(by_name.begin(), by_name.end(), [&](auto a, auto b) {
    return provisional_names[a] < provisional_names[b];
  });
  std::vector<std::uint32_t> remap(by_name.size());
  meta.journal_names.reserve(by_name.size());
  for (std::uint32_t rank = 0; rank < by_name.size(); ++rank) {
    remap[by_name[rank]] = rank;
    meta.journal_names.push_back(std::move(provisional_names[by_name[rank]]));
  }
  for (auto& r : meta.records) r.journal = JournalId{remap[r.journal.value]};
  return meta;
}

CitationList parse_citations(std::istream& in, const Metadata& metadata,
                             const CitationFormat& format) {
  CitationList out;
  LineReader reader(in, format.buffer_size);
  std::string line;
  std::string key;
  bool header_pending = format.has_header;

  while (reader.next(line)) {
    if (header_pending) {
      header_pending = false;
      continue;
    }
    if (trim(line).empty()) continue;
    ++out.rows;

    const auto fields = split_fields(line, format.delimiter);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      ++out.malformed;
      note_malformed(out.malformed_lines, reader.line_number());
      continue;
    }
    key.assign(fields[0]);
    const auto citing = metadata.find_paper(key);
    key.assign(fields[1]);
    const auto cited = metadata.find_paper(key);
    if (!citing || !cited) {
      ++out.unresolvable;
      continue;
    }
    out.edges.push_back(CitationEdge{*citing, *cited});
  }
  return out;
}

nlohmann::ordered_json IngestAudit::to_json() const {
  nlohmann::ordered_json j;
  j["metadata"] = {{"rows", metadata_rows},
                   {"accepted", metadata_accepted},
                   {"malformed", metadata_malformed}};
  j["citations"] = {{"rows", citation_rows},
                    {"malformed", citation_malformed},
                    {"unresolvable", citation_unresolvable},
                    {"self_loop", build.self_loops},
                    {"forward_citation", build.forward_citations},
                    {"duplicate", build.duplicates},
                    {"accepted", build.accepted}};
  j["graph"] = {{"papers", papers}, {"journals", journals}, {"citations", citations}};
  return j;
}

IngestAudit make_audit(const Metadata& metadata, const CitationList& citations,
                       const BuildReport& build, const PaperGraph& g) {
  IngestAudit a;
  a.metadata_rows = metadata.rows;
  a.metadata_accepted = metadata.records.size();
  a.metadata_malformed = metadata.malformed;
  a.citation_rows = citations.rows;
  a.citation_malformed = citations.malformed;
  a.citation_unresolvable = citations.unresolvable;
  a.build = build;
  a.papers = g.paper_count();
  a.journals = g.journal_count();
  a.citations = g.edge_count();
  return a;
}

std::vector<CcdfPoint> ccdf(std::span<const std::uint64_t> values) {
  if (values.empty()) return {};
  std::vector<std::uint64_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());

  std::vector<CcdfPoint> table;
  table.push_back({0, 1.0});
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    if (sorted[i] == 0) continue;
    // sorted[i..] are all >= sorted[i]
    table.push_back({sorted[i], static_cast<double>(sorted.size() - i) / n});
  }
  return table;
}

std::uint64_t median(std::vector<std::uint64_t> values) {
  if (values.empty()) return 0;
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

CorpusStats corpus_stats(const PaperGraph& g) {
  CorpusStats s;
  s.paper_count = g.paper_count();
  s.journal_count = g.journal_count();
  s.citation_count = g.edge_count();
  s.journal_papers.assign(s.journal_count, 0);
  s.journal_in_citations.assign(s.journal_count, 0);
  s.journal_out_citations.assign(s.journal_count, 0);
  for (std::uint32_t p = 0; p < s.paper_count; ++p) {
    const auto j = g.journal(PaperId{p}).value;
    ++s.journal_papers[j];
    s.journal_in_citations[j] += g.in_degree(PaperId{p});
    s.journal_out_citations[j] += g.out_degree(PaperId{p});
  }
  s.papers_ccdf = ccdf(s.journal_papers);
  s.in_citations_ccdf = ccdf(s.journal_in_citations);
  s.out_citations_ccdf = ccdf(s.journal_out_citations);
  return s;
}

nlohmann::ordered_json CorpusStats::to_json() const {
  auto table = [](const std::vector<CcdfPoint>& points) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : points) arr.push_back({p.threshold, p.fraction});
    return arr;
  };
  nlohmann::ordered_json j;
  j["papers"] = paper_count;
  j["journals"] = journal_count;
  j["citations"] = citation_count;
  j["median_papers_per_journal"] = median(journal_papers);
  j["median_in_citations_per_journal"] = median(journal_in_citations);
  j["median_out_citations_per_journal"] = median(journal_out_citations);
  j["ccdf"] = {{"papers", table(papers_ccdf)},
               {"in_citations", table(in_citations_ccdf)},
               {"out_citations", table(out_citations_ccdf)}};
  return j;
}

}  // namespace citerank
