#include "citerank/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

std::string padded(char prefix, std::size_t value, std::size_t width) {
  std::string digits = std::to_string(value);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

std::size_t digits_for(std::size_t n) { return std::to_string(n == 0 ? 0 : n - 1).size(); }

}  // namespace

SyntheticCorpus generate_corpus(const SyntheticCorpusConfig& cfg) {
  const std::size_t n = cfg.papers;
  const std::size_t jn = cfg.journals;
  if (jn == 0 || n < jn) throw ConfigError("need at least one paper per journal");
  if (cfg.last_year < cfg.first_year) throw ConfigError("year range is empty");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> any_journal(0, jn - 1);

  // Journal membership.
  std::vector<std::uint32_t> journal_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || coin(rng) < cfg.new_journal_share) {
      journal_of[i] = static_cast<std::uint32_t>(any_journal(rng));
    } else {
      std::uniform_int_distribution<std::size_t> earlier(0, i - 1);
      journal_of[i] = journal_of[earlier(rng)];
    }
  }
  // Give every empty journal a paper taken from a journal that can spare one.
  {
    std::vector<std::size_t> size(jn, 0);
    for (auto j : journal_of) ++size[j];
    std::uniform_int_distribution<std::size_t> any_paper(0, n - 1);
    for (std::size_t j = 0; j < jn; ++j) {
      while (size[j] == 0) {
        const auto p = any_paper(rng);
        if (size[journal_of[p]] > 1) {
          --size[journal_of[p]];
          journal_of[p] = static_cast<std::uint32_t>(j);
          ++size[j];
        }
      }
    }
  }

  SyntheticCorpus corpus;
  corpus.records.reserve(n);
  const auto span_years = static_cast<std::size_t>(cfg.last_year - cfg.first_year + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const int year = cfg.first_year + static_cast<int>(i * span_years / n);
    corpus.records.push_back(
        PaperRecord{PaperId{static_cast<std::uint32_t>(i)}, JournalId{journal_of[i]}, year});
  }

  // Citations, in publication order.
  std::vector<std::vector<std::uint32_t>> members(jn);
  std::vector<std::uint32_t> cited_urn;
  cited_urn.reserve(static_cast<std::size_t>(static_cast<double>(n) * cfg.mean_references));
  std::poisson_distribution<std::size_t> reference_count(cfg.mean_references);
  std::vector<std::uint32_t> refs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = journal_of[i];
    if (i > 0) {
      const std::size_t want = std::min(reference_count(rng), i);
      refs.clear();
      std::uniform_int_distribution<std::size_t> earlier(0, i - 1);
      for (std::size_t r = 0; r < want; ++r) {
        for (int attempt = 0; attempt < 4; ++attempt) {
          std::uint32_t target = 0;
          const double u = coin(rng);
          if (u < cfg.same_journal_share && !members[j].empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, members[j].size() - 1);
            target = members[j][pick(rng)];
          } else if (u < cfg.same_journal_share + cfg.uniform_share || cited_urn.empty()) {
            target = static_cast<std::uint32_t>(earlier(rng));
          } else {
            std::uniform_int_distribution<std::size_t> pick(0, cited_urn.size() - 1);
            target = cited_urn[pick(rng)];
          }
          if (std::find(refs.begin(), refs.end(), target) == refs.end()) {
            refs.push_back(target);
            break;
          }
        }
      }
      for (auto t : refs) {
        corpus.citations.push_back(
            CitationEdge{PaperId{static_cast<std::uint32_t>(i)}, PaperId{t}});
        cited_urn.push_back(t);
      }
    }
    members[j].push_back(static_cast<std::uint32_t>(i));
  }

  const auto paper_width = digits_for(n);
  const auto journal_width = digits_for(jn);
  corpus.names.papers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) corpus.names.papers.push_back(padded('P', i, paper_width));
  corpus.names.journals.reserve(jn);
  for (std::size_t j = 0; j < jn; ++j) {
    corpus.names.journals.push_back(padded('J', j, journal_width));
  }
  return corpus;
}

void write_metadata_tsv(std::ostream& out, const SyntheticCorpus& corpus) {
  out << "paper_id\tjournal\tyear\n";
  for (const auto& r : corpus.records) {
    out << corpus.names.papers[r.id.value] << '\t' << corpus.names.journals[r.journal.value] << '\t'
        << r.year << '\n';
  }
}

void write_citations_tsv(std::ostream& out, const SyntheticCorpus& corpus) {
  out << "citing_id\tcited_id\n";
  for (const auto& e : corpus.citations) {
    out << corpus.names.papers[e.citing.value] << '\t' << corpus.names.papers[e.cited.value]
        << '\n';
  }
}

}  // namespace citerank
