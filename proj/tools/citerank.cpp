// citerank: journal rankings on projected versus path-respecting citation walks.
//
// Subcommands hand off through a binary graph cache so large corpora are
// parsed once:
//
//   citerank ingest   --metadata m.tsv --citations c.tsv --out corpus.bin
//   citerank rank     --graph corpus.bin --method pr|prc|counts --out scores.tsv
//   citerank paths    --graph corpus.bin [--focal NAME --top-k 45] --out census.json
//   citerank compare  --a pr.tsv --b prc.tsv --curves curves.csv --changes changes.tsv
//   citerank project  --graph corpus.bin --out journals.tsv
//   citerank stats    --graph corpus.bin --out stats.json
//
// Exit codes: 0 success, 1 computation failure, 2 input error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "citerank/compare.hpp"
#include "citerank/errors.hpp"
#include "citerank/format.hpp"
#include "citerank/ingest.hpp"
#include "citerank/paper_graph.hpp"
#include "citerank/parallel.hpp"
#include "citerank/paths.hpp"
#include "citerank/projection.hpp"
#include "citerank/ranking.hpp"
#include "citerank/score_io.hpp"
#include "citerank/synthetic.hpp"
#include "citerank/walk_simulation.hpp"
#include "manifest.hpp"

namespace fs = std::filesystem;
using citerank::cli::RunManifest;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitInput = 2;

std::ifstream open_input(const fs::path& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw citerank::InputError("cannot open input file '" + path.string() + "'");
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw citerank::InputError("cannot open output file '" + path.string() + "'");
  return out;
}

void write_json(const fs::path& path, const json& doc) {
  auto out = open_output(path);
  out << doc.dump(2) << '\n';
}

fs::path manifest_path(const std::string& flag, const fs::path& primary_output) {
  if (!flag.empty()) return flag;
  return fs::path(primary_output.string() + ".manifest.json");
}

citerank::PaperGraph load_graph(const fs::path& path) {
  auto in = open_input(path, true);
  return citerank::read_graph_cache(in);
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string nearest_names(std::span<const std::string> names, const std::string& query,
                          std::size_t limit) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  scored.reserve(names.size());
  for (const auto& n : names) scored.emplace_back(edit_distance(n, query), n);
  std::sort(scored.begin(), scored.end());
  std::string out;
  for (std::size_t i = 0; i < scored.size() && i < limit; ++i) {
    if (i > 0) out += ", ";
    out += "'" + scored[i].second + "'";
  }
  return out;
}

std::vector<std::size_t> parse_k_grid(const std::string& text, std::size_t n) {
  if (text.empty()) return citerank::default_k_grid(n);
  std::vector<std::size_t> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto token = std::string(citerank::trim(item));
    if (token.empty()) continue;
    if (token == "n") {
      grid.push_back(n);
      continue;
    }
    try {
      std::size_t used = 0;
      const auto v = std::stoull(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      grid.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw citerank::ConfigError("bad --k-grid entry '" + token + "'");
    }
  }
  return citerank::clip_k_grid(grid, n);
}

json pagerank_config_json(const citerank::PageRankConfig& cfg) {
  return {{"damping", cfg.damping},
          {"tolerance", cfg.tolerance},
          {"max_iterations", cfg.max_iterations},
          {"dangling", std::string(citerank::to_string(cfg.dangling))}};
}

// ---------------------------------------------------------------------------

struct IngestArgs {
  std::string metadata;
  std::string citations;
  std::string out;
  std::string audit;
  std::string manifest;
  std::string forward = "drop";
  bool strict_years = false;
  int min_year = 0;
  int max_year = 0;
};

void run_ingest(const IngestArgs& args) {
  RunManifest manifest("ingest");
  citerank::MetadataFormat mformat;
  if (args.min_year != 0) mformat.min_year = args.min_year;
  if (args.max_year != 0) mformat.max_year = args.max_year;

  citerank::ValidationOptions options;
  options.forward_citation_policy = citerank::parse_forward_citation_policy(args.forward);
  options.allow_same_year = !args.strict_years;
  citerank::BuildReport report;
  options.report_sink = &report;

  auto meta_in = open_input(args.metadata);
  auto cite_in = open_input(args.citations);
  manifest.add_input("metadata", args.metadata);
  manifest.add_input("citations", args.citations);
  manifest.config() = {{"forward_citations", args.forward},
                       {"allow_same_year", options.allow_same_year},
                       {"min_year", mformat.min_year ? json(*mformat.min_year) : json(nullptr)},
                       {"max_year", mformat.max_year ? json(*mformat.max_year) : json(nullptr)}};

  const auto meta = citerank::parse_metadata(meta_in, mformat);
  manifest.mark("parse_metadata");
  const auto cites = citerank::parse_citations(cite_in, meta, {});
  manifest.mark("parse_citations");
  const auto graph = citerank::build_paper_graph(meta.records, cites.edges, options, meta.names());
  manifest.mark("build_graph");

  {
    auto out = open_output(args.out);
    citerank::write_graph_cache(out, graph);
  }
  manifest.mark("write_cache");

  const auto audit = citerank::make_audit(meta, cites, report, graph);
  const fs::path audit_path = args.audit.empty() ? fs::path(args.out + ".audit.json") : fs::path(args.audit);
  write_json(audit_path, audit.to_json());

  manifest.anomalies() = audit.to_json();
  manifest.results() = {{"papers", graph.paper_count()},
                        {"journals", graph.journal_count()},
                        {"citations", graph.edge_count()}};
  manifest.add_output("graph", args.out);
  manifest.add_output("audit", audit_path);
  manifest.write(manifest_path(args.manifest, args.out));
}

// ---------------------------------------------------------------------------

struct RankArgs {
  std::string graph;
  std::string method = "prc";
  std::string out;
  std::string paper_scores;
  std::string manifest;
  std::string dangling = "teleport";
  double damping = 0.5;
  double tolerance = 1e-12;
  std::size_t max_iters = 1000;
  bool exclude_self_loops = false;
};

void run_rank(const RankArgs& args) {
  RunManifest manifest("rank");
  citerank::PageRankConfig cfg;
  cfg.damping = args.damping;
  cfg.tolerance = args.tolerance;
  cfg.max_iterations = args.max_iters;
  cfg.dangling = citerank::parse_dangling_policy(args.dangling);
  if (args.method != "pr" && args.method != "prc" && args.method != "counts") {
    throw citerank::ConfigError("unknown method '" + args.method + "' (expected pr, prc or counts)");
  }
  if (args.method != "counts") cfg.validate();

  const auto graph = load_graph(args.graph);
  manifest.add_input("graph", args.graph);
  manifest.mark("load_graph");

  json config = {{"method", args.method}};
  if (args.method != "counts") {
    const json pr_config = pagerank_config_json(cfg);
    for (const auto& [k, v] : pr_config.items()) config[k] = v;
  }
  if (args.method != "prc") config["exclude_self_loops"] = args.exclude_self_loops;
  manifest.config() = config;

  citerank::ScoreVector scores;
  if (args.method == "prc") {
    auto result = citerank::pagerank_paths(graph, cfg);
    manifest.mark("pagerank_paths");
    manifest.results() = {{"iterations", result.iterations}, {"residual", result.residual}};
    if (!args.paper_scores.empty()) {
      auto out = open_output(args.paper_scores);
      citerank::write_scores_tsv(out, result.papers, graph.paper_names());
    }
    scores = std::move(result.journals);
  } else {
    citerank::ProjectionOptions popt;
    popt.exclude_self_loops = args.exclude_self_loops;
    const auto jg = citerank::project(graph, popt);
    manifest.mark("project");
    if (args.method == "pr") {
      const auto t = citerank::transition_matrix(jg);
      auto result = citerank::pagerank_journal(t, cfg);
      manifest.mark("pagerank_journal");
      manifest.results() = {{"iterations", result.iterations},
                            {"residual", result.residual},
                            {"dangling_journals", t.dangling_count()}};
      scores = std::move(result.scores);
    } else {
      scores = citerank::citation_count_baseline(jg);
      manifest.mark("citation_counts");
    }
  }
  manifest.results()["journals"] = scores.size();
  manifest.results()["ties"] = citerank::tie_summary(scores).to_json();

  {
    auto out = open_output(args.out);
    citerank::write_scores_tsv(out, scores, graph.journal_names());
  }
  manifest.add_output("scores", args.out);
  if (!args.paper_scores.empty() && args.method == "prc") {
    manifest.add_output("paper_scores", args.paper_scores);
  }
  manifest.write(manifest_path(args.manifest, args.out));
}

// ---------------------------------------------------------------------------

struct PathsArgs {
  std::string graph;
  std::string focal;
  std::size_t top_k = 45;
  std::string out;
  std::string manifest;
};

void run_paths(const PathsArgs& args) {
  RunManifest manifest("paths");
  const auto graph = load_graph(args.graph);
  manifest.add_input("graph", args.graph);
  manifest.mark("load_graph");

  if (args.focal.empty()) {
    manifest.config() = {{"focal", nullptr}};
    const auto census = citerank::path_census(graph);
    manifest.mark("path_census");
    write_json(args.out, census.to_json());
    manifest.results() = census.to_json();
    manifest.add_output("census", args.out);
  } else {
    const auto focal = graph.find_journal(args.focal);
    if (!focal) {
      throw citerank::LookupError("unknown focal journal '" + args.focal +
                                  "'; nearest matches: " +
                                  nearest_names(graph.journal_names(), args.focal, 5));
    }
    manifest.config() = {{"focal", args.focal}, {"top_k", args.top_k}};
    const auto table = citerank::focal_path_flows(graph, *focal, args.top_k);
    manifest.mark("focal_path_flows");
    {
      auto out = open_output(args.out);
      citerank::write_path_flow_tsv(out, table, graph);
    }
    manifest.results() = {{"rows", table.rows.size()},
                          {"remainder", table.remainder},
                          {"total", table.total}};
    manifest.add_output("flows", args.out);
  }
  manifest.write(manifest_path(args.manifest, args.out));
}

// ---------------------------------------------------------------------------

struct ProjectArgs {
  std::string graph;
  std::string out;
  std::string manifest;
  bool exclude_self_loops = false;
};

void run_project(const ProjectArgs& args) {
  RunManifest manifest("project");
  const auto graph = load_graph(args.graph);
  manifest.add_input("graph", args.graph);
  manifest.mark("load_graph");
  manifest.config() = {{"exclude_self_loops", args.exclude_self_loops}};

  citerank::ProjectionOptions popt;
  popt.exclude_self_loops = args.exclude_self_loops;
  const auto jg = citerank::project(graph, popt);
  manifest.mark("project");
  {
    auto out = open_output(args.out);
    citerank::write_journal_graph_tsv(out, jg);
  }
  manifest.results() = {{"journals", jg.journal_count()},
                        {"edges", jg.edge_count()},
                        {"total_weight", jg.total_weight()},
                        {"dangling_journals", citerank::transition_matrix(jg).dangling_count()}};
  manifest.add_output("journal_graph", args.out);
  manifest.write(manifest_path(args.manifest, args.out));
}

struct StatsArgs {
  std::string graph;
  std::string out;
  std::string manifest;
};

void run_stats(const StatsArgs& args) {
  RunManifest manifest("stats");
  const auto graph = load_graph(args.graph);
  manifest.add_input("graph", args.graph);
  manifest.mark("load_graph");
  const auto stats = citerank::corpus_stats(graph);
  manifest.mark("corpus_stats");
  write_json(args.out, stats.to_json());
  manifest.results() = {{"papers", stats.paper_count},
                        {"journals", stats.journal_count},
                        {"citations", stats.citation_count}};
  manifest.add_output("stats", args.out);
  manifest.write(manifest_path(args.manifest, args.out));
}

// ---------------------------------------------------------------------------

struct CompareArgs {
  std::string a;
  std::string b;
  std::string curves;
  std::string changes;
  std::string k_grid;
  std::size_t table_k = 20;
  std::string manifest;
};

void run_compare(const CompareArgs& args) {
  RunManifest manifest("compare");
  citerank::NamedScores a;
  citerank::NamedScores b;
  {
    auto in = open_input(args.a);
    a = citerank::read_scores_tsv(in);
  }
  {
    auto in = open_input(args.b);
    b = citerank::read_scores_tsv(in);
  }
  manifest.add_input("a", args.a);
  manifest.add_input("b", args.b);
  const auto aligned = citerank::align_scores(a, b, citerank::EntityKind::journal);
  const auto n = aligned.names.size();
  if (n == 0) throw citerank::DomainError("score files are empty");
  const auto grid = parse_k_grid(args.k_grid, n);
  manifest.config() = {{"k_grid", grid}, {"table_k", args.table_k}};
  manifest.mark("load_scores");

  const auto cmp = citerank::comparison_curves(aligned.a, aligned.b, grid);
  manifest.mark("compare");
  {
    auto out = open_output(args.curves);
    citerank::write_curves_csv(out, cmp);
  }
  {
    auto out = open_output(args.changes);
    const std::size_t rows = args.table_k == 0 ? cmp.rows.size() : std::min(args.table_k, cmp.rows.size());
    citerank::write_rank_change_tsv(out, std::span(cmp.rows).first(rows), aligned.names);
  }
  manifest.results() = {{"journals", n},
                        {"full_kendall_tau", citerank::format_double(cmp.full_tau)},
                        {"ties_a", cmp.ties_a.to_json()},
                        {"ties_b", cmp.ties_b.to_json()}};
  manifest.add_output("curves", args.curves);
  manifest.add_output("changes", args.changes);
  manifest.write(manifest_path(args.manifest, args.curves));
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  citerank::SyntheticCorpusConfig cfg;
  std::string metadata;
  std::string citations;
  std::string manifest;
};

void run_generate(const GenerateArgs& args) {
  RunManifest manifest("generate");
  const auto& c = args.cfg;
  manifest.config() = {{"papers", c.papers},
                       {"journals", c.journals},
                       {"mean_references", c.mean_references},
                       {"new_journal_share", c.new_journal_share},
                       {"same_journal_share", c.same_journal_share},
                       {"uniform_share", c.uniform_share},
                       {"first_year", c.first_year},
                       {"last_year", c.last_year},
                       {"seed", c.seed}};
  const auto corpus = citerank::generate_corpus(c);
  manifest.mark("generate");
  {
    auto out = open_output(args.metadata);
    citerank::write_metadata_tsv(out, corpus);
  }
  {
    auto out = open_output(args.citations);
    citerank::write_citations_tsv(out, corpus);
  }
  manifest.results() = {{"papers", corpus.records.size()}, {"citations", corpus.citations.size()}};
  manifest.add_output("metadata", args.metadata);
  manifest.add_output("citations", args.citations);
  manifest.write(manifest_path(args.manifest, args.metadata));
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string graph;
  std::string out;
  std::string manifest;
  std::string dangling = "teleport";
  double damping = 0.5;
  std::uint64_t steps = 10'000'000;
  std::uint64_t batches = 100;
  std::uint64_t seed = 1;
  double sigmas = 3.0;
};

// Returns false when some journal falls outside the standard-error band.
bool run_verify_walk(const VerifyArgs& args) {
  RunManifest manifest("verify-walk");
  const auto graph = load_graph(args.graph);
  manifest.add_input("graph", args.graph);

  citerank::PageRankConfig cfg;
  cfg.damping = args.damping;
  cfg.dangling = citerank::parse_dangling_policy(args.dangling);
  const auto exact = citerank::pagerank_paths(graph, cfg);
  manifest.mark("pagerank_paths");

  citerank::WalkSimulationConfig sim;
  sim.damping = args.damping;
  sim.dangling = cfg.dangling;
  sim.steps = args.steps;
  sim.batches = args.batches;
  sim.seed = args.seed;
  const auto est = citerank::simulate_journal_walk(graph, sim);
  manifest.mark("simulate");

  json rows = json::array();
  bool pass = true;
  for (std::size_t j = 0; j < graph.journal_count(); ++j) {
    const double diff = exact.journals[j] - est.mean[j];
    const double z = est.standard_error[j] > 0 ? diff / est.standard_error[j] : (diff == 0 ? 0.0 : 1e300);
    const bool ok = std::abs(z) <= args.sigmas;
    pass = pass && ok;
    rows.push_back({{"journal", graph.journal_name(citerank::JournalId{static_cast<std::uint32_t>(j)})},
                    {"power_iteration", exact.journals[j]},
                    {"simulated", est.mean[j]},
                    {"standard_error", est.standard_error[j]},
                    {"z", z},
                    {"within_band", ok}});
  }
  json report = {{"steps", est.steps}, {"sigmas", args.sigmas}, {"pass", pass}, {"journals", rows}};
  write_json(args.out, report);
  manifest.config() = {{"damping", sim.damping},
                       {"dangling", args.dangling},
                       {"steps", sim.steps},
                       {"batches", sim.batches},
                       {"seed", sim.seed},
                       {"sigmas", args.sigmas}};
  manifest.results() = {{"pass", pass}};
  manifest.add_output("report", args.out);
  manifest.write(manifest_path(args.manifest, args.out));
  return pass;
}

void print_error(const std::string& kind, const std::exception& e, json extra = json::object()) {
  json doc = {{"kind", kind}, {"message", e.what()}};
  for (auto& [k, v] : extra.items()) doc[k] = v;
  std::cerr << json{{"error", doc}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"citerank: journal rankings from projected and path-respecting citation walks"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option values; command-line flags win");
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads for parallel kernels (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Parse TSV inputs and write the graph cache");
  ingest_cmd->add_option("--metadata", ingest.metadata, "paper_id<TAB>journal<TAB>year file")->required();
  ingest_cmd->add_option("--citations", ingest.citations, "citing_id<TAB>cited_id file")->required();
  ingest_cmd->add_option("--out", ingest.out, "Graph cache output path")->required();
  ingest_cmd->add_option("--audit", ingest.audit, "Ingestion audit JSON (default <out>.audit.json)");
  ingest_cmd->add_option("--manifest", ingest.manifest, "Run manifest (default <out>.manifest.json)");
  ingest_cmd->add_option("--forward-citations", ingest.forward, "Citations of younger papers: drop or reject")
      ->check(CLI::IsMember({"drop", "reject"}));
  ingest_cmd->add_flag("--strict-years", ingest.strict_years, "Treat same-year citations as forward citations");
  ingest_cmd->add_option("--min-year", ingest.min_year, "Reject metadata rows before this year");
  ingest_cmd->add_option("--max-year", ingest.max_year, "Reject metadata rows after this year");

  RankArgs rank;
  auto* rank_cmd = app.add_subcommand("rank", "Rank journals");
  rank_cmd->add_option("--graph", rank.graph, "Graph cache")->required();
  rank_cmd->add_option("--method", rank.method, "pr (journal network), prc (citation paths), counts")
      ->check(CLI::IsMember({"pr", "prc", "counts"}));
  rank_cmd->add_option("--out", rank.out, "Journal scores TSV")->required();
  rank_cmd->add_option("--paper-scores", rank.paper_scores, "Paper scores TSV (prc only)");
  rank_cmd->add_option("--manifest", rank.manifest, "Run manifest (default <out>.manifest.json)");
  rank_cmd->add_option("--damping", rank.damping, "Damping factor d");
  rank_cmd->add_option("--tolerance", rank.tolerance, "L1 convergence tolerance");
  rank_cmd->add_option("--max-iters", rank.max_iters, "Iteration limit");
  rank_cmd->add_option("--dangling", rank.dangling, "Dangling mass: teleport or uniform")
      ->check(CLI::IsMember({"teleport", "uniform"}));
  rank_cmd->add_flag("--exclude-self-loops", rank.exclude_self_loops,
                     "Drop intra-journal citations from the projection (pr, counts)");

  PathsArgs paths;
  auto* paths_cmd = app.add_subcommand("paths", "Observed vs implied length-2 paths, or focal path flows");
  paths_cmd->add_option("--graph", paths.graph, "Graph cache")->required();
  paths_cmd->add_option("--focal", paths.focal, "Focal journal name; emits a flow table");
  paths_cmd->add_option("--top-k", paths.top_k, "Rows kept in the flow table")->check(CLI::PositiveNumber);
  paths_cmd->add_option("--out", paths.out, "Census JSON or flow TSV")->required();
  paths_cmd->add_option("--manifest", paths.manifest, "Run manifest (default <out>.manifest.json)");

  ProjectArgs project;
  auto* project_cmd = app.add_subcommand("project", "Export the weighted journal graph as TSV");
  project_cmd->add_option("--graph", project.graph, "Graph cache")->required();
  project_cmd->add_option("--out", project.out, "source_journal<TAB>target_journal<TAB>weight output")->required();
  project_cmd->add_option("--manifest", project.manifest, "Run manifest (default <out>.manifest.json)");
  project_cmd->add_flag("--exclude-self-loops", project.exclude_self_loops, "Drop intra-journal citations");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Per-journal size and citation distributions");
  stats_cmd->add_option("--graph", stats.graph, "Graph cache")->required();
  stats_cmd->add_option("--out", stats.out, "Stats JSON")->required();
  stats_cmd->add_option("--manifest", stats.manifest, "Run manifest (default <out>.manifest.json)");

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two journal score files");
  compare_cmd->add_option("--a", compare.a, "Reference scores (e.g. pr)")->required();
  compare_cmd->add_option("--b", compare.b, "Second scores (e.g. prc)")->required();
  compare_cmd->add_option("--curves", compare.curves, "k,overlap,kendall CSV")->required();
  compare_cmd->add_option("--changes", compare.changes, "Rank change TSV")->required();
  compare_cmd->add_option("--k-grid", compare.k_grid, "Comma-separated cutoffs; 'n' means all");
  compare_cmd->add_option("--table-k", compare.table_k, "Rows in the change table (0 = all)");
  compare_cmd->add_option("--manifest", compare.manifest, "Run manifest (default <curves>.manifest.json)");

  GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic corpus as TSV");
  generate_cmd->add_option("--papers", generate.cfg.papers, "Paper count");
  generate_cmd->add_option("--journals", generate.cfg.journals, "Journal count");
  generate_cmd->add_option("--refs", generate.cfg.mean_references, "Mean references per paper");
  generate_cmd->add_option("--same-journal-share", generate.cfg.same_journal_share);
  generate_cmd->add_option("--uniform-share", generate.cfg.uniform_share);
  generate_cmd->add_option("--new-journal-share", generate.cfg.new_journal_share);
  generate_cmd->add_option("--seed", generate.cfg.seed, "Generator seed");
  generate_cmd->add_option("--metadata", generate.metadata, "Metadata TSV output")->required();
  generate_cmd->add_option("--citations", generate.citations, "Citation TSV output")->required();
  generate_cmd->add_option("--manifest", generate.manifest, "Run manifest (default <metadata>.manifest.json)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-walk", "Check prc scores against a Monte-Carlo walker");
  verify_cmd->add_option("--graph", verify.graph, "Graph cache")->required();
  verify_cmd->add_option("--out", verify.out, "Report JSON")->required();
  verify_cmd->add_option("--manifest", verify.manifest, "Run manifest (default <out>.manifest.json)");
  verify_cmd->add_option("--damping", verify.damping, "Damping factor d");
  verify_cmd->add_option("--dangling", verify.dangling)->check(CLI::IsMember({"teleport", "uniform"}));
  verify_cmd->add_option("--steps", verify.steps, "Walker steps");
  verify_cmd->add_option("--batches", verify.batches, "Batches for standard errors");
  verify_cmd->add_option("--seed", verify.seed, "Walker seed");
  verify_cmd->add_option("--sigmas", verify.sigmas, "Allowed deviation in standard errors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  citerank::set_thread_count(threads);
  try {
    if (*ingest_cmd) run_ingest(ingest);
    if (*rank_cmd) run_rank(rank);
    if (*paths_cmd) run_paths(paths);
    if (*project_cmd) run_project(project);
    if (*stats_cmd) run_stats(stats);
    if (*compare_cmd) run_compare(compare);
    if (*generate_cmd) run_generate(generate);
    if (*verify_cmd && !run_verify_walk(verify)) return kExitComputation;
  } catch (const citerank::ConvergenceError& e) {
    print_error("convergence", e, {{"residual", e.residual()}, {"iterations", e.iterations()}});
    return kExitComputation;
  } catch (const citerank::ComputationError& e) {
    print_error("computation", e);
    return kExitComputation;
  } catch (const citerank::InputError& e) {
    print_error("input", e);
    return kExitInput;
  } catch (const std::exception& e) {
    print_error("internal", e);
    return kExitComputation;
  }
  return 0;
}
