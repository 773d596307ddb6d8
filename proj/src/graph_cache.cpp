#include <array>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "citerank/errors.hpp"
#include "citerank/paper_graph.hpp"
#include "graph_assembler.hpp"

namespace citerank {

namespace {

constexpr std::array<char, 8> kMagic = {'C', 'R', 'G', 'R', 'A', 'P', 'H', '\0'};
constexpr std::uint8_t kVersion = 1;

class LittleEndianWriter {
 public:
  explicit LittleEndianWriter(std::ostream& out) : out_(out) {}

  void bytes(const void* data, std::size_t n) {
    out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
  }

  template <typename T>
  void integer(T value) {
    using U = std::make_unsigned_t<T>;
    auto u = static_cast<U>(value);
    std::array<unsigned char, sizeof(T)> buf{};
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf[i] = static_cast<unsigned char>(u & 0xFFu);
      u = static_cast<U>(u >> 8);
    }
    bytes(buf.data(), buf.size());
  }

  void string(const std::string& s) {
    integer(static_cast<std::uint32_t>(s.size()));
    bytes(s.data(), s.size());
  }

 private:
  std::ostream& out_;
};

class LittleEndianReader {
 public:
  explicit LittleEndianReader(std::istream& in) : in_(in) {}

  void bytes(void* data, std::size_t n) {
    in_.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) throw IngestError("graph cache is truncated");
  }

  template <typename T>
  T integer() {
    using U = std::make_unsigned_t<T>;
    std::array<unsigned char, sizeof(T)> buf{};
    bytes(buf.data(), buf.size());
    U u = 0;
    for (std::size_t i = sizeof(T); i-- > 0;) u = static_cast<U>((u << 8) | buf[i]);
    return static_cast<T>(u);
  }

  std::string string() {
    const auto len = integer<std::uint32_t>();
    std::string s(len, '\0');
    bytes(s.data(), len);
    return s;
  }

 private:
  std::istream& in_;
};

}  // namespace

void write_graph_cache(std::ostream& out, const PaperGraph& g) {
  LittleEndianWriter w(out);
  w.bytes(kMagic.data(), kMagic.size());
  w.integer<std::uint8_t>(kVersion);
  const std::array<char, 7> reserved{};
  w.bytes(reserved.data(), reserved.size());
  w.integer<std::uint64_t>(g.paper_count());
  w.integer<std::uint64_t>(g.journal_count());
  w.integer<std::uint64_t>(g.edge_count());
  for (auto v : g.out_offsets()) w.integer<std::uint64_t>(v);
  for (auto v : g.out_targets()) w.integer<std::uint32_t>(v);
  for (auto v : g.journal_of()) w.integer<std::uint32_t>(v);
  for (auto v : g.years()) w.integer<std::int32_t>(v);
  for (const auto& s : g.paper_names()) w.string(s);
  for (const auto& s : g.journal_names()) w.string(s);
  if (!out) throw IngestError("failed writing graph cache");
}

PaperGraph read_graph_cache(std::istream& in) {
  LittleEndianReader r(in);
  std::array<char, 8> magic{};
  r.bytes(magic.data(), magic.size());
  if (magic != kMagic) throw IngestError("not a graph cache (bad magic)");
  const auto version = r.integer<std::uint8_t>();
  if (version != kVersion) {
    throw IngestError("unsupported graph cache version " + std::to_string(version));
  }
  std::array<char, 7> reserved{};
  r.bytes(reserved.data(), reserved.size());

  const auto n = r.integer<std::uint64_t>();
  const auto journals = r.integer<std::uint64_t>();
  const auto edges = r.integer<std::uint64_t>();
  constexpr auto kMaxId = std::numeric_limits<std::uint32_t>::max();
  if (n > kMaxId || journals > kMaxId) throw IngestError("graph cache header is corrupt");

  std::vector<std::uint64_t> offsets(n + 1);
  for (auto& v : offsets) v = r.integer<std::uint64_t>();
  if (offsets.front() != 0 || offsets.back() != edges) {
    throw IngestError("graph cache offsets are inconsistent with the edge count");
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (offsets[p] > offsets[p + 1]) throw IngestError("graph cache offsets are not monotone");
  }
  std::vector<std::uint32_t> targets(edges);
  for (auto& v : targets) {
    v = r.integer<std::uint32_t>();
    if (v >= n) throw IngestError("graph cache edge target out of range");
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (auto k = offsets[p] + 1; k < offsets[p + 1]; ++k) {
      if (targets[k - 1] >= targets[k]) throw IngestError("graph cache adjacency row is not sorted");
    }
    for (auto k = offsets[p]; k < offsets[p + 1]; ++k) {
      if (targets[k] == p) throw IngestError("graph cache contains a self-citation");
    }
  }
  std::vector<std::uint32_t> journal_of(n);
  for (auto& v : journal_of) {
    v = r.integer<std::uint32_t>();
    if (v >= journals) throw IngestError("graph cache journal id out of range");
  }
  std::vector<int> years(n);
  for (auto& v : years) v = r.integer<std::int32_t>();
  std::vector<std::string> paper_names(n);
  for (auto& s : paper_names) s = r.string();
  std::vector<std::string> journal_names(journals);
  for (auto& s : journal_names) s = r.string();

  return GraphAssembler::assemble(journals, std::move(offsets), std::move(targets),
                                  std::move(journal_of), std::move(years), std::move(paper_names),
                                  std::move(journal_names));
}

}  // namespace citerank
