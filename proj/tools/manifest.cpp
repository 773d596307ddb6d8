#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

#include "citerank/errors.hpp"

namespace citerank::cli {

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "' for hashing");

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);

  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[md[i] >> 4]);
    hex.push_back(kHex[md[i] & 0xF]);
  }
  return hex;
}

RunManifest::RunManifest(std::string command) : last_(std::chrono::steady_clock::now()) {
  doc_["tool"] = "citerank";
  doc_["version"] = kToolVersion;
  doc_["command"] = std::move(command);
  doc_["inputs"] = nlohmann::ordered_json::object();
  doc_["config"] = nlohmann::ordered_json::object();
  doc_["results"] = nlohmann::ordered_json::object();
  doc_["anomalies"] = nlohmann::ordered_json::object();
  doc_["outputs"] = nlohmann::ordered_json::object();
  doc_["timings_ms"] = nlohmann::ordered_json::object();
}

void RunManifest::add_input(const std::string& role, const std::filesystem::path& path) {
  doc_["inputs"][role] = {{"file", path.filename().string()}, {"sha256", file_sha256(path)}};
}

void RunManifest::add_output(const std::string& role, const std::filesystem::path& path) {
  doc_["outputs"][role] = {{"file", path.filename().string()}, {"sha256", file_sha256(path)}};
}

void RunManifest::mark(const std::string& stage) {
  const auto now = std::chrono::steady_clock::now();
  doc_["timings_ms"][stage] =
      std::chrono::duration<double, std::milli>(now - last_).count();
  last_ = now;
}

void RunManifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write manifest '" + path.string() + "'");
  out << doc_.dump(2) << '\n';
}

}  // namespace citerank::cli
