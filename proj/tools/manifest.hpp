#pragma once

#include <chrono>
#include <filesystem>
#include <string>

#include "json.hpp"

namespace citerank::cli {

inline constexpr const char* kToolVersion = "1.0.0";

// Hex SHA-256 of a file's bytes. Throws InputError if it cannot be read.
std::string file_sha256(const std::filesystem::path& path);

// One manifest per run. Files are recorded by name and digest only, so two
// runs in different directories produce the same manifest.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  nlohmann::ordered_json& config() { return doc_["config"]; }
  nlohmann::ordered_json& results() { return doc_["results"]; }
  nlohmann::ordered_json& anomalies() { return doc_["anomalies"]; }

  void add_input(const std::string& role, const std::filesystem::path& path);
  void add_output(const std::string& role, const std::filesystem::path& path);

  // Wall time of a named stage, measured from the previous mark.
  void mark(const std::string& stage);

  void write(const std::filesystem::path& path) const;
  const nlohmann::ordered_json& document() const { return doc_; }

 private:
  nlohmann::ordered_json doc_;
  std::chrono::steady_clock::time_point last_;
};

}  // namespace citerank::cli
