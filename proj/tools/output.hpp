#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace curvewalk::tool {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a over the canonical config dump; identifies a run without pulling
// timestamps into the payload.
inline std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// Write-then-rename so interrupted runs never leave half-written records.
void atomic_write(const std::filesystem::path& path, const std::string& content);

struct Provenance {
  std::string config_digest;
  std::uint64_t seed = 0;

  void stamp(nlohmann::json& j) const {
    j["tool_version"] = kToolVersion;
    j["config_digest"] = config_digest;
    j["seed"] = seed;
  }
};

class JsonlBuffer {
 public:
  void add(nlohmann::json j) { lines_.push_back(std::move(j)); }
  std::string str() const {
    std::string out;
    for (const auto& j : lines_) {
      out += j.dump();
      out += '\n';
    }
    return out;
  }
  bool empty() const { return lines_.empty(); }

 private:
  std::vector<nlohmann::json> lines_;
};

// Minimal csv: caller provides the header and stringified rows.
std::string csv_table(const std::string& header, const std::vector<std::string>& rows);

// out_dir/metadata.json with the wall-clock stamp and argv; kept apart from
// the payload so payloads stay byte-identical across reruns.
void write_metadata(const std::filesystem::path& out_dir, int argc, char** argv,
                    const std::string& config_digest);

}  // namespace curvewalk::tool
