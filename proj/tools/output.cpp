#include "output.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

namespace curvewalk::tool {

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string csv_table(const std::string& header, const std::vector<std::string>& rows) {
  std::string out = header + "\n";
  for (const auto& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

void write_metadata(const std::filesystem::path& out_dir, int argc, char** argv,
                    const std::string& config_digest) {
  nlohmann::json meta;
  auto now = std::chrono::system_clock::now().time_since_epoch();
  meta["unix_time"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  meta["tool_version"] = kToolVersion;
  meta["config_digest"] = config_digest;
  nlohmann::json args = nlohmann::json::array();
  for (int i = 0; i < argc; ++i) args.push_back(argv[i]);
  meta["argv"] = args;
  atomic_write(out_dir / "metadata.json", meta.dump(2) + "\n");
}

}  // namespace curvewalk::tool
