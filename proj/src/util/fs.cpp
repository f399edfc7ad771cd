#include "redbench/util/fs.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "redbench/errors.hpp"

#ifndef REDBENCH_DEFAULT_ASSET_DIR
#define REDBENCH_DEFAULT_ASSET_DIR ""
#endif

namespace redbench::util {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_error, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::filesystem::path asset_path(std::string_view relative) {
  if (const char* env = std::getenv("REDBENCH_ASSET_DIR")) {
    auto p = std::filesystem::path(env) / relative;
    if (std::filesystem::exists(p)) return p;
  }
  auto p = std::filesystem::path(REDBENCH_DEFAULT_ASSET_DIR) / relative;
  if (std::filesystem::exists(p)) return p;
  fail(Errc::io_error,
       "asset not found: " + std::string(relative) +
           " (set REDBENCH_ASSET_DIR or install assets)");
}

}  // namespace redbench::util
