#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace redbench::util {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Asset lookup order: REDBENCH_ASSET_DIR env var, then the directory baked in
// at build time. Throws if the asset cannot be found in either place.
std::filesystem::path asset_path(std::string_view relative);

}  // namespace redbench::util
