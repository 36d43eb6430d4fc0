#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace klab {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Content-addressed store of JSON documents: key -> <dir>/<sha256(key)>.json.
/// Writes go through a temporary file and a rename, so concurrent writers
/// never expose partial files.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<std::string> get(const std::string& key);
  void put(const std::string& key, const std::string& document);

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace klab
