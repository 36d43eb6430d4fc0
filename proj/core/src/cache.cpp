#include "klab/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "klab/error.hpp"
#include "klab/report.hpp"

namespace klab {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

ResultCache::ResultCache(std::filesystem::path directory) : dir_(std::move(directory)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path ResultCache::path_for(const std::string& key) const { return dir_ / (sha256_hex(key) + ".json"); }

std::optional<std::string> ResultCache::get(const std::string& key) {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // Entries store their key; a mismatch (or a damaged file) counts as a miss.
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("key", std::string{}) != key || !doc.contains("value")) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return doc["value"].dump();
}

void ResultCache::put(const std::string& key, const std::string& document) {
  nlohmann::json doc;
  doc["key"] = key;
  doc["value"] = nlohmann::json::parse(document);
  write_file_atomic(path_for(key), doc.dump() + "\n");
}

}  // namespace klab
