#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "quivmod/reineke.hpp"

namespace quivmod {

/// Durable one-file-per-entry result cache. File name is a 64-bit FNV-1a hash
/// of the key; content is versioned JSON of the InvariantRecord with the
/// polynomial in canonical text form. Writes are atomic (write temp file,
/// rename); IO failures degrade to cache misses with a one-time warning.
class ResultCache {
 public:
  static constexpr int schema_version = 1;

  explicit ResultCache(std::filesystem::path dir);

  std::optional<InvariantRecord> get(const std::string& key);
  void put(const std::string& key, const InvariantRecord& record);

  const std::filesystem::path& dir() const { return dir_; }
  bool usable() const { return usable_; }

  static std::string hash_key(const std::string& key);
  static std::string serialize(const InvariantRecord& record);
  static std::optional<InvariantRecord> deserialize(const std::string& text);

 private:
  void warn_once(const std::string& message);

  std::filesystem::path dir_;
  bool usable_ = false;
  bool warned_ = false;
};

}  // namespace quivmod
