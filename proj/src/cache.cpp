#include "quivmod/cache.hpp"

#include <json.hpp>
#include <unistd.h>

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace quivmod {

namespace {

std::string unique_suffix() {
  static std::atomic<std::uint64_t> counter{0};
  std::ostringstream os;
  os << ::getpid() << "." << std::this_thread::get_id() << "." << counter.fetch_add(1);
  return os.str();
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  usable_ = !ec && std::filesystem::is_directory(dir_, ec) && !ec;
  if (!usable_) warn_once("cache directory '" + dir_.string() + "' is not usable; caching disabled");
}

void ResultCache::warn_once(const std::string& message) {
  if (warned_) return;
  warned_ = true;
  std::cerr << "warning: " << message << "\n";
}

std::string ResultCache::hash_key(const std::string& key) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string ResultCache::serialize(const InvariantRecord& record) {
  nlohmann::json j;
  j["descriptor"] = record.descriptor;
  j["dim"] = record.dim.entries();
  j["poincare"] = record.poincare.to_string("q");
  j["euler"] = record.euler.get_str();
  j["schema_version"] = schema_version;
  return j.dump(2) + "\n";
}

std::optional<InvariantRecord> ResultCache::deserialize(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || j.value("schema_version", -1) != schema_version) return std::nullopt;
    InvariantRecord rec;
    rec.descriptor = j.at("descriptor").get<std::string>();
    rec.dim = DimensionVector(j.at("dim").get<std::vector<int>>());
    rec.poincare = LaurentPolynomial::parse(j.at("poincare").get<std::string>(), "q");
    rec.euler = Int(j.at("euler").get<std::string>());
    return rec;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<InvariantRecord> ResultCache::get(const std::string& key) {
  if (!usable_) return std::nullopt;
  try {
    std::filesystem::path file = dir_ / (hash_key(key) + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    auto rec = deserialize(buf.str());
    // hash collisions and stale schemas read as misses
    if (rec && InvariantRecord::cache_key(rec->descriptor, rec->dim) == key) return rec;
    return std::nullopt;
  } catch (const std::exception& e) {
    warn_once(std::string("cache read failed: ") + e.what());
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& key, const InvariantRecord& record) {
  if (!usable_) return;
  try {
    std::filesystem::path file = dir_ / (hash_key(key) + ".json");
    std::filesystem::path tmp = dir_ / (hash_key(key) + ".tmp." + unique_suffix());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) {
        warn_once("cache write failed: cannot open '" + tmp.string() + "'");
        return;
      }
      out << serialize(record);
      if (!out) {
        warn_once("cache write failed: short write to '" + tmp.string() + "'");
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        return;
      }
    }
    std::filesystem::rename(tmp, file);  // atomic within the directory
  } catch (const std::exception& e) {
    warn_once(std::string("cache write failed: ") + e.what());
  }
}

}  // namespace quivmod
