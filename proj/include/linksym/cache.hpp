#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "linksym/json_io.hpp"

namespace linksym {

// File-backed cache for enumeration payloads, keyed by descriptor hash.
// Entries carry a checksum; anything that fails to verify is treated as a
// miss so the caller recomputes and overwrites.
class Cache {
 public:
  Cache() = default;
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {}

  bool enabled() const { return enabled_; }

  static std::string key_for(std::uint64_t descriptor_hash) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(descriptor_hash));
    return std::string(buf);
  }

  std::optional<ojson> load(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::filesystem::path file = dir_ / (key + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    ojson entry;
    try {
      entry = ojson::parse(in);
    } catch (const std::exception&) {
      std::cerr << "cache: unreadable entry " << file.string() << ", recomputing\n";
      return std::nullopt;
    }
    if (!entry.contains("key") || !entry.contains("checksum") ||
        !entry.contains("payload") || entry["key"] != key ||
        entry["checksum"] != checksum(entry["payload"])) {
      std::cerr << "cache: checksum mismatch for " << file.string() << ", recomputing\n";
      return std::nullopt;
    }
    return entry["payload"];
  }

  void store(const std::string& key, const ojson& payload) const {
    if (!enabled_) return;
    std::filesystem::create_directories(dir_);
    ojson entry;
    entry["schema_version"] = kSchemaVersion;
    entry["key"] = key;
    entry["checksum"] = checksum(payload);
    entry["payload"] = payload;
    std::ofstream out(dir_ / (key + ".json"), std::ios::trunc);
    out << entry.dump(2) << "\n";
  }

 private:
  static std::string checksum(const ojson& payload) {
    std::string dump = payload.dump();
    return key_for(fnv1a(dump.data(), dump.size()));
  }

  std::filesystem::path dir_;
  bool enabled_ = false;
};

}  // namespace linksym
