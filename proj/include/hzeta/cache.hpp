#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "hzeta/keys.hpp"

namespace hzeta {

struct CacheEntry {
    std::string key;  // ConstantKey::id()
    int digits = 0;   // digits the value is good for
    std::string value;
    std::string error_bound;
    std::string created_at;
    std::string library_version;
};

std::string cache_entry_to_json(const CacheEntry& e);
CacheEntry cache_entry_from_json(const std::string& line);

extern const char* const kLibraryVersion;

// Append-only JSONL store at dir/constants.jsonl; later lines override earlier
// ones for the same key. Writes are serialized by an internal mutex.
class ConstantCache {
public:
    explicit ConstantCache(std::filesystem::path dir);

    std::optional<ConstantResult> lookup(const ConstantKey& key) const;
    void store(const ConstantResult& result);
    // Rewrites the file with one line per key.
    void compact();

    size_t size() const;
    const std::filesystem::path& file() const { return file_; }

private:
    void load();
    void rewrite_locked();

    std::filesystem::path file_;
    std::map<std::string, CacheEntry> entries_;
    size_t lines_ = 0;
    mutable std::mutex mu_;
};

}  // namespace hzeta
