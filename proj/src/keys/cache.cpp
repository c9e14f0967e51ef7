#include "hzeta/cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hzeta/error.hpp"

namespace hzeta {

const char* const kLibraryVersion = "0.1.0";

std::string cache_entry_to_json(const CacheEntry& e) {
    nlohmann::ordered_json j;
    j["key"] = e.key;
    j["digits"] = e.digits;
    j["value"] = e.value;
    j["error_bound"] = e.error_bound;
    j["created_at"] = e.created_at;
    j["library_version"] = e.library_version;
    return j.dump();
}

CacheEntry cache_entry_from_json(const std::string& line) {
    auto j = nlohmann::json::parse(line);
    CacheEntry e;
    e.key = j.at("key").get<std::string>();
    e.digits = j.at("digits").get<int>();
    e.value = j.at("value").get<std::string>();
    e.error_bound = j.at("error_bound").get<std::string>();
    e.created_at = j.value("created_at", "");
    e.library_version = j.value("library_version", "");
    return e;
}

namespace {

std::string utc_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

}  // namespace

ConstantCache::ConstantCache(std::filesystem::path dir) : file_(std::move(dir) / "constants.jsonl") { load(); }

void ConstantCache::load() {
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++lines_;
        try {
            CacheEntry e = cache_entry_from_json(line);
            entries_[e.key] = std::move(e);
        } catch (const std::exception&) {
            // a torn or foreign line only loses that entry
        }
    }
}

std::optional<ConstantResult> ConstantCache::lookup(const ConstantKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key.id());
    if (it == entries_.end() || it->second.digits < key.digits) return std::nullopt;
    const long bits = bits_for_digits(it->second.digits + kEvalGuard + 10);
    ConstantResult r{key, Real::parse(it->second.value, bits), Real::parse(it->second.error_bound, bits), std::nullopt};
    if (family_info(key.family).exact) r.exact = exact_value(key);
    return r;
}

void ConstantCache::store(const ConstantResult& result) {
    CacheEntry e;
    e.key = result.key.id();
    e.digits = result.key.digits;
    e.value = result.value.to_sci(result.key.digits + kEvalGuard + 5);
    e.error_bound = result.error_bound.to_sci(6);
    e.created_at = utc_now();
    e.library_version = kLibraryVersion;

    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(e.key);
    if (it != entries_.end() && it->second.digits >= e.digits) return;
    std::filesystem::create_directories(file_.parent_path());
    std::ofstream out(file_, std::ios::app);
    if (!out) throw Error("cannot write cache file " + file_.string());
    out << cache_entry_to_json(e) << '\n';
    ++lines_;
    entries_[e.key] = std::move(e);
    if (lines_ > 2 * entries_.size() + 16) {
        out.close();
        rewrite_locked();
    }
}

void ConstantCache::compact() {
    std::lock_guard<std::mutex> lock(mu_);
    std::filesystem::create_directories(file_.parent_path());
    rewrite_locked();
}

void ConstantCache::rewrite_locked() {
    std::filesystem::path tmp = file_;
    tmp += ".tmp";
    {
        std::ofstream w(tmp, std::ios::trunc);
        for (const auto& [k, v] : entries_) w << cache_entry_to_json(v) << '\n';
    }
    std::filesystem::rename(tmp, file_);
    lines_ = entries_.size();
}

size_t ConstantCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

}  // namespace hzeta
