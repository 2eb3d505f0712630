#include "jiso/cache.hpp"

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fcntl.h>
#include <fstream>
#include <stdexcept>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "jiso/subset.hpp"

namespace jiso {

namespace {

using Json = nlohmann::ordered_json;

std::string now_iso8601_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json family_to_json(const Family& fam) {
  Json arr = Json::array();
  for (Mask x : fam.members) {
    arr.push_back(elements(x));
  }
  return arr;
}

Family family_from_json(int n, int m, const Json& arr) {
  std::vector<Mask> members;
  members.reserve(arr.size());
  for (const Json& row : arr) {
    members.push_back(mask_of(row.get<std::vector<int>>()));
  }
  return Family::of(n, m, std::move(members));
}

// Holds <path>.lock for the lifetime of a save; a concurrent writer fails
// fast instead of racing the rename.
class LockFile {
 public:
  explicit LockFile(const std::string& path) : path_(path + ".lock") {
    fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd_ < 0) {
      throw std::runtime_error("cache is locked by another writer: " + path_);
    }
  }
  ~LockFile() {
    if (fd_ >= 0) {
      ::close(fd_);
      ::unlink(path_.c_str());
    }
  }
  LockFile(const LockFile&) = delete;
  LockFile& operator=(const LockFile&) = delete;

 private:
  std::string path_;
  int fd_ = -1;
};

}  // namespace

MuCache::MuCache(std::string path) : path_(std::move(path)) {}

std::string MuCache::default_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("JOHNSON_ISO_CACHE"); env && *env) {
    return env;
  }
  return "./mu_cache.json";
}

std::optional<CacheEntry> MuCache::find(int n, int m, std::uint64_t k) const {
  for (const CacheEntry& e : entries_) {
    if (e.n == n && e.m == m && e.k == k) return e;
  }
  return std::nullopt;
}

bool MuCache::put(const CacheEntry& entry) {
  for (CacheEntry& e : entries_) {
    if (e.n == entry.n && e.m == entry.m && e.k == entry.k) {
      if (e.certified && !entry.certified) return false;
      e = entry;
      return true;
    }
  }
  entries_.push_back(entry);
  return true;
}

void MuCache::load() {
  entries_.clear();
  std::ifstream in(path_);
  if (!in) return;  // no cache yet
  Json doc;
  try {
    in >> doc;
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("malformed cache file " + path_ + ": " +
                             e.what());
  }
  if (!doc.is_array()) {
    throw std::runtime_error("cache file is not a JSON array: " + path_);
  }
  for (const Json& item : doc) {
    CacheEntry e;
    e.n = item.at("n").get<int>();
    e.m = item.at("m").get<int>();
    e.k = item.at("k").get<std::uint64_t>();
    e.mu = item.at("mu").get<std::uint64_t>();
    e.method = item.at("method").get<std::string>();
    e.certified = item.at("certified").get<bool>();
    e.timestamp = item.value("timestamp", "");
    if (item.contains("witness") && !item["witness"].is_null()) {
      e.witness = family_from_json(e.n, e.m, item["witness"]);
    }
    put(e);
  }
}

void MuCache::save() const {
  LockFile lock(path_);
  Json doc = Json::array();
  for (const CacheEntry& e : entries_) {
    Json item;
    item["n"] = e.n;
    item["m"] = e.m;
    item["k"] = e.k;
    item["mu"] = e.mu;
    item["method"] = e.method;
    item["certified"] = e.certified;
    if (e.witness) {
      item["witness"] = family_to_json(*e.witness);
    }
    item["timestamp"] = e.timestamp;
    doc.push_back(std::move(item));
  }
  std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache temp: " + tmp);
    out << doc.dump(2) << '\n';
  }
  if (std::rename(tmp.c_str(), path_.c_str()) != 0) {
    int err = errno;
    std::remove(tmp.c_str());
    throw std::runtime_error("cache rename failed: " +
                             std::string(std::strerror(err)));
  }
}

CacheEntry cache_entry_from_result(const MuResult& result, bool keep_witness) {
  CacheEntry e;
  e.n = result.n;
  e.m = result.m;
  e.k = result.k;
  e.mu = result.mu;
  e.method = to_string(result.method);
  e.certified = result.certified;
  if (keep_witness) e.witness = result.witness;
  e.timestamp = now_iso8601_utc();
  return e;
}

}  // namespace jiso
