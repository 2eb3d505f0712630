#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jiso/family.hpp"
#include "jiso/solver.hpp"

namespace jiso {

// One cached mu value, keyed by (n,m,k). Certified entries are never
// overwritten by uncertified ones.
struct CacheEntry {
  int n = 0;
  int m = 0;
  std::uint64_t k = 0;
  std::uint64_t mu = 0;
  std::string method;
  bool certified = false;
  std::optional<Family> witness;
  std::string timestamp;  // ISO-8601 UTC
};

// A single JSON file holding an array of entries, rewritten atomically
// (write temp, rename). A sibling .lock file makes writes single-writer:
// a second concurrent writer fails fast instead of corrupting the file.
class MuCache {
 public:
  explicit MuCache(std::string path);

  // Resolves --cache flag, JOHNSON_ISO_CACHE, then ./mu_cache.json.
  static std::string default_path(const std::string& flag_value = "");

  const std::string& path() const { return path_; }

  std::optional<CacheEntry> find(int n, int m, std::uint64_t k) const;

  // Applies the certified-wins rule; returns false when the existing
  // certified entry was kept.
  bool put(const CacheEntry& entry);

  const std::vector<CacheEntry>& entries() const { return entries_; }

  // Load is lenient about a missing file (empty cache) but throws on
  // malformed JSON. Save throws if the lock is held elsewhere.
  void load();
  void save() const;

 private:
  std::string path_;
  std::vector<CacheEntry> entries_;
};

CacheEntry cache_entry_from_result(const MuResult& result, bool keep_witness);

}  // namespace jiso
