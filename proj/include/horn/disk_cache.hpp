#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "horn/enumeration.hpp"

namespace horn {

// JSON-lines cache of computed triple sets, one file per (n,r,variant) with
// a schema-version header line. Corrupted or mismatched files are ignored.
// Writes go through a lock file plus atomic rename, so a single writer wins.
class DiskCache {
public:
  explicit DiskCache(std::filesystem::path dir);

  // Resolution order: explicit path, HORNWB_CACHE_DIR, XDG_CACHE_HOME or
  // ~/.cache, each with a hornwb suffix.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<TripleCache::Set> load(int n, int r, Variant v) const;
  bool save(int n, int r, Variant v, const TripleCache::Set& set) const;

  // Loads from disk if present, otherwise enumerates and persists.
  std::shared_ptr<const TripleCache::Set> fetch(int n, int r, Variant v,
                                                TripleCache& memo) const;

private:
  std::filesystem::path file_for(int n, int r, Variant v) const;
  std::filesystem::path dir_;
};

}  // namespace horn
