#include "horn/disk_cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "horn/triple_io.hpp"

namespace horn {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSchema = "horn-triples/1";

// Exclusive lock via O_CREAT|O_EXCL; the holder removes the file on release.
class LockFile {
public:
  explicit LockFile(fs::path path) : path_(std::move(path)) {
    for (int i = 0; i < 200 && !held_; ++i) {
      const int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
      if (fd >= 0) {
        ::close(fd);
        held_ = true;
        break;
      }
      if (errno != EEXIST) break;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
  }
  ~LockFile() {
    if (held_) {
      std::error_code ec;
      fs::remove(path_, ec);
    }
  }
  bool held() const { return held_; }

private:
  fs::path path_;
  bool held_ = false;
};

}  // namespace

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
}

fs::path DiskCache::default_dir() {
  if (const char* env = std::getenv("HORNWB_CACHE_DIR")) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return fs::path(xdg) / "hornwb";
  if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "hornwb";
  return fs::temp_directory_path() / "hornwb-cache";
}

fs::path DiskCache::file_for(int n, int r, Variant v) const {
  return dir_ / ("T_" + std::string(to_string(v)) + "_n" + std::to_string(n) + "_r" +
                 std::to_string(r) + ".jsonl");
}

std::optional<TripleCache::Set> DiskCache::load(int n, int r, Variant v) const {
  std::ifstream in(file_for(n, r, v));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  try {
    const auto header = nlohmann::json::parse(line);
    if (header.at("schema").get<std::string>() != kSchema) return std::nullopt;
    if (header.at("n").get<int>() != n || header.at("r").get<int>() != r ||
        header.at("variant").get<std::string>() != to_string(v))
      return std::nullopt;
    const auto count = header.at("count").get<std::size_t>();
    TripleCache::Set set;
    set.reserve(count);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      set.push_back(triple_from_json(nlohmann::json::parse(line)));
    }
    if (set.size() != count) return std::nullopt;
    if (!std::is_sorted(set.begin(), set.end())) return std::nullopt;
    return set;
  } catch (const std::exception&) {
    return std::nullopt;  // corrupted cache: recompute
  }
}

bool DiskCache::save(int n, int r, Variant v, const TripleCache::Set& set) const {
  const fs::path target = file_for(n, r, v);
  LockFile lock(target.string() + ".lock");
  if (!lock.held()) return false;
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << nlohmann::json{{"schema", kSchema},
                          {"n", n},
                          {"r", r},
                          {"variant", std::string(to_string(v))},
                          {"count", set.size()}}
               .dump()
        << "\n";
    for (const auto& t : set) out << triple_to_json(t, v).dump() << "\n";
    if (!out) return false;
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  return !ec;
}

std::shared_ptr<const TripleCache::Set> DiskCache::fetch(int n, int r, Variant v,
                                                         TripleCache& memo) const {
  if (auto hit = memo.find(n, r, v)) return hit;
  if (auto loaded = load(n, r, v)) return memo.store(n, r, v, std::move(*loaded));
  auto computed = enumerate_t(n, r, v, memo);
  save(n, r, v, *computed);
  return computed;
}

}  // namespace horn
