#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "sqh/matrix.hpp"

namespace sqh::cli {

// Identifies one cached matrix. The code version is part of the key, so a
// new build never reads entries written by an older one.
struct CacheKey {
  std::string op;
  std::string family;
  int rank = 0;
  std::string weight;
  int k = 0;

  std::string canonical() const;  // "op=theta;family=A;rank=3;weight=-e1;k=0;version=..."
  std::string digest() const;     // hex SHA-256 of canonical()
};

struct CacheStat {
  std::size_t entries = 0;
  std::size_t bytes = 0;
  std::size_t stale = 0;  // other code version, unreadable, or leftover temp files
};

// One JSON file per matrix, named by the key digest; entries are stored as
// canonical text. Writes go to a temporary file that is then renamed.
class MatrixCache {
 public:
  explicit MatrixCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<SymMatrix> load(const CacheKey& key) const;
  void store(const CacheKey& key, const SymMatrix& m) const;
  CacheStat stat() const;
  std::size_t gc() const;  // removes what stat() counts as stale

 private:
  std::filesystem::path dir_;
};

// --cache-dir, then $SQH_CACHE_DIR, then .sqh-cache in the working directory.
std::filesystem::path resolve_cache_dir(const std::string& flag);

}  // namespace sqh::cli
