#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "sqh/errors.hpp"
#include "sqh/textio.hpp"

namespace sqh::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSuffix = ".json";
constexpr const char* kTempSuffix = ".tmp";

std::optional<json> read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

bool current(const json& j) { return j.is_object() && j.value("version", "") == SQH_VERSION; }

}  // namespace

std::string CacheKey::canonical() const {
  std::ostringstream os;
  os << "op=" << op << ";family=" << family << ";rank=" << rank << ";weight=" << weight << ";k=" << k
     << ";version=" << SQH_VERSION;
  return os.str();
}

std::string CacheKey::digest() const {
  const std::string text = canonical();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::optional<SymMatrix> MatrixCache::load(const CacheKey& key) const {
  auto j = read_json(dir_ / (key.digest() + kSuffix));
  if (!j || !current(*j) || j->value("key", "") != key.canonical()) return std::nullopt;
  try {
    const int rows = (*j)["rows"].get<int>(), cols = (*j)["cols"].get<int>();
    const auto& entries = (*j)["entries"];
    if (rows < 0 || cols < 0 || int(entries.size()) != rows) return std::nullopt;
    SymMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      if (int(entries[r].size()) != cols) return std::nullopt;
      for (int c = 0; c < cols; ++c) m(r, c) = parse_ratexpr(entries[r][c].get<std::string>());
    }
    return m;
  } catch (const std::exception&) {
    return std::nullopt;  // a damaged entry is recomputed, and gc removes it
  }
}

void MatrixCache::store(const CacheKey& key, const SymMatrix& m) const {
  fs::create_directories(dir_);
  json j;
  j["key"] = key.canonical();
  j["version"] = SQH_VERSION;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_text(m(r, c)));
    j["entries"].push_back(std::move(row));
  }
  std::random_device rd;
  const fs::path final_path = dir_ / (key.digest() + kSuffix);
  const fs::path tmp = dir_ / (key.digest() + "." + std::to_string(rd()) + kTempSuffix);
  {
    std::ofstream out(tmp);
    if (!out) throw ResourceError("cannot write to cache directory " + dir_.string());
    out << j.dump() << '\n';
    if (!out.flush()) throw ResourceError("cannot write to cache directory " + dir_.string());
  }
  fs::rename(tmp, final_path);
}

CacheStat MatrixCache::stat() const {
  CacheStat s;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return s;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (!e.is_regular_file()) continue;
    const std::string ext = e.path().extension().string();
    if (ext == kTempSuffix) {
      ++s.stale;
      continue;
    }
    if (ext != kSuffix) continue;
    auto j = read_json(e.path());
    if (j && current(*j)) {
      ++s.entries;
      s.bytes += std::size_t(e.file_size());
    } else {
      ++s.stale;
    }
  }
  return s;
}

std::size_t MatrixCache::gc() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  std::vector<fs::path> doomed;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (!e.is_regular_file()) continue;
    const std::string ext = e.path().extension().string();
    if (ext == kTempSuffix) {
      doomed.push_back(e.path());
    } else if (ext == kSuffix) {
      auto j = read_json(e.path());
      if (!j || !current(*j)) doomed.push_back(e.path());
    }
  }
  for (const auto& p : doomed)
    if (fs::remove(p, ec)) ++removed;
  return removed;
}

fs::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SQH_CACHE_DIR"); env && *env) return env;
  return fs::current_path() / ".sqh-cache";
}

}  // namespace sqh::cli
