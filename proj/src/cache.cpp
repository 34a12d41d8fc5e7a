#include "brauer/cache.hpp"

#include <fstream>
#include <sstream>

namespace brauer {

namespace {
constexpr const char* kHeader = "# brauer-local point-count cache v1";
}

PointCountCache PointCountCache::open(const std::filesystem::path& path) {
  PointCountCache cache(path);
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && line == kHeader, ErrorKind::Cache,
          "cache file " + path.string() + " has no valid header");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::uint64_t hash = 0, q = 0, count = 0;
    int smooth = -1;
    std::string extra;
    fields >> std::hex >> hash >> std::dec >> q >> smooth >> count;
    require(!fields.fail() && !(fields >> extra) && (smooth == 0 || smooth == 1) && q >= 2,
            ErrorKind::Cache, "cache file " + path.string() + ": malformed record on line " +
                                  std::to_string(lineno));
    cache.entries_[{hash, q, smooth == 1}] = count;
  }
  return cache;
}

PointCountCache PointCountCache::open_or_reset(const std::filesystem::path& path, bool* was_reset) {
  if (was_reset) *was_reset = false;
  try {
    return open(path);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Cache) throw;
  }
  if (was_reset) *was_reset = true;
  PointCountCache cache(path);
  cache.save();
  return cache;
}

std::optional<std::uint64_t> PointCountCache::get(std::uint64_t model_hash, std::uint64_t q,
                                                  bool smooth_only) const {
  auto it = entries_.find({model_hash, q, smooth_only});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PointCountCache::put(std::uint64_t model_hash, std::uint64_t q, bool smooth_only, std::uint64_t count) {
  entries_[{model_hash, q, smooth_only}] = count;
  save();
}

std::uint64_t PointCountCache::get_or_compute(const ModelSpec& model, unsigned k, bool smooth_only,
                                              std::uint64_t budget, bool* hit) {
  const std::uint64_t q = FiniteField::get(model.p, k).order();
  if (auto c = get(model.hash(), q, smooth_only)) {
    if (hit) *hit = true;
    return *c;
  }
  if (hit) *hit = false;
  const std::uint64_t count = count_points(model, k, smooth_only, budget);
  put(model.hash(), q, smooth_only, count);
  return count;
}

void PointCountCache::save() const {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    require(static_cast<bool>(out), ErrorKind::Cache, "cannot write " + tmp.string());
    out << kHeader << '\n';
    for (const auto& [key, count] : entries_) {
      const auto& [hash, q, smooth] = key;
      out << std::hex << hash << std::dec << ' ' << q << ' ' << (smooth ? 1 : 0) << ' ' << count << '\n';
    }
    require(static_cast<bool>(out.flush()), ErrorKind::Cache, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace brauer
