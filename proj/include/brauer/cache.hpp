#pragma once

// Persistent cache of special-fibre point counts keyed by (model hash, q, smooth_only).

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <tuple>

#include "brauer/model.hpp"

namespace brauer {

class PointCountCache {
 public:
  /// Loads the cache file; a missing file gives an empty cache, a malformed one
  /// throws CacheError.
  static PointCountCache open(const std::filesystem::path& path);
  /// Like open(), but a malformed file is discarded and rewritten empty.
  static PointCountCache open_or_reset(const std::filesystem::path& path, bool* was_reset = nullptr);

  std::optional<std::uint64_t> get(std::uint64_t model_hash, std::uint64_t q, bool smooth_only) const;
  /// Records a count and rewrites the file atomically (temp file + rename).
  void put(std::uint64_t model_hash, std::uint64_t q, bool smooth_only, std::uint64_t count);

  std::uint64_t get_or_compute(const ModelSpec& model, unsigned k, bool smooth_only,
                               std::uint64_t budget = kDefaultBudget, bool* hit = nullptr);

  std::size_t size() const { return entries_.size(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  explicit PointCountCache(std::filesystem::path path) : path_(std::move(path)) {}
  void save() const;

  using Key = std::tuple<std::uint64_t, std::uint64_t, bool>;
  std::filesystem::path path_;
  std::map<Key, std::uint64_t> entries_;
};

}  // namespace brauer
