#pragma once

#include <filesystem>

#include "wb/affine_weyl.hpp"

namespace wb {

/// Versioned on-disk store of reduced words, one file per group label,
/// used to seed the in-memory memo of an AffineWeyl context. Entries are
/// validated on load by recomposition, so a stale or corrupt file cannot
/// change any result. Writes go through a temp file and a rename.
class WordCache {
 public:
  static constexpr int kVersion = 1;

  /// WORKBENCH_CACHE_DIR when set, else ".workbench-cache".
  static std::filesystem::path default_dir();
  static std::filesystem::path file_for(const std::filesystem::path& dir,
                                        const std::string& group);

  explicit WordCache(std::string group) : group_(std::move(group)) {}

  /// Loads the cache file for the group of W; absent file gives an empty
  /// cache, a corrupt file throws.
  static WordCache load(const std::filesystem::path& dir, const AffineWeyl& W);

  void absorb(const AffineWeyl& W);  // snapshot the context's reduced words
  void seed(const AffineWeyl& W) const;
  void save(const std::filesystem::path& dir) const;

  const std::string& group() const { return group_; }
  std::size_t size() const { return words_.size(); }

 private:
  std::string group_;
  std::map<ExtAffine, ReducedWord, ExtAffineLess> words_;
};

}  // namespace wb
