#include "wb/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "wb/textio.hpp"

namespace wb {

std::filesystem::path WordCache::default_dir() {
  if (const char* env = std::getenv("WORKBENCH_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".workbench-cache");
}

std::filesystem::path WordCache::file_for(const std::filesystem::path& dir,
                                          const std::string& group) {
  return dir / (group + ".words.json");
}

WordCache WordCache::load(const std::filesystem::path& dir, const AffineWeyl& W) {
  WordCache cache(W.datum().name);
  const std::filesystem::path path = file_for(dir, cache.group_);
  std::ifstream in(path);
  if (!in) return cache;  // no cache yet
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error("cache file " + path.string() + " is not valid JSON: " + e.what());
  }
  if (j.value("version", -1) != kVersion) return cache;  // stale format, recompute
  if (j.value("group", "") != cache.group_)
    throw error("cache file " + path.string() + " belongs to group '" +
                j.value("group", "") + "'");
  for (const Json& entry : j.at("entries")) {
    ExtAffine x = element_from_json(W, entry.at("x"));
    ReducedWord rw;
    rw.omega = element_from_json(W, entry.at("omega"));
    rw.word = entry.at("word").get<std::vector<int>>();
    cache.words_.emplace(x, std::move(rw));
  }
  return cache;
}

void WordCache::absorb(const AffineWeyl& W) {
  if (W.datum().name != group_) throw error("cache group mismatch");
  for (auto& [x, rw] : W.snapshot_words()) words_.insert_or_assign(x, rw);
}

void WordCache::seed(const AffineWeyl& W) const {
  if (W.datum().name != group_) throw error("cache group mismatch");
  W.seed_words(words_);  // validates every entry
}

void WordCache::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  Json j;
  j["version"] = kVersion;
  j["group"] = group_;
  Json entries = Json::array();
  for (const auto& [x, rw] : words_) {
    Json e;
    e["x"] = element_to_json(x);
    e["omega"] = element_to_json(rw.omega);
    e["word"] = rw.word;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);

  const std::filesystem::path final_path = file_for(dir, group_);
  const std::filesystem::path tmp_path = final_path.string() + ".tmp";
  {
    std::ofstream out(tmp_path);
    if (!out) throw error("cannot write cache file " + tmp_path.string());
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp_path, final_path);
}

}  // namespace wb
