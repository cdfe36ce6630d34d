#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>

#include "cpt/iso_search.hpp"

namespace cpt::cli {

/// On-disk verdict store keyed by (presentation pair, bound, tool version).
/// Found verdicts are re-verified on load; anything unreadable is ignored.
/// Safe to share between sweep workers.
class VerdictCache {
 public:
  explicit VerdictCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  VerdictCache(const VerdictCache& other) : dir_(other.dir_) {}

  /// Cache rooted at $CPT_CACHE_DIR, if set and non-empty.
  static std::optional<VerdictCache> from_env();

  SearchVerdict search(const RingPresentation& a, const RingPresentation& b, int bound,
                       SearchOptions opts = {});

  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }

  static std::string key(const RingPresentation& a, const RingPresentation& b, int bound);

 private:
  std::filesystem::path dir_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

}  // namespace cpt::cli
