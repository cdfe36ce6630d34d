#include "cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "cpt/serialize.hpp"

namespace cpt::cli {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::optional<VerdictCache> VerdictCache::from_env() {
  const char* dir = std::getenv("CPT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return VerdictCache(dir);
}

std::string VerdictCache::key(const RingPresentation& a, const RingPresentation& b, int bound) {
  const std::string material = to_json(a).dump() + "|" + to_json(b).dump() + "|" +
                               std::to_string(bound) + "|" + library_version();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(material)));
  return buf;
}

SearchVerdict VerdictCache::search(const RingPresentation& a, const RingPresentation& b, int bound,
                                   SearchOptions opts) {
  const std::filesystem::path file = dir_ / (key(a, b, bound) + ".json");
  if (std::ifstream in{file}) {
    try {
      std::stringstream ss;
      ss << in.rdbuf();
      SearchVerdict v = verdict_from_json(parse_json_text(ss.str()));
      if (!v.found()) {
        if (v.bound == bound) {
          ++hits_;
          return v;
        }
      } else if (verify(*v.certificate, a, b)) {
        v.bound = bound;
        ++hits_;
        return v;
      }
    } catch (const std::exception&) {
      // Stale or corrupt entry; recompute below.
    }
  }
  ++misses_;
  SearchVerdict v = cpt::search(a, b, bound, opts);
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  // Unique per thread so concurrent writers of one key never share a temp file.
  std::ostringstream tmp_name;
  tmp_name << file.string() << '.' << std::this_thread::get_id() << ".tmp";
  const std::filesystem::path tmp = tmp_name.str();
  {
    std::ofstream out{tmp};
    if (out) out << to_json(v).dump() << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
  return v;
}

}  // namespace cpt::cli
