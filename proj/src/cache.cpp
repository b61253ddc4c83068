#include "twistknot/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "json.hpp"
#include "twistknot/report.hpp"

namespace tk {

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::optional<ResultCache> ResultCache::from_environment() {
  const char* d = std::getenv("TWISTKNOT_CACHE");
  if (!d || !*d) return std::nullopt;
  return ResultCache(d);
}

std::string ResultCache::make_key(const std::vector<std::string>& parts) {
  // two independent 64-bit hashes of the length-prefixed parts
  std::string joined;
  for (auto& p : parts) joined += std::to_string(p.size()) + ":" + p;
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << fnv1a(joined) << std::setw(16)
     << fnv1a(joined, 0x84222325cbf29ce4ULL);
  return os.str();
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  return dir_ / key.substr(0, 2) / (key + ".json");
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  auto target = path_for(key);
  std::filesystem::create_directories(target.parent_path());
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << value;
  }
  std::filesystem::rename(tmp, target);
}

std::optional<LaurentCyc> ResultCache::get_polynomial(const std::string& key) const {
  auto s = get(key);
  if (!s) return std::nullopt;
  try {
    return laurent_from_json(nlohmann::json::parse(*s));
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entry: recompute
  }
}

void ResultCache::put_polynomial(const std::string& key, const LaurentCyc& d) const {
  put(key, laurent_to_json(d).dump());
}

}  // namespace tk
