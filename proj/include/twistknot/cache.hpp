#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "twistknot/laurent.hpp"

namespace tk {

// Content-addressed store of computed polynomials. Keys are hashed
// descriptions of the input (presentation, p, q, factor, representation,
// character, code version); writes go through a temporary file and a rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);
  // Directory from TWISTKNOT_CACHE, if set.
  static std::optional<ResultCache> from_environment();

  static std::string make_key(const std::vector<std::string>& parts);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;

  std::optional<LaurentCyc> get_polynomial(const std::string& key) const;
  void put_polynomial(const std::string& key, const LaurentCyc& d) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

inline constexpr const char* kCodeVersion = "twistknot-1";

}  // namespace tk
