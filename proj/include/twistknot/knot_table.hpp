#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistknot/pd.hpp"
#include "twistknot/presentation.hpp"

namespace tk {

struct PublishedData {
  std::vector<long> alexander;         // ascending coefficients, may be empty
  std::map<int, std::string> h1;       // p -> cyclic decomposition, e.g. "2^2 14^2"
  std::optional<int> q;                // the prime used with the listed cover
};

struct KnotRecord {
  std::string name;
  std::optional<PDCode> pd;
  std::optional<std::vector<int>> pretzel;
  std::optional<Presentation> presentation;
  PublishedData published;
};

// Source priority: explicit presentation, then PD code, then pretzel vector.
Presentation knot_presentation(const KnotRecord& k);

std::vector<KnotRecord> load_knot_table(const std::string& path);
std::vector<KnotRecord> parse_knot_table(const std::string& json_text);
const KnotRecord* find_knot(const std::vector<KnotRecord>& table, const std::string& name);

// Cyclic factor orders of a decomposition string ("25^2" -> {25, 25}; "1" -> {}).
std::vector<mpz_class> parse_cyclic_decomposition(const std::string& s);
mpz_class decomposition_order(const std::string& s);

}  // namespace tk
