#include "twistknot/knot_table.hpp"

#include <fstream>
#include "json.hpp"
#include <regex>
#include <set>
#include <sstream>

#include "twistknot/error.hpp"
#include "twistknot/pretzel.hpp"

namespace tk {

using nlohmann::json;

namespace {

Presentation presentation_from_json(const json& j) {
  if (j.contains("relations")) {
    std::string text;
    for (auto& r : j.at("relations")) text += r.get<std::string>() + "\n";
    Presentation p = parse_presentation(text);
    if (j.contains("n")) p.n = std::max(p.n, j.at("n").get<int>());
    p.labels.resize(p.n);
    for (int i = 0; i < p.n; ++i) p.labels[i] = i;
    return p;
  }
  int n = j.at("n").get<int>();
  std::vector<Word> rels;
  for (auto& r : j.at("relators")) {
    Word w;
    for (int s : r.get<std::vector<int>>()) {
      if (s == 0 || std::abs(s) > n) throw ParseError("relator letter out of range");
      w.push_back({std::abs(s) - 1, s > 0 ? 1 : -1});
    }
    rels.push_back(w);
  }
  return make_presentation(n, std::move(rels));
}

KnotRecord record_from_json(const json& j) {
  KnotRecord k;
  k.name = j.at("name").get<std::string>();
  if (j.contains("pd") && !j["pd"].is_null()) {
    PDCode pd;
    for (auto& x : j["pd"]) {
      auto v = x.get<std::vector<int>>();
      if (v.size() != 4) throw ParseError(k.name + ": PD entries need 4 labels");
      pd.push_back({v[0], v[1], v[2], v[3]});
    }
    k.pd = pd;
  }
  if (j.contains("pretzel") && !j["pretzel"].is_null()) k.pretzel = j["pretzel"].get<std::vector<int>>();
  if (j.contains("presentation") && !j["presentation"].is_null()) k.presentation = presentation_from_json(j["presentation"]);
  if (!k.pd && !k.pretzel && !k.presentation) throw ParseError(k.name + ": record has no diagram source");
  if (j.contains("published")) {
    const auto& p = j["published"];
    if (p.contains("alexander")) k.published.alexander = p["alexander"].get<std::vector<long>>();
    if (p.contains("h1"))
      for (auto& [key, val] : p["h1"].items()) k.published.h1[std::stoi(key)] = val.get<std::string>();
    if (p.contains("q")) k.published.q = p["q"].get<int>();
  }
  return k;
}

}  // namespace

Presentation knot_presentation(const KnotRecord& k) {
  if (k.presentation) {
    validate_knot_presentation(*k.presentation);
    return *k.presentation;
  }
  if (k.pd) return wirtinger_from_pd(*k.pd);
  if (k.pretzel) return pretzel_presentation(*k.pretzel);
  throw ParseError(k.name + ": record has no diagram source");
}

std::vector<KnotRecord> parse_knot_table(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("knot table is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("knot table must be a JSON array");
  std::vector<KnotRecord> out;
  std::set<std::string> names;
  for (auto& j : doc) {
    try {
      out.push_back(record_from_json(j));
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed knot record: ") + e.what());
    }
    if (!names.insert(out.back().name).second) throw ParseError("duplicate knot name " + out.back().name);
  }
  return out;
}

std::vector<KnotRecord> load_knot_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open knot table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_knot_table(ss.str());
}

const KnotRecord* find_knot(const std::vector<KnotRecord>& table, const std::string& name) {
  for (auto& k : table)
    if (k.name == name) return &k;
  return nullptr;
}

std::vector<mpz_class> parse_cyclic_decomposition(const std::string& s) {
  std::vector<mpz_class> out;
  std::regex tok(R"((\d+)(?:\^(\d+))?)");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), tok); it != std::sregex_iterator(); ++it) {
    mpz_class base((*it)[1].str());
    int e = (*it)[2].matched ? std::stoi((*it)[2].str()) : 1;
    if (base == 1) continue;
    for (int i = 0; i < e; ++i) out.push_back(base);
  }
  return out;
}

mpz_class decomposition_order(const std::string& s) {
  mpz_class o = 1;
  for (auto& c : parse_cyclic_decomposition(s)) o *= c;
  return o;
}

}  // namespace tk
