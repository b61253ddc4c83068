#include "twistknot/report.hpp"

#include <sstream>

#include "twistknot/error.hpp"

namespace tk {

using nlohmann::json;

json laurent_to_json(const LaurentCyc& d) {
  int q = d.modulus();
  json coeffs = json::array();
  for (auto& c : d.coeffs()) {
    json v = json::array();
    CycInt b = q ? c.bound(q) : c;
    for (auto& x : b.coeffs()) v.push_back(x.get_str());
    coeffs.push_back(std::move(v));
  }
  return {{"q", q}, {"low", d.low()}, {"coeffs", coeffs}, {"text", d.str()}};
}

LaurentCyc laurent_from_json(const json& j) {
  int q = j.at("q").get<int>();
  long low = j.at("low").get<long>();
  std::vector<CycInt> cs;
  for (auto& v : j.at("coeffs")) {
    std::vector<mpz_class> c;
    for (auto& x : v) c.emplace_back(x.get<std::string>());
    if (q == 0) {
      if (c.size() != 1) throw ParseError("integer coefficient expected");
      cs.emplace_back(c[0]);
    } else {
      cs.emplace_back(q, c);
    }
  }
  return LaurentCyc(low, std::move(cs));
}

json rep_to_json(const MetabelianRep& rho) {
  json v = json::object();
  for (std::size_t i = 0; i < rho.v.size(); ++i) v[std::to_string(i + 1)] = rho.v[i];
  return {{"ring", rho.ring.label()}, {"p", rho.ring.p()}, {"q", rho.ring.q()}, {"v", v}};
}

json to_json(const NormVerdict& v) {
  json w = json::array();
  for (auto& x : v.witnesses) {
    json e = {{"method", x.method}, {"detail", x.detail}};
    if (x.prime) e["prime"] = {{"r", x.prime->r}, {"image_of_generator", x.prime->b}};
    if (!x.degrees.empty()) e["factor_degrees"] = x.degrees;
    if (!x.image.empty()) e["image"] = x.image;
    w.push_back(std::move(e));
  }
  return {{"status", to_string(v.status)}, {"certified_norm", v.certified_norm}, {"witnesses", w}, {"notes", v.notes}};
}

json to_json(const ModuleDecomposition& d) {
  json pieces = json::array();
  for (auto& pc : d.pieces)
    pieces.push_back({{"ring", pc.ring.label()}, {"multiplicity", pc.multiplicity}, {"degree", pc.ring.n()}});
  return {{"p", d.p}, {"q", d.q}, {"text", d.str()}, {"dimension", d.dimension()}, {"pieces", pieces}};
}

json to_json(const ObstructionReport& r) {
  json subs = json::array();
  for (std::size_t i = 0; i < r.submodules.size(); ++i)
    subs.push_back({{"submodule", r.submodules[i].str(r.decomposition)}, {"certified", bool(r.certified[i])}});
  json res = json::array();
  for (auto& c : r.results)
    res.push_back({{"submodule", c.submodule},
                   {"representation", rep_to_json(c.rep)},
                   {"character", c.chi.values},
                   {"delta", laurent_to_json(c.delta)},
                   {"reduced", laurent_to_json(c.reduced)},
                   {"norm", to_json(c.norm)}});
  return {{"schema", kReportSchema},
          {"kind", "slice-check"},
          {"knot", r.knot},
          {"p", r.p},
          {"q", r.q},
          {"decomposition", to_json(r.decomposition)},
          {"submodules", subs},
          {"results", res},
          {"verdict", to_string(r.verdict)},
          {"notes", r.notes}};
}

json to_json(const MutantComparison& m) {
  auto lines = [](const std::vector<LineCheck>& ls) {
    json a = json::array();
    for (auto& l : ls) a.push_back({{"line", {l.alpha, l.beta}}, {"certified", l.certified}, {"detail", l.detail}});
    return a;
  };
  return {{"schema", kReportSchema}, {"kind", "compare"},   {"knot1", m.knot1},
          {"knot2", m.knot2},        {"p", m.p},            {"q", m.q},
          {"a_lines", lines(m.a_lines)}, {"b_lines", lines(m.b_lines)}, {"verdict", to_string(m.verdict)},
          {"notes", m.notes}};
}

std::string text_report(const ObstructionReport& r) {
  std::ostringstream os;
  os << "knot " << r.knot << ", p = " << r.p << ", q = " << r.q << "\n";
  os << "H_1(B_" << r.p << "; Z_" << r.q << ") = " << r.decomposition.str() << "\n";
  for (std::size_t i = 0; i < r.submodules.size(); ++i) {
    os << "candidate image of a metabolizer: " << r.submodules[i].str(r.decomposition) << "\n";
    for (auto& c : r.results) {
      if (c.submodule != static_cast<int>(i)) continue;
      os << "  character " << c.chi.str() << " on " << c.rep.ring.label() << "\n";
      os << "    Delta  = " << c.delta.str() << "\n";
      os << "    Delta~ = " << c.reduced.str() << "\n";
      os << "    " << to_string(c.norm.status);
      if (!c.norm.witnesses.empty()) os << " (" << c.norm.witnesses[0].method << "): " << c.norm.witnesses[0].detail;
      os << "\n";
    }
    os << "  " << (r.certified[i] ? "obstructed" : "not obstructed") << "\n";
  }
  for (auto& n : r.notes) os << "note: " << n << "\n";
  os << "verdict: " << to_string(r.verdict) << "\n";
  return os.str();
}

std::string text_report(const MutantComparison& m) {
  std::ostringstream os;
  os << m.knot1 << " vs " << m.knot2 << ", p = " << m.p << ", q = " << m.q << "\n";
  auto lines = [&](const char* side, const std::vector<LineCheck>& ls) {
    for (auto& l : ls)
      os << "  " << side << " line [" << l.alpha << ":" << l.beta << "] "
         << (l.certified ? "certified: " : "open: ") << l.detail << "\n";
  };
  lines("R_a", m.a_lines);
  lines("R_b", m.b_lines);
  for (auto& n : m.notes) os << "note: " << n << "\n";
  os << "verdict: " << to_string(m.verdict) << "\n";
  return os.str();
}

}  // namespace tk
