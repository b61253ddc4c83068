// twistknot: twisted Alexander polynomials and slice obstructions from the command line.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "twistknot/error.hpp"
#include "twistknot/knot_table.hpp"
#include "twistknot/obstruction.hpp"
#include "twistknot/pretzel.hpp"
#include "twistknot/report.hpp"

namespace {

using namespace tk;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconclusive = 3;

struct KnotSpec {
  std::string name;
  std::string pretzel;
  std::string pd;
  std::string presentation;
};

std::string data_dir() {
  if (const char* d = std::getenv("TWISTKNOT_DATA"); d && *d) return d;
  return TWISTKNOT_DATA_DIR;
}

std::vector<KnotRecord> bundled_table() {
  auto t = load_knot_table(data_dir() + "/knots.json");
  auto e = load_knot_table(data_dir() + "/extras.json");
  t.insert(t.end(), e.begin(), e.end());
  return t;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::regex num(R"(-?\d+)");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
    out.push_back(std::stoi(it->str()));
  if (out.empty()) throw ParseError("expected a list of integers: " + s);
  return out;
}

// Resolves a knot from a table name, "P(a,b,...)", or one of the explicit sources.
std::pair<std::string, Presentation> resolve(const KnotSpec& k) {
  if (!k.presentation.empty()) {
    Presentation p = parse_presentation(k.presentation);
    validate_knot_presentation(p);
    return {"presentation", p};
  }
  if (!k.pd.empty()) return {"pd", wirtinger_from_pd(parse_pd(k.pd))};
  if (!k.pretzel.empty()) {
    auto tw = parse_int_list(k.pretzel);
    std::ostringstream os;
    os << "P(";
    for (std::size_t i = 0; i < tw.size(); ++i) os << (i ? "," : "") << tw[i];
    os << ")";
    return {os.str(), pretzel_presentation(tw)};
  }
  if (k.name.empty()) throw ParseError("no knot given");
  auto table = bundled_table();
  if (auto* r = find_knot(table, k.name)) return {r->name, knot_presentation(*r)};
  if (std::regex_match(k.name, std::regex(R"(P\(\s*-?\d+(\s*,\s*-?\d+)*\s*\))")))
    return {k.name, pretzel_presentation(parse_int_list(k.name))};
  throw ParseError("unknown knot: " + k.name);
}

void add_knot_options(CLI::App* cmd, KnotSpec& k) {
  cmd->add_option("knot", k.name, "Knot name from the bundled table, or P(a,b,...)");
  cmd->add_option("--pretzel", k.pretzel, "Pretzel knot, e.g. 3,7,9,11,15");
  cmd->add_option("--pd", k.pd, "Planar diagram code, e.g. [[1,5,2,4],...]");
  cmd->add_option("--presentation", k.presentation, "Relations such as \"x1 = x3 x2 x3^-1; ...\"");
}

void check_prime(u64 v, const char* what) {
  if (!is_prime(v)) throw ParseError(std::string(what) + " must be prime");
}

std::vector<mpz_class> prime_divisors(mpz_class n) {
  std::vector<mpz_class> out;
  for (mpz_class d = 2; d * d <= n && d < 1000000; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void print(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted Alexander polynomials and slice obstructions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  u64 p = 0, q = 0;
  NormOptions norm;
  bool no_cache = false, exhaustive = false, all_chars = false, autoq = false;
  KnotSpec k1, k2;

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  add_knot_options(alex, k1);

  auto* hom = app.add_subcommand("homology", "Order and mod-q structure of H_1 of the branched cover");
  add_knot_options(hom, k1);
  hom->add_option("-p", p, "Cover degree")->required();

  auto* tw = app.add_subcommand("twisted", "Twisted polynomials per character class");
  add_knot_options(tw, k1);
  tw->add_option("-p", p, "Cover degree")->required();
  tw->add_option("-q", q, "Coefficient prime")->required();
  tw->add_flag("--all-characters", all_chars, "Every character class, not one per piece");

  auto* reps = app.add_subcommand("reps", "Representation spaces");
  add_knot_options(reps, k1);
  reps->add_option("-p", p, "Cover degree")->required();
  reps->add_option("-q", q, "Coefficient prime")->required();

  auto* sc = app.add_subcommand("slice-check", "Slice obstruction; exit 0 = NOT_SLICE, 3 = inconclusive");
  add_knot_options(sc, k1);
  sc->add_option("-p", p, "Cover degree");
  sc->add_option("-q", q, "Coefficient prime");
  sc->add_flag("--auto", autoq, "Try p in {2,3,5} and q among the prime divisors of |H_1(B_p)|");
  sc->add_flag("--exhaustive", exhaustive, "Evaluate every character");

  auto* cmp = app.add_subcommand("compare", "Concordance comparison; exit 0 = DISTINCT, 3 = inconclusive");
  cmp->add_option("knot1", k1.name, "First knot")->required();
  cmp->add_option("knot2", k2.name, "Second knot")->required();
  cmp->add_option("-p", p, "Cover degree")->required();
  cmp->add_option("-q", q, "Coefficient prime")->required();

  for (auto* c : {sc, cmp, tw}) {
    c->add_option("--primes", norm.prime_count, "Split primes per modular test")->capture_default_str();
    c->add_option("--max-prime", norm.max_r, "Upper bound for split primes")->capture_default_str();
    c->add_option("--seed", norm.seed, "Seed for polynomial factorization")->capture_default_str();
    c->add_flag("--no-cache", no_cache, "Ignore TWISTKNOT_CACHE");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    std::optional<ResultCache> cache;
    if (!no_cache) cache = ResultCache::from_environment();
    ObstructionOptions opt;
    opt.norm = norm;
    opt.exhaustive = exhaustive;
    opt.cache = cache ? &*cache : nullptr;

    if (*alex) {
      auto [name, pres] = resolve(k1);
      LaurentCyc d = alexander_polynomial(pres);
      print({{"schema", kReportSchema}, {"kind", "alexander"}, {"knot", name}, {"alexander", laurent_to_json(d)}},
            as_json, d.str() + "\n");
      return kExitOk;
    }

    if (*hom) {
      check_prime(p, "p");
      auto [name, pres] = resolve(k1);
      LaurentCyc d = alexander_polynomial(pres);
      mpz_class order = branched_homology_order(d, p);
      json cands = json::array();
      std::ostringstream os;
      os << "|H_1(B_" << p << ")| = " << (order == 0 ? std::string("infinite") : order.get_str()) << "\n";
      if (order > 0) {
        for (auto& r : prime_divisors(order)) {
          if (r == 2 || r == p || !r.fits_ulong_p() || r > 100000) continue;
          auto dec = decompose_branched_homology(pres, p, r.get_ui());
          os << "q = " << r.get_str() << ": H_1(B_" << p << "; Z_" << r.get_str() << ") = " << dec.str() << "\n";
          cands.push_back(to_json(dec));
        }
        if (cands.empty()) os << "no candidate q\n";
      }
      print({{"schema", kReportSchema},
             {"kind", "homology"},
             {"knot", name},
             {"p", p},
             {"order", order.get_str()},
             {"candidates", cands}},
            as_json, os.str());
      return kExitOk;
    }

    if (*tw || *reps) {
      check_prime(p, "p");
      check_prime(q, "q");
      if (p == q) throw ParseError("p and q must differ");
      auto [name, pres] = resolve(k1);
      auto dec = decompose_branched_homology(pres, p, q);
      std::ostringstream os;
      os << "H_1(B_" << p << "; Z_" << q << ") = " << dec.str() << "\n";
      json pieces = json::array();
      if (dec.pieces.empty()) os << "no nontrivial representations\n";
      for (auto& pc : dec.pieces) {
        json entry = {{"ring", pc.ring.label()}, {"multiplicity", pc.multiplicity}};
        if (*reps) {
          json basis = json::array();
          os << pc.ring.label() << ": solution space of dimension " << pc.basis.size() << " over F_" << q << "\n";
          for (auto& b : pc.basis) {
            basis.push_back(rep_to_json(b));
            os << " ";
            for (std::size_t i = 0; i < b.v.size(); ++i) os << " v" << i + 1 << "=" << pc.ring.str(b.v[i]);
            os << "\n";
          }
          entry["basis"] = basis;
        } else {
          json polys = json::array();
          auto rho = module_basis(pc)[0];
          auto chars = enumerate_characters(pc.ring, true);
          if (!all_chars) chars.resize(1);
          for (auto& chi : chars) {
            LaurentCyc delta;
            LaurentCyc red = cached_reduced_twisted(pres, rho, chi, opt, &delta);
            os << pc.ring.label() << " character " << chi.str() << "\n  Delta  = " << delta.str()
               << "\n  Delta~ = " << red.str() << "\n";
            polys.push_back({{"representation", rep_to_json(rho)},
                             {"character", chi.values},
                             {"delta", laurent_to_json(delta)},
                             {"reduced", laurent_to_json(red)}});
          }
          entry["polynomials"] = polys;
        }
        pieces.push_back(std::move(entry));
      }
      print({{"schema", kReportSchema},
             {"kind", *reps ? "reps" : "twisted"},
             {"knot", name},
             {"p", p},
             {"q", q},
             {"pieces", pieces}},
            as_json, os.str());
      return kExitOk;
    }

    if (*sc) {
      auto [name, pres] = resolve(k1);
      std::vector<std::pair<u64, u64>> jobs;
      if (autoq) {
        LaurentCyc d = alexander_polynomial(pres);
        for (u64 pp : {2, 3, 5}) {
          mpz_class order = branched_homology_order(d, pp);
          if (order == 0) continue;
          for (auto& r : prime_divisors(order))
            if (r != 2 && r != pp && r.fits_ulong_p() && r < 100000) jobs.push_back({pp, r.get_ui()});
        }
      } else {
        if (!p || !q) throw ParseError("slice-check needs -p and -q, or --auto");
        check_prime(p, "p");
        check_prime(q, "q");
        jobs.push_back({p, q});
      }
      json reports = json::array();
      std::ostringstream os;
      bool certified = false;
      for (auto [pp, qq] : jobs) {
        auto rep = slice_obstruction(name, pres, pp, qq, opt);
        reports.push_back(to_json(rep));
        os << text_report(rep);
        if (rep.verdict == SliceVerdict::NotSlice) {
          certified = true;
          break;
        }
      }
      if (jobs.empty()) os << "no (p, q) candidates\n";
      std::string verdict = certified ? "NOT_SLICE" : "INCONCLUSIVE";
      if (autoq) os << "overall verdict: " << verdict << "\n";
      json out = jobs.size() == 1 && !autoq ? reports[0]
                                           : json{{"schema", kReportSchema},
                                                  {"kind", "slice-check"},
                                                  {"knot", name},
                                                  {"attempts", reports},
                                                  {"verdict", verdict}};
      print(out, as_json, os.str());
      return certified ? kExitOk : kExitInconclusive;
    }

    if (*cmp) {
      check_prime(p, "p");
      check_prime(q, "q");
      auto [n1, pres1] = resolve(k1);
      auto [n2, pres2] = resolve(k2);
      auto a = twisted_pieces(n1, pres1, p, q, opt);
      auto b = twisted_pieces(n2, pres2, p, q, opt);
      auto mc = mutant_comparison(a, b, opt.norm);
      print(to_json(mc), as_json, text_report(mc));
      return mc.verdict == MutantVerdict::Distinct ? kExitOk : kExitInconclusive;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
