#pragma once

#include <string>

#include "json.hpp"
#include "twistknot/obstruction.hpp"

namespace tk {

inline constexpr const char* kReportSchema = "twistknot.report/1";

// {"q": q, "low": k, "coeffs": [[c_0, ..., c_{q-2}], ...]}, integers as decimal strings,
// one zeta power-basis vector per power of t starting at t^low.
nlohmann::json laurent_to_json(const LaurentCyc& d);
LaurentCyc laurent_from_json(const nlohmann::json& j);

// Generator index -> coefficient list of v_i.
nlohmann::json rep_to_json(const MetabelianRep& rho);
nlohmann::json to_json(const NormVerdict& v);
nlohmann::json to_json(const ModuleDecomposition& d);
nlohmann::json to_json(const ObstructionReport& r);
nlohmann::json to_json(const MutantComparison& m);

std::string text_report(const ObstructionReport& r);
std::string text_report(const MutantComparison& m);

}  // namespace tk
