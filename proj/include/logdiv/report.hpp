#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "logdiv/homogeneity.hpp"
#include "logdiv/jordan.hpp"
#include "logdiv/normalize.hpp"

namespace logdiv {

// JSON report emission. Objects serialize with sorted keys (nlohmann's
// default map backing), so reports are byte-deterministic for a fixed
// input and version.
using Json = nlohmann::json;

Json series_to_json(const Series &s, const std::vector<std::string> &vars);
Json derivation_to_json(const Derivation &d, const std::vector<std::string> &vars);
Json validity_to_json(const Validity &v);

Json analyze_report_json(const AnalysisReport &r, const std::vector<std::string> &vars);
Json sn_report_json(const SNDecomposition &sn, const Derivation &input,
                    const std::vector<std::string> &vars);
Json diag_report_json(const DiagNormalization &d, const std::vector<Rat> &lambda,
                      const std::vector<std::string> &vars);
Json plane_report_json(const PlaneBasisNormalForm &p, const std::vector<std::string> &vars);

std::string analyze_report_text(const AnalysisReport &r, const std::vector<std::string> &vars);
std::string sn_report_text(const SNDecomposition &sn, const std::vector<std::string> &vars);
std::string diag_report_text(const DiagNormalization &d, const std::vector<std::string> &vars);
std::string plane_report_text(const PlaneBasisNormalForm &p, const std::vector<std::string> &vars);

} // namespace logdiv
