#pragma once

#include <string>

#include "ennorm/criterion.hpp"
#include "ennorm/parser.hpp"

namespace ennorm {

/// JSON serialization of an analysis report (schema docs/report.schema.json,
/// field set mirrors AnalysisReport plus schema_version and timings).
std::string report_to_json(const AnalysisReport& rep, const IdealFile& source,
                           double total_ms, int indent = 2);

}  // namespace ennorm
