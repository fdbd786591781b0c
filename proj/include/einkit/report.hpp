#pragma once

#include "einkit/catalog.hpp"

#include <string>
#include <vector>

namespace einkit {

enum class Format { json, csv, markdown };
Format parse_format(const std::string& s);

// every (row, sampled parameter) case of the given rows, in row order
std::vector<CaseReport> run_cases(const std::vector<const SubgroupSpec*>& rows, const SampleConfig& base,
                                  Backend b = Backend::exact);

// one case with its per-point table
std::string case_to_json(const CaseReport& r, bool with_points = true);
std::string points_to_csv(const CaseReport& r);
std::string case_to_markdown(const CaseReport& r, const SubgroupSpec& s);

// summaries over many cases; byte-stable for a fixed sample configuration
std::string cases_to_json(const std::vector<CaseReport>& rs, const SampleConfig& cfg);
std::string cases_to_csv(const std::vector<CaseReport>& rs);
std::string cases_to_markdown(const std::vector<CaseReport>& rs, const SampleConfig& cfg);

std::string point_text(const EinPoint& x);
std::string sample_config_text(const SampleConfig& c);

}  // namespace einkit
