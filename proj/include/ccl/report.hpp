#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ccl/classify.hpp"
#include "ccl/transition.hpp"

namespace ccl {

// Report serialization. CSV output is UTF-8 with a header row, LF line
// endings and '.' as decimal separator; floating-point values use the
// shortest round-trip representation. Field layouts are documented in
// docs/schema/.

/// Shortest decimal string that reads back as exactly `v`.
std::string format_double(double v);

nlohmann::json compressor_json(const CompressorConfig& cfg);
nlohmann::json rule_json(const RuleSpec& rule);

/// Columns: rule,kind,colors,c_raw,c_compressed,cluster
std::string classification_csv(const ClassificationReport& report);
nlohmann::json classification_json(const ClassificationReport& report);

/// Columns: rank,rule,kind,colors,coefficient,intercept,cluster,s_1..s_B
std::string coefficients_csv(const std::vector<CoefficientEntry>& entries);
nlohmann::json transition_record_json(const TransitionRecord& rec);

/// Columns: rule,ic,compressed_length,value,spike
std::string profiles_csv(const std::vector<IcProfile>& profiles, double spike_q);
nlohmann::json profile_json(const IcProfile& profile, double spike_q);

struct TmRankEntry {
  RuleSpec rule;
  ComplexityEstimate estimate;
};

/// Columns: rank,rule,states,colors,c_raw,c_compressed
std::string tm_ranking_csv(const std::vector<TmRankEntry>& ranking);

/// Columns: rule,kind,colors,states
std::string rules_csv(const std::vector<RuleSpec>& rules);

}  // namespace ccl
