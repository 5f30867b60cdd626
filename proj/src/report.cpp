#include "ccl/report.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace ccl {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "nan";
  return {buf.data(), ptr};
}

nlohmann::json compressor_json(const CompressorConfig& cfg) {
  return {{"id", cfg.id()},
          {"format", "deflate-raw"},
          {"level", cfg.level},
          {"window_bits", cfg.window_bits},
          {"mem_level", cfg.mem_level},
          {"strategy", to_string(cfg.strategy)},
          {"unit", std::string(kLengthUnit)}};
}

nlohmann::json rule_json(const RuleSpec& rule) {
  return {{"rule", rule.number.str()}, {"kind", to_string(rule.kind)}, {"colors", rule.colors}, {"states", rule.states}};
}

std::string classification_csv(const ClassificationReport& report) {
  std::ostringstream os;
  os << "rule,kind,colors,c_raw,c_compressed,cluster\n";
  for (const auto& e : report.entries) {
    os << e.rule.number.str() << ',' << to_string(e.rule.kind) << ',' << e.rule.colors << ',' << e.raw_length << ','
       << e.compressed_length << ',' << e.cluster << '\n';
  }
  return os.str();
}

nlohmann::json classification_json(const ClassificationReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    auto j = rule_json(e.rule);
    j["c_raw"] = e.raw_length;
    j["c_compressed"] = e.compressed_length;
    j["cluster"] = e.cluster;
    if (!report.subclusters.empty()) j["subcluster"] = report.subclusters[i];
    entries.push_back(std::move(j));
  }
  return {{"parameters",
           {{"steps", report.steps},
            {"initial_condition", report.init.cells},
            {"cluster_count", report.cluster_count},
            {"compressor", compressor_json(report.compressor)}}},
          {"entries", std::move(entries)}};
}

std::string coefficients_csv(const std::vector<CoefficientEntry>& entries) {
  std::ostringstream os;
  os << "rank,rule,kind,colors,coefficient,intercept,cluster";
  const std::size_t blocks = entries.empty() ? 0 : entries.front().record.sequence.size();
  for (std::size_t b = 1; b <= blocks; ++b) os << ",s_" << b;
  os << '\n';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& r = entries[i].record;
    os << i + 1 << ',' << r.rule.number.str() << ',' << to_string(r.rule.kind) << ',' << r.rule.colors << ','
       << format_double(r.coefficient) << ',' << format_double(r.fit.intercept) << ',' << entries[i].cluster;
    for (double s : r.sequence) os << ',' << format_double(s);
    os << '\n';
  }
  return os.str();
}

nlohmann::json transition_record_json(const TransitionRecord& rec) {
  auto j = rule_json(rec.rule);
  j["ic_count"] = rec.ic_count;
  j["block_steps"] = rec.block_steps;
  j["sequence"] = rec.sequence;
  j["fit"] = {{"intercept", rec.fit.intercept}, {"slope", rec.fit.slope}};
  j["coefficient"] = rec.coefficient;
  return j;
}

std::string profiles_csv(const std::vector<IcProfile>& profiles, double spike_q) {
  std::ostringstream os;
  os << "rule,ic,compressed_length,value,spike\n";
  for (const auto& p : profiles) {
    const auto values = p.values();
    const auto spikes = detect_spikes(values, spike_q);
    std::size_t next = 0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      const bool spike = next < spikes.size() && spikes[next] == j;
      if (spike) ++next;
      os << p.rule.number.str() << ',' << j << ',' << p.lengths[j] << ',' << format_double(values[j]) << ','
         << (spike ? 1 : 0) << '\n';
    }
  }
  return os.str();
}

nlohmann::json profile_json(const IcProfile& profile, double spike_q) {
  auto j = rule_json(profile.rule);
  j["steps"] = profile.steps;
  j["normalized"] = profile.normalized;
  j["lengths"] = profile.lengths;
  j["spike_q"] = spike_q;
  j["spikes"] = detect_spikes(profile.values(), spike_q);
  return j;
}

std::string tm_ranking_csv(const std::vector<TmRankEntry>& ranking) {
  std::ostringstream os;
  os << "rank,rule,states,colors,c_raw,c_compressed\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const auto& e = ranking[i];
    os << i + 1 << ',' << e.rule.number.str() << ',' << e.rule.states << ',' << e.rule.colors << ','
       << e.estimate.raw_length << ',' << e.estimate.compressed_length << '\n';
  }
  return os.str();
}

std::string rules_csv(const std::vector<RuleSpec>& rules) {
  std::ostringstream os;
  os << "rule,kind,colors,states\n";
  for (const auto& r : rules) {
    os << r.number.str() << ',' << to_string(r.kind) << ',' << r.colors << ',' << r.states << '\n';
  }
  return os.str();
}

}  // namespace ccl
