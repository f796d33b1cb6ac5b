#pragma once

// JSON / CSV / human renderings of configurations and reports. The CLI and
// the HTTP service both go through these so their output cannot drift.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "glx/conjecture_lab.hpp"
#include "glx/theorem_engine.hpp"

namespace glx {

using nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

/// [{"z": [re, im], "k": k}, ...]
json config_to_json(const ZeroConfigurationXd& config);
/// Accepts the list form or an object carrying it under "zeros".
ZeroConfigurationXd config_from_json(const json& j);
ZeroConfigurationXd parse_zeros(std::string_view text);

/// Ascending coefficients as [[re, im], ...] (bare numbers allowed).
PolynomialXd polynomial_from_json(const json& j);

json sector_to_json(const Sector& s);
json analysis_to_json(const Analysis& analysis);
std::string analysis_to_human(const Analysis& analysis);

json root_result_to_json(const RootSolveResult<double>& result);

json campaign_to_json(const CampaignReport& report, bool include_wall_time = true);
std::string campaign_to_csv(const CampaignReport& report);
std::string campaign_to_human(const CampaignReport& report);

json falsify_hit_to_json(const FalsifyHit& hit, Criterion criterion, std::uint64_t seed);

/// One replay file per violation: {"kind", "seed", "trial_index", "note", "zeros"}.
/// The file is accepted by `glx analyze --zeros <file>`.
std::vector<std::filesystem::path> write_replay_files(const CampaignReport& report,
                                                      const std::filesystem::path& dir);

}  // namespace glx
