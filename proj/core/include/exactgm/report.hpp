#pragma once

#include <nlohmann/json_fwd.hpp>

#include "exactgm/match.hpp"
#include "exactgm/oracle.hpp"
#include "exactgm/sensitivity.hpp"

namespace exactgm {

// JSON encodings used by the command-line tool. Rationals are emitted as
// exact "p/q" strings, never floats; permutations are 1-based image arrays;
// bases are lists of 1-based [i, j] variable pairs.

nlohmann::json to_json(const MatchReport& report);
MatchReport match_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OracleResult& result);
OracleResult oracle_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerifyReport& report);
VerifyReport verify_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PerturbationParams& params);
PerturbationParams params_from_json(const nlohmann::json& j);

}  // namespace exactgm
