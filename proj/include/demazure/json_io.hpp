#pragma once

#include <json.hpp>

#include "demazure/reduction.hpp"

namespace demazure {

/// JSON serialization for the domain types. Every emitted document carries
/// "schema": "demazure/v1"; readers validate it. Characters serialize as a
/// lexicographically sorted term list, polytope thresholds as exact
/// num/den pairs.
inline constexpr const char* kSchema = "demazure/v1";

nlohmann::json root_datum_to_json(const RootDatum& d);
RootDatum root_datum_from_json(const nlohmann::json& j);

nlohmann::json character_to_json(const RootDatum& d, const Character& ch);
Character character_from_json(const nlohmann::json& j);

nlohmann::json polytope_to_json(const DemazurePolytope& p, const Character* joined = nullptr);
/// Rebuilds from the (type, lambda, word) descriptor and cross-checks the
/// stored vertices and inequalities.
DemazurePolytope polytope_from_json(const nlohmann::json& j);

nlohmann::json reduction_to_json(const RootDatum& d, const ReductionData& rd);
nlohmann::json report_to_json(const VerificationReport& report);

/// Plot data: exact orthogonal coordinates for a set of weights, plus the
/// embedding metadata (the simple-root rows used). When a character is given
/// its multiplicities are joined onto the points.
nlohmann::json plotdata_to_json(const RootDatum& d, std::span<const Weight> points,
                                const Character* joined = nullptr);

std::string rat_str(const Rat& r);

}  // namespace demazure
