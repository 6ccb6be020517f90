#pragma once

#include <string>

#include <json.hpp>

#include "fracfactor/factor.hpp"

namespace fracfactor {

/// Exact rational as "p/q" (q >= 1, lowest terms).
std::string rational_to_string(const Rational& r);
/// Accepts "p/q" or an integer "p".
Rational rational_from_string(const std::string& text);

void to_json(nlohmann::json& j, const Edge& e);
void from_json(const nlohmann::json& j, Edge& e);
void to_json(nlohmann::json& j, const VertexSet& s);
void from_json(const nlohmann::json& j, VertexSet& s);
void to_json(nlohmann::json& j, const DeficiencyWitness& w);
void from_json(const nlohmann::json& j, DeficiencyWitness& w);
void to_json(nlohmann::json& j, const IndicatorAssignment& h);
void from_json(const nlohmann::json& j, IndicatorAssignment& h);
void to_json(nlohmann::json& j, const InfeasibilityCertificate& c);
void from_json(const nlohmann::json& j, InfeasibilityCertificate& c);
/// Verdict with its certificate; per-edge assignments only when requested.
nlohmann::json verdict_json(const Verdict& v, bool include_assignments = false);

}  // namespace fracfactor
