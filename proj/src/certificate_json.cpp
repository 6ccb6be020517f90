#include "fracfactor/certificate_json.hpp"

#include <regex>

namespace fracfactor {

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, pattern)) throw std::invalid_argument("malformed rational: " + text);
  Rational r(text, 10);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

void to_json(nlohmann::json& j, const Edge& e) { j = nlohmann::json::array({e.u, e.v}); }
void from_json(const nlohmann::json& j, Edge& e) {
  e = Edge(j.at(0).get<Vertex>(), j.at(1).get<Vertex>());
}

void to_json(nlohmann::json& j, const VertexSet& s) { j = s.members(); }
void from_json(const nlohmann::json& j, VertexSet& s) {
  s = VertexSet(j.get<std::vector<Vertex>>());
}

void to_json(nlohmann::json& j, const DeficiencyWitness& w) {
  j = {{"S", w.S}, {"T", w.T}, {"delta", w.delta}, {"epsilon", w.epsilon}};
}
void from_json(const nlohmann::json& j, DeficiencyWitness& w) {
  w.S = j.at("S").get<VertexSet>();
  w.T = j.at("T").get<VertexSet>();
  w.delta = j.at("delta").get<long>();
  w.epsilon = j.at("epsilon").get<int>();
}

void to_json(nlohmann::json& j, const IndicatorAssignment& h) {
  nlohmann::json weights = nlohmann::json::array();
  for (const Rational& w : h.weights) weights.push_back(rational_to_string(w));
  j = {{"edges", h.edges}, {"weights", weights}};
}
void from_json(const nlohmann::json& j, IndicatorAssignment& h) {
  h.edges = j.at("edges").get<std::vector<Edge>>();
  h.weights.clear();
  for (const auto& w : j.at("weights")) h.weights.push_back(rational_from_string(w.get<std::string>()));
  if (h.edges.size() != h.weights.size())
    throw std::invalid_argument("assignment edges and weights differ in length");
}

void to_json(nlohmann::json& j, const InfeasibilityCertificate& c) {
  nlohmann::json ys = nlohmann::json::array();
  for (const Rational& y : c.multipliers) ys.push_back(rational_to_string(y));
  j = {{"forced_edge", c.forced ? nlohmann::json(*c.forced) : nlohmann::json(nullptr)},
       {"farkas_multipliers", ys}};
}
void from_json(const nlohmann::json& j, InfeasibilityCertificate& c) {
  const auto& f = j.at("forced_edge");
  c.forced = f.is_null() ? std::nullopt : std::optional<Edge>(f.get<Edge>());
  c.multipliers.clear();
  for (const auto& y : j.at("farkas_multipliers"))
    c.multipliers.push_back(rational_from_string(y.get<std::string>()));
}

nlohmann::json verdict_json(const Verdict& v, bool include_assignments) {
  nlohmann::json j = {{"holds", v.holds}};
  if (v.witness) j["witness"] = *v.witness;
  if (v.failing_edge) j["failing_edge"] = *v.failing_edge;
  if (v.infeasibility) j["infeasibility"] = *v.infeasibility;
  if (include_assignments && !v.assignments.empty()) j["assignments"] = v.assignments;
  return j;
}

}  // namespace fracfactor
