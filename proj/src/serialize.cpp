#include "rwcollide/serialize.hpp"

#include "rwcollide/bessel.hpp"

namespace rwcollide {

using nlohmann::json;

ProbabilityReport make_probability_report(Dimension d, double t) {
  const auto coord = coordinate_return_prob(t, d);
  const auto coll = collision_prob(t, d);
  return {d.value(), t, coord.value, coll.value, coll.err_bound, coll.underflow};
}

void to_json(json& j, const ProbabilityReport& r) {
  j = json{{"d", r.dim},
           {"t", r.t},
           {"p_coordinate", r.p_coordinate},
           {"p_collision", r.p_collision},
           {"err_bound", r.err_bound},
           {"underflow", r.underflow}};
}

void from_json(const json& j, ProbabilityReport& r) {
  j.at("d").get_to(r.dim);
  j.at("t").get_to(r.t);
  j.at("p_coordinate").get_to(r.p_coordinate);
  j.at("p_collision").get_to(r.p_collision);
  j.at("err_bound").get_to(r.err_bound);
  j.at("underflow").get_to(r.underflow);
}

void to_json(json& j, const CollisionRecord& r) {
  j = json{{"discrete_count", r.discrete_count},
           {"component_count", r.component_count},
           {"occupation_time", r.occupation_time},
           {"horizon", r.horizon},
           {"coincident_at_horizon", r.coincident_at_horizon}};
}

void from_json(const json& j, CollisionRecord& r) {
  j.at("discrete_count").get_to(r.discrete_count);
  j.at("component_count").get_to(r.component_count);
  j.at("occupation_time").get_to(r.occupation_time);
  j.at("horizon").get_to(r.horizon);
  j.at("coincident_at_horizon").get_to(r.coincident_at_horizon);
}

void to_json(json& j, const QuadratureResult& r) {
  j = json{{"value", r.value},
           {"err_estimate", r.err_estimate},
           {"subdivisions", r.subdivisions},
           {"t_range", {r.t_range.first, r.t_range.second}}};
}

void from_json(const json& j, QuadratureResult& r) {
  j.at("value").get_to(r.value);
  j.at("err_estimate").get_to(r.err_estimate);
  j.at("subdivisions").get_to(r.subdivisions);
  r.t_range = {j.at("t_range").at(0).get<double>(), j.at("t_range").at(1).get<double>()};
}

void to_json(json& j, const OccupationResult& r) {
  j = json{{"d", r.dim}, {"quadrature", r.quadrature}, {"total", r.total()}};
  if (r.has_tail) {
    j["tail"] = r.tail;
    j["tail_remainder"] = r.tail_remainder;
  }
}

void from_json(const json& j, OccupationResult& r) {
  j.at("d").get_to(r.dim);
  j.at("quadrature").get_to(r.quadrature);
  r.has_tail = j.contains("tail");
  r.tail = r.has_tail ? j.at("tail").get<double>() : 0.0;
  r.tail_remainder = r.has_tail ? j.at("tail_remainder").get<double>() : 0.0;
}

void to_json(json& j, const WindowIncrement& r) { j = json{{"t", r.t}, {"increment", r.increment}}; }

void from_json(const json& j, WindowIncrement& r) {
  j.at("t").get_to(r.t);
  j.at("increment").get_to(r.increment);
}

void to_json(json& j, const ThresholdVerdict& r) {
  j = json{{"d", r.dim},
           {"finite", r.expected_collisions_finite},
           {"growth", to_string(r.growth)},
           {"decade_slope", r.decade_slope},
           {"evidence", r.evidence},
           {"evidence_agrees", r.evidence_agrees()}};
}

void from_json(const json& j, ThresholdVerdict& r) {
  j.at("d").get_to(r.dim);
  j.at("finite").get_to(r.expected_collisions_finite);
  r.growth = growth_from_string(j.at("growth").get<std::string>());
  j.at("decade_slope").get_to(r.decade_slope);
  j.at("evidence").get_to(r.evidence);
}

void to_json(json& j, const AsymptoticFit& r) {
  j = json{{"d", r.dim},
           {"constant_estimate", r.constant_estimate},
           {"correction", r.correction},
           {"paper_constant", r.paper_constant},
           {"derived_constant", r.derived_constant},
           {"ratio", r.ratio_to_paper},
           {"t_grid", r.t_grid},
           {"g_values", r.g_values},
           {"residuals", r.residuals}};
}

void from_json(const json& j, AsymptoticFit& r) {
  j.at("d").get_to(r.dim);
  j.at("constant_estimate").get_to(r.constant_estimate);
  j.at("correction").get_to(r.correction);
  j.at("paper_constant").get_to(r.paper_constant);
  j.at("derived_constant").get_to(r.derived_constant);
  j.at("ratio").get_to(r.ratio_to_paper);
  j.at("t_grid").get_to(r.t_grid);
  j.at("g_values").get_to(r.g_values);
  j.at("residuals").get_to(r.residuals);
}

void to_json(json& j, const Estimate& r) {
  j = json{{"mean", r.mean}, {"stderr", r.std_error}, {"trials", r.trials}, {"seed", r.master_seed}};
}

void from_json(const json& j, Estimate& r) {
  j.at("mean").get_to(r.mean);
  j.at("stderr").get_to(r.std_error);
  j.at("trials").get_to(r.trials);
  j.at("seed").get_to(r.master_seed);
}

void to_json(json& j, const CoordinateFit& r) {
  j = json{{"axis", r.axis},          {"mean", r.mean},           {"chi_square", r.chi_square},
           {"dof", r.dof},            {"threshold", r.threshold}, {"passed", r.passed}};
}

void to_json(json& j, const CorrelationCheck& r) {
  j = json{{"axes", {r.axis_a, r.axis_b}},
           {"correlation", r.correlation},
           {"threshold", r.threshold},
           {"passed", r.passed}};
}

void to_json(json& j, const ThinningReport& r) {
  j = json{{"d", r.dim},
           {"horizon", r.horizon},
           {"expected_mean", r.expected_mean},
           {"trials", r.trials},
           {"coordinates", r.coordinates},
           {"correlations", r.correlations},
           {"passed", r.passed}};
}

}  // namespace rwcollide
