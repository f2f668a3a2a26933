#pragma once

// JSON encodings of the result records. Every encoder has a matching
// decoder so outputs parse back into identical records.

#include "json.hpp"
#include "rwcollide/analysis.hpp"
#include "rwcollide/montecarlo.hpp"
#include "rwcollide/walk.hpp"

namespace rwcollide {

/// What `prob` prints: both Poissonized return probabilities at time t.
struct ProbabilityReport {
  int dim = 1;
  double t = 0.0;
  double p_coordinate = 1.0;
  double p_collision = 1.0;
  double err_bound = 0.0;
  bool underflow = false;

  friend bool operator==(const ProbabilityReport&, const ProbabilityReport&) = default;
};

ProbabilityReport make_probability_report(Dimension d, double t);

void to_json(nlohmann::json& j, const ProbabilityReport& r);
void from_json(const nlohmann::json& j, ProbabilityReport& r);
void to_json(nlohmann::json& j, const CollisionRecord& r);
void from_json(const nlohmann::json& j, CollisionRecord& r);
void to_json(nlohmann::json& j, const QuadratureResult& r);
void from_json(const nlohmann::json& j, QuadratureResult& r);
void to_json(nlohmann::json& j, const OccupationResult& r);
void from_json(const nlohmann::json& j, OccupationResult& r);
void to_json(nlohmann::json& j, const WindowIncrement& r);
void from_json(const nlohmann::json& j, WindowIncrement& r);
void to_json(nlohmann::json& j, const ThresholdVerdict& r);
void from_json(const nlohmann::json& j, ThresholdVerdict& r);
void to_json(nlohmann::json& j, const AsymptoticFit& r);
void from_json(const nlohmann::json& j, AsymptoticFit& r);
void to_json(nlohmann::json& j, const Estimate& r);
void from_json(const nlohmann::json& j, Estimate& r);
void to_json(nlohmann::json& j, const CoordinateFit& r);
void to_json(nlohmann::json& j, const CorrelationCheck& r);
void to_json(nlohmann::json& j, const ThinningReport& r);

}  // namespace rwcollide
