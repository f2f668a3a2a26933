#pragma once

// Simulation of two independent simple random walks on Z^d, in discrete
// time and in continuous (Poissonized) time, with collision bookkeeping.
//
// Both walkers start at the origin. Every simulator is a pure function of
// its parameters and SeedSpec.

#include <cstdint>
#include <random>
#include <vector>

#include "rwcollide/lattice.hpp"

namespace rwcollide {

/// Identifies one reproducible random stream. Distinct (master_seed,
/// stream_index) pairs give independent streams.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

using Engine = std::mt19937_64;

Engine make_engine(const SeedSpec& seed);

/// One of the 2d unit vectors +-e_i, each with probability 1/(2d).
LatticePoint uniform_step(Dimension d, Engine& rng);

struct CollisionRecord {
  std::uint64_t discrete_count = 0;   // indices n with X_n == Y_n (n = 0 included)
  std::uint64_t component_count = 0;  // maximal intervals of {t : X(t) == Y(t)}
  double occupation_time = 0.0;       // measure of {t <= horizon : X(t) == Y(t)}
  double horizon = 0.0;               // step count (discrete) or time (continuous)
  bool coincident_at_horizon = false;

  friend bool operator==(const CollisionRecord&, const CollisionRecord&) = default;
};

struct DiscretePairState {
  std::uint64_t n;
  LatticePoint x;
  LatticePoint y;
};

struct ContinuousPairState {
  double t;
  LatticePoint x;
  LatticePoint y;
  double next_event;
};

/// Positions right after an event (the first entry is the initial state).
struct EventLogEntry {
  double time;
  LatticePoint x;
  LatticePoint y;
};

/// Which walker moved and how, for one event of the superposed rate-2 clock.
struct PairJump {
  int walker;  // 0 for X, 1 for Y
  int axis;
  int sign;
};

/// The pair (X(t), Y(t)) driven by a single rate-2 exponential clock; each
/// event picks the moving walker with a fair coin and a uniform unit step.
/// The draw order does not depend on any horizon, so simulations with a
/// longer horizon extend the same trajectory.
class ContinuousPairProcess {
 public:
  ContinuousPairProcess(Dimension d, const SeedSpec& seed);

  const ContinuousPairState& state() const noexcept { return state_; }
  bool coincident() const noexcept { return nonzero_ == 0; }

  /// Applies the pending jump at state().next_event and schedules the next.
  PairJump advance();

 private:
  void schedule();

  Engine rng_;
  std::exponential_distribution<double> gap_{2.0};
  std::uniform_int_distribution<int> pick_;
  ContinuousPairState state_;
  int nonzero_ = 0;  // coordinates where x and y differ
};

/// Discrete-time pair up to n_steps; discrete_count = #{0 <= n <= n_steps : X_n = Y_n}.
/// `final_state`, when given, receives the positions after the last step.
CollisionRecord simulate_discrete_pair(Dimension d, std::uint64_t n_steps, const SeedSpec& seed,
                                       DiscretePairState* final_state = nullptr);

/// Continuous-time pair on [0, horizon]. When `log` is non-null every state
/// change is appended to it.
CollisionRecord simulate_continuous_pair(Dimension d, double horizon, const SeedSpec& seed,
                                         std::vector<EventLogEntry>* log = nullptr);

/// Embedded chain of the difference walk: #{0 <= k <= n_jumps : S_k = 0}.
std::uint64_t embedded_difference_walk(Dimension d, std::uint64_t n_jumps, const SeedSpec& seed);

/// Per-coordinate jump tallies of D(t) = X(t) - Y(t) on [0, horizon].
std::vector<std::uint64_t> coordinate_jump_counts(Dimension d, double horizon, const SeedSpec& seed);

}  // namespace rwcollide
