#include "rwcollide/walk.hpp"

#include <cmath>

#include "rwcollide/errors.hpp"

namespace rwcollide {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_horizon(double horizon) {
  if (!std::isfinite(horizon) || horizon < 0.0) {
    throw InputError("horizon must be finite and nonnegative");
  }
}

}  // namespace

Engine make_engine(const SeedSpec& seed) {
  return Engine(splitmix64(seed.master_seed ^ splitmix64(seed.stream_index)));
}

LatticePoint uniform_step(Dimension d, Engine& rng) {
  std::uniform_int_distribution<int> pick(0, 2 * d.value() - 1);
  const int r = pick(rng);
  return LatticePoint::unit(d, r >> 1, (r & 1) ? -1 : 1);
}

ContinuousPairProcess::ContinuousPairProcess(Dimension d, const SeedSpec& seed)
    : rng_(make_engine(seed)),
      pick_(0, 4 * d.value() - 1),
      state_{0.0, LatticePoint(d), LatticePoint(d), 0.0} {
  schedule();
}

void ContinuousPairProcess::schedule() { state_.next_event = state_.t + gap_(rng_); }

PairJump ContinuousPairProcess::advance() {
  // One draw encodes walker (low bit), sign and axis.
  const int r = pick_(rng_);
  PairJump jump{r & 1, r >> 2, ((r >> 1) & 1) ? -1 : 1};
  auto& mover = jump.walker == 0 ? state_.x : state_.y;
  const bool was_equal = state_.x[jump.axis] == state_.y[jump.axis];
  mover[jump.axis] += jump.sign;
  // Each jump changes exactly one coordinate of x - y by one unit.
  nonzero_ += was_equal ? 1 : (state_.x[jump.axis] == state_.y[jump.axis] ? -1 : 0);
  state_.t = state_.next_event;
  schedule();
  return jump;
}

CollisionRecord simulate_discrete_pair(Dimension d, std::uint64_t n_steps, const SeedSpec& seed,
                                       DiscretePairState* final_state) {
  Engine rng = make_engine(seed);
  std::uniform_int_distribution<int> pick(0, 2 * d.value() - 1);
  DiscretePairState s{0, LatticePoint(d), LatticePoint(d)};
  int nonzero = 0;

  CollisionRecord rec;
  rec.horizon = static_cast<double>(n_steps);
  rec.discrete_count = 1;
  auto move = [&](LatticePoint& p, LatticePoint& other) {
    const int r = pick(rng);
    const int axis = r >> 1;
    const bool was_equal = p[axis] == other[axis];
    p[axis] += (r & 1) ? -1 : 1;
    nonzero += was_equal ? 1 : (p[axis] == other[axis] ? -1 : 0);
  };
  for (s.n = 1; s.n <= n_steps; ++s.n) {
    move(s.x, s.y);
    move(s.y, s.x);
    if (nonzero == 0) ++rec.discrete_count;
  }
  rec.component_count = rec.discrete_count;
  rec.coincident_at_horizon = nonzero == 0;
  if (final_state) {
    s.n = n_steps;
    *final_state = s;
  }
  return rec;
}

CollisionRecord simulate_continuous_pair(Dimension d, double horizon, const SeedSpec& seed,
                                         std::vector<EventLogEntry>* log) {
  check_horizon(horizon);
  ContinuousPairProcess proc(d, seed);
  if (log) log->push_back({0.0, proc.state().x, proc.state().y});

  CollisionRecord rec;
  rec.horizon = horizon;
  rec.component_count = 1;
  while (proc.state().next_event <= horizon) {
    const double t0 = proc.state().t;
    if (proc.coincident()) rec.occupation_time += proc.state().next_event - t0;
    proc.advance();
    if (log) log->push_back({proc.state().t, proc.state().x, proc.state().y});
    if (proc.coincident()) ++rec.component_count;
  }
  if (proc.coincident()) rec.occupation_time += horizon - proc.state().t;
  // Jumps always break equality, so each coincident epoch opens a new component.
  rec.discrete_count = rec.component_count;
  rec.coincident_at_horizon = proc.coincident();
  return rec;
}

std::uint64_t embedded_difference_walk(Dimension d, std::uint64_t n_jumps, const SeedSpec& seed) {
  Engine rng = make_engine(seed);
  std::uniform_int_distribution<int> pick(0, 2 * d.value() - 1);
  LatticePoint s(d);
  int nonzero = 0;
  std::uint64_t visits = 1;
  for (std::uint64_t k = 1; k <= n_jumps; ++k) {
    const int r = pick(rng);
    std::int64_t& c = s[r >> 1];
    const bool was_zero = c == 0;
    c += (r & 1) ? -1 : 1;
    nonzero += was_zero ? 1 : (c == 0 ? -1 : 0);
    if (nonzero == 0) ++visits;
  }
  return visits;
}

std::vector<std::uint64_t> coordinate_jump_counts(Dimension d, double horizon, const SeedSpec& seed) {
  if (!std::isfinite(horizon) || horizon <= 0.0) {
    throw InputError("horizon must be finite and positive");
  }
  ContinuousPairProcess proc(d, seed);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(d.value()), 0);
  while (proc.state().next_event <= horizon) {
    ++counts[static_cast<std::size_t>(proc.advance().axis)];
  }
  return counts;
}

}  // namespace rwcollide
