#pragma once

#include <cstdint>
#include <string>

#include "stopmax/distribution.hpp"
#include "stopmax/game_alpha.hpp"
#include "stopmax/policy.hpp"

namespace stopmax {

enum class Game { Max, Alpha };

struct SimulationReport {
  Game game = Game::Max;
  double alpha = 0.0;  // meaningful for Game::Alpha
  double estimate = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

// Draws `samples` i.i.d. length-n trajectories by inverse transform from a
// counter-based stream, runs the policy (forced stop at step n) and scores
//   Game::Max   win iff x_stop >= max of the trajectory,
//   Game::Alpha win iff x_stop >= alpha * max.
// Trajectory t consumes counters t*n .. t*n + n-1, so the result is
// bit-identical for any worker count; OpenMP splits the trajectory range
// when parallel is set.
SimulationReport simulate(const Distribution& d, const StoppingPolicy& policy,
                          Game game, double alpha, long long samples,
                          std::uint64_t seed, bool parallel = true);

struct PairedResult {
  SimulationReport max_report;
  SimulationReport alpha_report;
  // Trajectories winning the max game but losing the alpha game. Zero by set
  // inclusion of the win events; counted, never assumed.
  long long dominance_violations = 0;
};

// Scores both games on identical trajectories.
PairedResult simulate_paired(const Distribution& d,
                             const StoppingPolicy& policy, double alpha,
                             long long samples, std::uint64_t seed,
                             bool parallel = true);

// Exact optimal win probability over all history-dependent stopping rules,
// by enumeration of the full outcome tree (no running-max state reduction,
// no closed-form stop values). Requires atoms and s^n <= 10^7.
double brute_force_optimal(const Distribution& d, const GameSpec& spec);

}  // namespace stopmax
