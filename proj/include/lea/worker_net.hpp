#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lea/rng.hpp"

namespace lea {

// Two-state Markov worker: p_gg / p_bb are the self-transition
// probabilities, mu_g / mu_b the deterministic speeds (evaluations per
// second) in each state.  Requires mu_g > mu_b > 0 and 0 < p_gg, p_bb < 1
// so the chain is irreducible.
struct WorkerParams {
  double p_gg = 0.0;
  double p_bb = 0.0;
  double mu_g = 0.0;
  double mu_b = 0.0;
};

enum class WorkerState : std::uint8_t { good, bad };

// (pi_g, pi_b) of the two-state chain.
std::pair<double, double> stationary_distribution(const WorkerParams& params);

struct NetworkState {
  std::vector<WorkerState> states;
  long long round = 1;

  int n_good() const;
};

// Each worker starts good with its stationary probability pi_g, drawn
// from its own stream.
NetworkState sample_initial_states(std::span<const WorkerParams> params,
                                   std::span<Rng> streams);

// Advances every worker independently per its transition matrix and
// increments the round counter.
void step_states(NetworkState& state, std::span<const WorkerParams> params,
                 std::span<Rng> streams);

// load / mu for the state's speed; zero load finishes instantly.
double completion_time(long long load, WorkerState state, const WorkerParams& params);

}  // namespace lea
