#include "lea/worker_net.hpp"

#include <stdexcept>

namespace lea {

std::pair<double, double> stationary_distribution(const WorkerParams& params) {
  double pi_g = (1.0 - params.p_bb) / ((1.0 - params.p_gg) + (1.0 - params.p_bb));
  return {pi_g, 1.0 - pi_g};
}

int NetworkState::n_good() const {
  int count = 0;
  for (auto s : states) {
    if (s == WorkerState::good) ++count;
  }
  return count;
}

NetworkState sample_initial_states(std::span<const WorkerParams> params,
                                   std::span<Rng> streams) {
  if (params.size() != streams.size()) {
    throw std::invalid_argument("one rng stream per worker required");
  }
  NetworkState state;
  state.round = 1;
  state.states.resize(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    double pi_g = stationary_distribution(params[i]).first;
    state.states[i] = streams[i].bernoulli(pi_g) ? WorkerState::good : WorkerState::bad;
  }
  return state;
}

void step_states(NetworkState& state, std::span<const WorkerParams> params,
                 std::span<Rng> streams) {
  for (std::size_t i = 0; i < state.states.size(); ++i) {
    double stay = state.states[i] == WorkerState::good ? params[i].p_gg : params[i].p_bb;
    if (!streams[i].bernoulli(stay)) {
      state.states[i] =
          state.states[i] == WorkerState::good ? WorkerState::bad : WorkerState::good;
    }
  }
  ++state.round;
}

double completion_time(long long load, WorkerState state, const WorkerParams& params) {
  if (load < 0) throw std::invalid_argument("negative load");
  if (load == 0) return 0.0;
  double mu = state == WorkerState::good ? params.mu_g : params.mu_b;
  return static_cast<double>(load) / mu;
}

}  // namespace lea
