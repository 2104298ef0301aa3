#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lea/allocation.hpp"
#include "lea/coding.hpp"
#include "lea/config.hpp"
#include "lea/estimator.hpp"
#include "lea/worker_net.hpp"

namespace lea {

struct RoundOutcome {
  long long round = 0;
  AllocationVector allocation;
  std::vector<WorkerState> true_states;
  std::vector<double> completion_times;
  long long on_time_evaluations = 0;
  bool success = false;
  // Estimated success probability of the chosen allocation (NaN for the
  // static strategy, which does not model success).
  double est_success_prob = 0.0;
};

// Compact per-round record kept in the summary log.
struct RoundRecord {
  long long round = 0;
  int i_star = 0;
  double est_success_prob = 0.0;
  int n_good_true = 0;
  long long on_time_evals = 0;
  bool success = false;
};

struct SummaryReport {
  ScenarioConfig config;
  double throughput = 0.0;
  long long rounds = 0;
  std::uint64_t seed = 0;
  long long successes = 0;
  std::vector<double> final_p_hat_gg;  // empty for non-LEA strategies
  std::vector<double> final_p_hat_bb;
  std::vector<RoundRecord> log;
  // One row per (round, worker) when config.log_estimates is set.
  std::vector<std::vector<std::pair<double, double>>> estimate_log;
};

// Static strategy: each worker draws l_g with its stationary good
// probability (or static_good_prob when set), the whole vector resampled
// until the total reaches K*.
AllocationVector static_assign(std::span<const double> good_probs,
                               const LoadProfile& profile, Rng& rng);

// Genie strategy: exact next-round good probabilities from the true
// previous states and transition matrix; stationary probabilities in
// round 1 when no previous state exists.
AllocationVector genie_assign(std::span<const WorkerState> prev_states,
                              std::span<const WorkerParams> params,
                              const LoadProfile& profile);
AllocationVector genie_assign_initial(std::span<const WorkerParams> params,
                                      const LoadProfile& profile);

// Mean of the per-round success indicators; throws on an empty list.
double throughput(std::span<const RoundRecord> outcomes);

// Multi-round engine.  One instance drives one seeded run; the worker
// state trajectory depends only on (seed, worker params), so runs with
// equal seeds and different strategies are paired on identical
// trajectories.
class Simulation {
 public:
  explicit Simulation(ScenarioConfig cfg);

  RoundOutcome run_round();
  SummaryReport run();

  const Estimator& estimator() const { return est_; }
  const NetworkState& network_state() const { return state_; }
  const ScenarioConfig& config() const { return cfg_; }

 private:
  AllocationVector choose_allocation();
  void verify_full_fidelity(const RoundOutcome& outcome, const AllocationVector& alloc);

  ScenarioConfig cfg_;
  std::vector<WorkerParams> params_;
  LoadProfile profile_;
  std::vector<Rng> worker_streams_;
  Rng strategy_stream_;
  Rng data_stream_;
  NetworkState state_;
  std::optional<std::vector<WorkerState>> prev_states_;
  Estimator est_;
  // Full-fidelity state: one-time encoding, fresh work function per round.
  Dataset dataset_;
  CodingScheme scheme_;
  std::vector<EncodedShard> shards_;
};

SummaryReport run_simulation(const ScenarioConfig& cfg);

// CSV with header round,strategy,i_star,est_success_prob,n_good_true,
// on_time_evals,success; deterministic bytes for a fixed report.
std::string rounds_csv(const SummaryReport& report);
// CSV with header round,worker,p_hat_gg,p_hat_bb.
std::string estimates_csv(const SummaryReport& report);
// Key-value summary document.
std::string summary_text(const SummaryReport& report);

}  // namespace lea
