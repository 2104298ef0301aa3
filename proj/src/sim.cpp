#include "lea/sim.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lea {

namespace {

// Stream tags for the per-run RNG split; workers use tags 0..n-1.
constexpr std::uint64_t kStrategyStream = 1000003;
constexpr std::uint64_t kDataStream = 1000033;

// Loads are floored so an on-time tier finishes exactly at or before d;
// the slack only absorbs rounding of the final division.
constexpr double kDeadlineSlack = 1e-12;

constexpr std::size_t kFullFidelityChunkLen = 4;

std::string fmt_prob(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

AllocationVector static_assign(std::span<const double> good_probs,
                               const LoadProfile& profile, Rng& rng) {
  const int n = profile.n;
  if (static_cast<long long>(n) * profile.l_g < profile.k_star) {
    throw InfeasibleError("deadline infeasible: n*l_g < K*");
  }
  AllocationVector alloc;
  alloc.order.resize(n);
  for (int i = 0; i < n; ++i) alloc.order[i] = i;
  alloc.success_prob = std::nan("");
  alloc.loads.assign(n, 0);
  for (long long attempt = 0; attempt < 1000000; ++attempt) {
    long long total = 0;
    int high = 0;
    for (int i = 0; i < n; ++i) {
      bool take_high = rng.bernoulli(good_probs[i]);
      alloc.loads[i] = take_high ? profile.l_g : profile.l_b;
      total += alloc.loads[i];
      high += take_high ? 1 : 0;
    }
    if (total >= profile.k_star) {
      alloc.prefix_size = high;
      return alloc;
    }
  }
  throw std::runtime_error("static assignment resampling did not terminate");
}

AllocationVector genie_assign(std::span<const WorkerState> prev_states,
                              std::span<const WorkerParams> params,
                              const LoadProfile& profile) {
  std::vector<double> probs(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    probs[i] = prev_states[i] == WorkerState::good ? params[i].p_gg : 1.0 - params[i].p_bb;
  }
  return optimal_prefix_allocation(probs, profile);
}

AllocationVector genie_assign_initial(std::span<const WorkerParams> params,
                                      const LoadProfile& profile) {
  std::vector<double> probs(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    probs[i] = stationary_distribution(params[i]).first;
  }
  return optimal_prefix_allocation(probs, profile);
}

double throughput(std::span<const RoundRecord> outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("throughput of an empty round list");
  long long successes = 0;
  for (const auto& rec : outcomes) successes += rec.success ? 1 : 0;
  return static_cast<double>(successes) / static_cast<double>(outcomes.size());
}

Simulation::Simulation(ScenarioConfig cfg)
    : cfg_(std::move(cfg)),
      strategy_stream_(derive_stream(0, 0)),
      data_stream_(derive_stream(0, 0)),
      est_(0) {
  validate_config(cfg_);
  params_ = cfg_.worker_params();
  profile_ = cfg_.profile();
  worker_streams_.reserve(cfg_.n);
  for (int i = 0; i < cfg_.n; ++i) {
    worker_streams_.push_back(derive_stream(cfg_.seed, static_cast<std::uint64_t>(i)));
  }
  strategy_stream_ = derive_stream(cfg_.seed, kStrategyStream);
  data_stream_ = derive_stream(cfg_.seed, kDataStream);
  state_ = sample_initial_states(params_, worker_streams_);
  est_ = Estimator(cfg_.n);

  if (cfg_.fidelity == Fidelity::full) {
    scheme_ = CodingScheme::make(cfg_.n, cfg_.r, cfg_.k, cfg_.deg_f, cfg_.prime);
    dataset_.chunks.assign(cfg_.k, std::vector<fe>(kFullFidelityChunkLen));
    for (auto& chunk : dataset_.chunks) {
      for (auto& v : chunk) v = data_stream_.next_below(scheme_.p);
    }
    shards_ = encode(dataset_, scheme_);
  }
}

AllocationVector Simulation::choose_allocation() {
  switch (cfg_.strategy) {
    case Strategy::lea:
      return optimal_prefix_allocation(est_.good_probabilities(), profile_);
    case Strategy::genie:
      return prev_states_ ? genie_assign(*prev_states_, params_, profile_)
                          : genie_assign_initial(params_, profile_);
    default: {
      std::vector<double> probs(cfg_.n);
      for (int i = 0; i < cfg_.n; ++i) {
        probs[i] = cfg_.static_good_prob ? *cfg_.static_good_prob
                                         : stationary_distribution(params_[i]).first;
      }
      return static_assign(probs, profile_, strategy_stream_);
    }
  }
}

void Simulation::verify_full_fidelity(const RoundOutcome& outcome,
                                      const AllocationVector& alloc) {
  // Fresh work function each round, reusing the one-time encoding.
  WorkFunction f;
  f.kind = WorkFunction::Kind::elementwise_poly;
  f.coeffs.resize(cfg_.deg_f + 1);
  for (auto& c : f.coeffs) c = data_stream_.next_below(scheme_.p);
  f.coeffs.back() = 1 + data_stream_.next_below(scheme_.p - 1);

  std::vector<ShardResult> on_time_results;
  for (int i = 0; i < cfg_.n; ++i) {
    if (outcome.completion_times[i] > cfg_.d * (1.0 + kDeadlineSlack)) continue;
    // Worker i computes its first l_i stored shards: slots (i*r)+1 .. (i*r)+l_i.
    for (long long s = 0; s < alloc.loads[i]; ++s) {
      int slot = i * cfg_.r + static_cast<int>(s) + 1;
      on_time_results.push_back(
          {slot, apply_function(f, shards_[slot - 1].payload, scheme_.p)});
    }
  }

  bool decoded_ok = false;
  if (static_cast<long long>(on_time_results.size()) >= scheme_.recovery_threshold) {
    auto decoded = decode(on_time_results, scheme_, f);
    decoded_ok = true;
    for (int j = 0; j < cfg_.k; ++j) {
      if (decoded[j] != apply_function(f, dataset_.chunks[j], scheme_.p)) {
        throw std::logic_error("full-fidelity decode mismatch in round " +
                               std::to_string(outcome.round));
      }
    }
  }
  if (decoded_ok != outcome.success) {
    throw std::logic_error("full-fidelity success/decodability mismatch in round " +
                           std::to_string(outcome.round));
  }
}

RoundOutcome Simulation::run_round() {
  RoundOutcome outcome;
  outcome.round = state_.round;
  outcome.allocation = choose_allocation();
  outcome.true_states = state_.states;
  outcome.est_success_prob = outcome.allocation.success_prob;

  outcome.completion_times.resize(cfg_.n);
  outcome.on_time_evaluations = 0;
  for (int i = 0; i < cfg_.n; ++i) {
    outcome.completion_times[i] =
        completion_time(outcome.allocation.loads[i], state_.states[i], params_[i]);
    if (outcome.completion_times[i] <= cfg_.d * (1.0 + kDeadlineSlack)) {
      outcome.on_time_evaluations += outcome.allocation.loads[i];
    }
  }
  outcome.success = outcome.on_time_evaluations >= profile_.k_star;

  if (cfg_.fidelity == Fidelity::full) {
    verify_full_fidelity(outcome, outcome.allocation);
  }

  if (cfg_.strategy == Strategy::lea) {
    // The master sees every completion time, also past the deadline.
    std::vector<Observation> observed(cfg_.n);
    for (int i = 0; i < cfg_.n; ++i) {
      observed[i] = infer_state(outcome.allocation.loads[i], outcome.completion_times[i],
                                params_[i].mu_g, params_[i].mu_b);
    }
    est_.observe(observed);
  }

  prev_states_ = state_.states;
  step_states(state_, params_, worker_streams_);
  return outcome;
}

SummaryReport Simulation::run() {
  SummaryReport report;
  report.config = cfg_;
  report.seed = cfg_.seed;
  report.rounds = cfg_.rounds;
  report.log.reserve(cfg_.rounds);
  if (cfg_.log_estimates) report.estimate_log.reserve(cfg_.rounds);

  for (long long m = 0; m < cfg_.rounds; ++m) {
    RoundOutcome outcome = run_round();
    RoundRecord rec;
    rec.round = outcome.round;
    rec.i_star = outcome.allocation.prefix_size;
    rec.est_success_prob = outcome.est_success_prob;
    rec.n_good_true = 0;
    for (auto s : outcome.true_states) {
      rec.n_good_true += s == WorkerState::good ? 1 : 0;
    }
    rec.on_time_evals = outcome.on_time_evaluations;
    rec.success = outcome.success;
    report.successes += outcome.success ? 1 : 0;
    report.log.push_back(rec);
    if (cfg_.log_estimates) {
      std::vector<std::pair<double, double>> snap(cfg_.n);
      for (int i = 0; i < cfg_.n; ++i) snap[i] = {est_.p_hat_gg(i), est_.p_hat_bb(i)};
      report.estimate_log.push_back(std::move(snap));
    }
  }
  report.throughput = throughput(report.log);
  if (cfg_.strategy == Strategy::lea) {
    report.final_p_hat_gg.resize(cfg_.n);
    report.final_p_hat_bb.resize(cfg_.n);
    for (int i = 0; i < cfg_.n; ++i) {
      report.final_p_hat_gg[i] = est_.p_hat_gg(i);
      report.final_p_hat_bb[i] = est_.p_hat_bb(i);
    }
  }
  return report;
}

SummaryReport run_simulation(const ScenarioConfig& cfg) { return Simulation(cfg).run(); }

std::string rounds_csv(const SummaryReport& report) {
  std::ostringstream out;
  out << "round,strategy,i_star,est_success_prob,n_good_true,on_time_evals,success\n";
  const std::string strategy = to_string(report.config.strategy);
  for (const auto& rec : report.log) {
    out << rec.round << ',' << strategy << ',' << rec.i_star << ','
        << fmt_prob(rec.est_success_prob) << ',' << rec.n_good_true << ','
        << rec.on_time_evals << ',' << (rec.success ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string estimates_csv(const SummaryReport& report) {
  std::ostringstream out;
  out << "round,worker,p_hat_gg,p_hat_bb\n";
  for (std::size_t m = 0; m < report.estimate_log.size(); ++m) {
    const auto& snap = report.estimate_log[m];
    for (std::size_t i = 0; i < snap.size(); ++i) {
      out << report.log[m].round << ',' << (i + 1) << ',' << fmt_prob(snap[i].first)
          << ',' << fmt_prob(snap[i].second) << '\n';
    }
  }
  return out.str();
}

std::string summary_text(const SummaryReport& report) {
  std::ostringstream out;
  LoadProfile profile = report.config.profile();
  out << "strategy = " << to_string(report.config.strategy) << '\n';
  out << "rounds = " << report.rounds << '\n';
  out << "seed = " << report.seed << '\n';
  out << "throughput = " << fmt_prob(report.throughput) << '\n';
  out << "successes = " << report.successes << '\n';
  out << "k_star = " << profile.k_star << '\n';
  out << "l_g = " << profile.l_g << '\n';
  out << "l_b = " << profile.l_b << '\n';
  for (std::size_t i = 0; i < report.final_p_hat_gg.size(); ++i) {
    out << "worker." << (i + 1) << ".p_hat_gg = " << fmt_prob(report.final_p_hat_gg[i])
        << '\n';
    out << "worker." << (i + 1) << ".p_hat_bb = " << fmt_prob(report.final_p_hat_bb[i])
        << '\n';
  }
  return out.str();
}

}  // namespace lea
