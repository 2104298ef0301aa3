#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lea {

enum class Observation : std::uint8_t { good, bad, unknown };

// Classifies a worker's completion time against the two speed tiers.
// Returns unknown when the time matches neither tier within tol (the
// round is then skipped for that worker's counts) or when load < 1.
Observation infer_state(long long load, double observed_time, double mu_g,
                        double mu_b, double tol = 1e-9);

struct TransitionCounts {
  long long gg = 0;
  long long gb = 0;
  long long bg = 0;
  long long bb = 0;

  long long total() const { return gg + gb + bg + bb; }
};

// Plug-in estimator of per-worker transition probabilities from observed
// state sequences.  Counts start at init_count (Laplace smoothing, so
// estimates are well defined from round 1); the first observation of a
// worker sets last_state without incrementing any count.
class Estimator {
 public:
  explicit Estimator(int n, long long init_count = 1, double unknown_prior = 0.5);

  int n() const { return static_cast<int>(counts_.size()); }

  // Update phase: increments the (last -> observed) count for each worker
  // whose last state and observation are both known, then refreshes the
  // estimates.  Unknown observations leave that worker's state unknown.
  void observe(std::span<const Observation> states);

  double p_hat_gg(int worker) const;
  double p_hat_bb(int worker) const;

  // Estimated good-state probability for the coming round: p_hat_gg if
  // last seen good, 1 - p_hat_bb if bad, the prior if never classified.
  double good_probability(int worker) const;
  std::vector<double> good_probabilities() const;

  const TransitionCounts& counts(int worker) const { return counts_[worker]; }
  Observation last_state(int worker) const { return last_[worker]; }

 private:
  std::vector<TransitionCounts> counts_;
  std::vector<Observation> last_;
  double prior_;
};

}  // namespace lea
