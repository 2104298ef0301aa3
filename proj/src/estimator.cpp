#include "lea/estimator.hpp"

#include <cmath>
#include <stdexcept>

namespace lea {

Observation infer_state(long long load, double observed_time, double mu_g,
                        double mu_b, double tol) {
  if (load < 1 || observed_time <= 0.0) return Observation::unknown;
  double t_good = static_cast<double>(load) / mu_g;
  double t_bad = static_cast<double>(load) / mu_b;
  if (std::abs(observed_time - t_good) <= tol) return Observation::good;
  if (std::abs(observed_time - t_bad) <= tol) return Observation::bad;
  return Observation::unknown;
}

Estimator::Estimator(int n, long long init_count, double unknown_prior)
    : counts_(n), last_(n, Observation::unknown), prior_(unknown_prior) {
  if (n < 0 || init_count < 0) throw std::invalid_argument("bad estimator init");
  for (auto& c : counts_) {
    c.gg = c.gb = c.bg = c.bb = init_count;
  }
}

void Estimator::observe(std::span<const Observation> states) {
  if (states.size() != counts_.size()) {
    throw std::invalid_argument("observation vector length != n");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    Observation now = states[i];
    Observation prev = last_[i];
    if (prev != Observation::unknown && now != Observation::unknown) {
      if (prev == Observation::good) {
        (now == Observation::good ? counts_[i].gg : counts_[i].gb) += 1;
      } else {
        (now == Observation::good ? counts_[i].bg : counts_[i].bb) += 1;
      }
    }
    last_[i] = now;
  }
}

double Estimator::p_hat_gg(int worker) const {
  const auto& c = counts_[worker];
  return static_cast<double>(c.gg) / static_cast<double>(c.gg + c.gb);
}

double Estimator::p_hat_bb(int worker) const {
  const auto& c = counts_[worker];
  return static_cast<double>(c.bb) / static_cast<double>(c.bg + c.bb);
}

double Estimator::good_probability(int worker) const {
  switch (last_[worker]) {
    case Observation::good:
      return p_hat_gg(worker);
    case Observation::bad:
      return 1.0 - p_hat_bb(worker);
    default:
      return prior_;
  }
}

std::vector<double> Estimator::good_probabilities() const {
  std::vector<double> out(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out[i] = good_probability(static_cast<int>(i));
  }
  return out;
}

}  // namespace lea
