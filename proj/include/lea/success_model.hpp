#pragma once

#include <cstdint>
#include <limits>
#include <span>

namespace lea {

// The two canonical load tiers for a round with deadline d:
// l_g = min(floor(mu_g*d), r), l_b = floor(mu_b*d), and the recovery
// threshold K* that on-time evaluations must reach.
struct LoadProfile {
  long long l_g = 0;
  long long l_b = 0;
  long long k_star = 1;
  int n = 0;
};

inline constexpr long long kInfeasible = std::numeric_limits<long long>::max();

// Minimum number of good-state workers among the g_size high-tier workers
// needed to reach K* by the deadline:
//   a = max(0, ceil((K* - (n - g_size)*l_b) / l_g)).
// Returns kInfeasible when l_g = 0 and the low tier alone cannot reach K*.
long long min_good_required(int g_size, const LoadProfile& profile);

// P(at least min_good_required of the high-tier workers are good), where
// good_probs are the per-worker good-state probabilities of the high-tier
// set.  Poisson-binomial tail via an O(|G_g|^2) dynamic program, exact up
// to floating point.
double success_probability_dp(std::span<const double> good_probs,
                              const LoadProfile& profile);

// Literal enumeration of all 2^|G_g| good/bad assignments; test oracle.
// Throws std::invalid_argument for |G_g| > 20.
double success_probability_bruteforce(std::span<const double> good_probs,
                                      const LoadProfile& profile);

}  // namespace lea
