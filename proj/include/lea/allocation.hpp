#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lea/success_model.hpp"

namespace lea {

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two-tier load vector for one round.  The workers listed first in
// `order` (sorted by good-probability, descending, ties by index) receive
// l_g; prefix_size is how many.
struct AllocationVector {
  std::vector<long long> loads;  // by worker index
  int prefix_size = 0;
  std::vector<int> order;
  double success_prob = 0.0;

  long long total_load() const;
  int high_tier_count(long long l_g) const;
};

// Evaluates the estimated success probability for every prefix size
// 0..n of the good-probability-descending order and returns the
// maximizer (smallest prefix among ties within 1e-12).
// Throws InfeasibleError when n*l_g < K*.
AllocationVector optimal_prefix_allocation(std::span<const double> good_probs,
                                           const LoadProfile& profile);

// Exhaustive search over all 2^n high-tier subsets; validates prefix
// optimality.  Guard: n <= 10.
struct SubsetSearchResult {
  double success_prob = 0.0;
  std::uint32_t best_mask = 0;
};
SubsetSearchResult bruteforce_best_subset(std::span<const double> good_probs,
                                          const LoadProfile& profile);

// Exhaustive search over all integer load vectors in {0..r}^n with total
// >= K*, scoring each by enumerating worker-state combinations and
// counting on-time evaluations.  Validates two-value sufficiency.
// Guards: n <= 5, r <= 4.
double bruteforce_best_general_loads(std::span<const double> good_probs,
                                     long long k_star, int r, double d,
                                     double mu_g, double mu_b);

}  // namespace lea
