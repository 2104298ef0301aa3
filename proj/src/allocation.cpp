#include "lea/allocation.hpp"

#include <algorithm>
#include <numeric>

namespace lea {

namespace {
constexpr double kTieTol = 1e-12;
}

long long AllocationVector::total_load() const {
  long long sum = 0;
  for (long long l : loads) sum += l;
  return sum;
}

int AllocationVector::high_tier_count(long long l_g) const {
  int count = 0;
  for (long long l : loads) {
    if (l == l_g) ++count;
  }
  return count;
}

AllocationVector optimal_prefix_allocation(std::span<const double> good_probs,
                                           const LoadProfile& profile) {
  const int n = profile.n;
  if (static_cast<int>(good_probs.size()) != n) {
    throw std::invalid_argument("probability vector length != n");
  }
  if (static_cast<long long>(n) * profile.l_g < profile.k_star) {
    throw InfeasibleError("deadline infeasible: n*l_g < K*");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return good_probs[a] > good_probs[b]; });

  std::vector<double> sorted_probs(n);
  for (int i = 0; i < n; ++i) sorted_probs[i] = good_probs[order[i]];

  // Estimated success probability is 0 for any prefix whose total load
  // misses K*, so only feasible prefixes can be maximizers; restricting
  // the scan to them also keeps the returned vector feasible when every
  // candidate scores 0.  Smallest prefix wins ties within kTieTol.
  int best_i = -1;
  double best_prob = -1.0;
  for (int i_tilde = 0; i_tilde <= n; ++i_tilde) {
    long long total = static_cast<long long>(i_tilde) * profile.l_g +
                      static_cast<long long>(n - i_tilde) * profile.l_b;
    if (total < profile.k_star) continue;
    double prob = success_probability_dp(
        std::span<const double>(sorted_probs.data(), i_tilde), profile);
    if (prob > best_prob + kTieTol) {
      best_prob = prob;
      best_i = i_tilde;
    }
  }

  AllocationVector alloc;
  alloc.prefix_size = best_i;
  alloc.order = order;
  alloc.success_prob = best_prob;
  alloc.loads.assign(n, profile.l_b);
  for (int i = 0; i < best_i; ++i) alloc.loads[order[i]] = profile.l_g;
  return alloc;
}

SubsetSearchResult bruteforce_best_subset(std::span<const double> good_probs,
                                          const LoadProfile& profile) {
  const int n = profile.n;
  if (n > 10) throw std::invalid_argument("subset search guard: n <= 10");
  if (static_cast<int>(good_probs.size()) != n) {
    throw std::invalid_argument("probability vector length != n");
  }
  SubsetSearchResult best;
  best.success_prob = -1.0;
  std::vector<double> members;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    members.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) members.push_back(good_probs[i]);
    }
    long long total = static_cast<long long>(members.size()) * profile.l_g +
                      static_cast<long long>(n - members.size()) * profile.l_b;
    if (total < profile.k_star) continue;
    double prob = success_probability_dp(members, profile);
    if (prob > best.success_prob) {
      best.success_prob = prob;
      best.best_mask = mask;
    }
  }
  if (best.success_prob < 0.0) {
    throw InfeasibleError("deadline infeasible: no subset reaches K*");
  }
  return best;
}

double bruteforce_best_general_loads(std::span<const double> good_probs,
                                     long long k_star, int r, double d,
                                     double mu_g, double mu_b) {
  const int n = static_cast<int>(good_probs.size());
  if (n > 5 || r > 4) throw std::invalid_argument("general search guard: n <= 5, r <= 4");

  std::vector<long long> loads(n, 0);
  double best = -1.0;
  const double eps = 1e-9;
  auto score = [&]() {
    double prob = 0.0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      double p = 1.0;
      long long on_time = 0;
      for (int i = 0; i < n; ++i) {
        bool good = mask & (1U << i);
        p *= good ? good_probs[i] : 1.0 - good_probs[i];
        double mu = good ? mu_g : mu_b;
        if (static_cast<double>(loads[i]) <= mu * d + eps) on_time += loads[i];
      }
      if (on_time >= k_star) prob += p;
    }
    return prob;
  };

  // Odometer over {0..r}^n.
  while (true) {
    long long total = 0;
    for (long long l : loads) total += l;
    if (total >= k_star) best = std::max(best, score());
    int pos = 0;
    while (pos < n && loads[pos] == r) {
      loads[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++loads[pos];
  }
  if (best < 0.0) {
    throw InfeasibleError("deadline infeasible: no load vector reaches K*");
  }
  return best;
}

}  // namespace lea
