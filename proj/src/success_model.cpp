#include "lea/success_model.hpp"

#include <stdexcept>
#include <vector>

namespace lea {

long long min_good_required(int g_size, const LoadProfile& profile) {
  long long numerator =
      profile.k_star - static_cast<long long>(profile.n - g_size) * profile.l_b;
  if (numerator <= 0) return 0;
  if (profile.l_g == 0) return kInfeasible;
  return (numerator + profile.l_g - 1) / profile.l_g;  // ceil
}

double success_probability_dp(std::span<const double> good_probs,
                              const LoadProfile& profile) {
  const int size = static_cast<int>(good_probs.size());
  long long a = min_good_required(size, profile);
  if (a == kInfeasible || a > size) return 0.0;
  if (a <= 0) return 1.0;

  // dist[c] = P(c of the first i workers are good).
  std::vector<double> dist(size + 1, 0.0);
  dist[0] = 1.0;
  for (int i = 0; i < size; ++i) {
    double pg = good_probs[i];
    for (int c = i + 1; c > 0; --c) {
      dist[c] = dist[c] * (1.0 - pg) + dist[c - 1] * pg;
    }
    dist[0] *= 1.0 - pg;
  }
  double tail = 0.0;
  for (int c = size; c >= a; --c) tail += dist[c];
  return tail;
}

double success_probability_bruteforce(std::span<const double> good_probs,
                                      const LoadProfile& profile) {
  const int size = static_cast<int>(good_probs.size());
  if (size > 20) throw std::invalid_argument("brute-force guard: |G_g| <= 20");
  long long a = min_good_required(size, profile);
  if (a == kInfeasible) return 0.0;
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (1ULL << size); ++mask) {
    int good = 0;
    double prob = 1.0;
    for (int i = 0; i < size; ++i) {
      if (mask & (1ULL << i)) {
        ++good;
        prob *= good_probs[i];
      } else {
        prob *= 1.0 - good_probs[i];
      }
    }
    if (good >= a) total += prob;
  }
  return total;
}

}  // namespace lea
