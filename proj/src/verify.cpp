#include "lea/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lea/allocation.hpp"
#include "lea/coding.hpp"
#include "lea/rng.hpp"
#include "lea/success_model.hpp"

namespace lea {

namespace {

LoadProfile random_profile(Rng& rng, int n) {
  LoadProfile profile;
  profile.n = n;
  profile.l_b = static_cast<long long>(rng.next_below(3));       // 0..2
  profile.l_g = profile.l_b + 1 + static_cast<long long>(rng.next_below(4));
  long long max_total = static_cast<long long>(n) * profile.l_g;
  profile.k_star = 1 + static_cast<long long>(rng.next_below(max_total));
  return profile;
}

bool check_dp_vs_bruteforce(Rng& rng) {
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(12));
    LoadProfile profile = random_profile(rng, n);
    int g_size = static_cast<int>(rng.next_below(n + 1));
    std::vector<double> probs(g_size);
    for (auto& p : probs) p = rng.next_unit();
    double dp = success_probability_dp(probs, profile);
    double bf = success_probability_bruteforce(probs, profile);
    if (std::abs(dp - bf) > 1e-12) return false;
  }
  return true;
}

bool check_prefix_optimality(Rng& rng) {
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(10));
    LoadProfile profile = random_profile(rng, n);
    std::vector<double> probs(n);
    for (auto& p : probs) p = rng.next_unit();
    double prefix = optimal_prefix_allocation(probs, profile).success_prob;
    double subset = bruteforce_best_subset(probs, profile).success_prob;
    if (std::abs(prefix - subset) > 1e-12) return false;
  }
  return true;
}

bool check_two_value_sufficiency(Rng& rng) {
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(5));
    int r = 1 + static_cast<int>(rng.next_below(4));
    double d = 1.0;
    // Speeds drawn so that l_b <= mu_b*d < l_g <= r: the good-tier load
    // is never finishable in the bad state, the regime the two-tier
    // success model describes.
    double mu_b = rng.next_unit() * r;
    long long l_b = static_cast<long long>(std::floor(mu_b));
    double mu_g = static_cast<double>(l_b + 1) + rng.next_unit() * (r - l_b);
    LoadProfile profile;
    profile.n = n;
    profile.l_g = std::min(static_cast<long long>(std::floor(mu_g * d)),
                           static_cast<long long>(r));
    profile.l_b = l_b;
    long long max_total = static_cast<long long>(n) * profile.l_g;
    profile.k_star = 1 + static_cast<long long>(rng.next_below(max_total));
    std::vector<double> probs(n);
    for (auto& p : probs) p = rng.next_unit();
    double two_value = bruteforce_best_subset(probs, profile).success_prob;
    double general =
        bruteforce_best_general_loads(probs, profile.k_star, r, d, mu_g, mu_b);
    if (std::abs(two_value - general) > 1e-12) return false;
  }
  return true;
}

bool check_coding_decodability(Rng& rng) {
  // Small schemes in both modes; decode from random K*-subsets must match
  // direct evaluation.
  struct Case {
    int n, r, k, deg_f;
  };
  const Case cases[] = {{3, 2, 2, 2}, {2, 3, 3, 1}, {3, 2, 4, 2}, {4, 2, 3, 2}, {2, 3, 5, 3}};
  for (const auto& c : cases) {
    auto scheme = CodingScheme::make(c.n, c.r, c.k, c.deg_f, 2147483647ULL);
    Dataset data;
    data.chunks.assign(c.k, std::vector<fe>(3));
    for (auto& chunk : data.chunks) {
      for (auto& v : chunk) v = rng.next_below(scheme.p);
    }
    auto shards = encode(data, scheme);
    WorkFunction f;
    f.kind = WorkFunction::Kind::elementwise_poly;
    f.coeffs.resize(c.deg_f + 1);
    for (auto& coeff : f.coeffs) coeff = rng.next_below(scheme.p);
    f.coeffs.back() = 1 + rng.next_below(scheme.p - 1);

    std::vector<std::vector<fe>> expected(c.k);
    for (int j = 0; j < c.k; ++j) expected[j] = apply_function(f, data.chunks[j], scheme.p);

    int nr = scheme.shard_count();
    std::vector<int> slots(nr);
    for (int v = 0; v < nr; ++v) slots[v] = v + 1;
    for (int rep = 0; rep < 40; ++rep) {
      // Random K*-subset of the slots.
      for (int v = nr - 1; v > 0; --v) {
        std::swap(slots[v], slots[rng.next_below(v + 1)]);
      }
      std::vector<ShardResult> results;
      for (int v = 0; v < scheme.recovery_threshold; ++v) {
        results.push_back({slots[v], apply_function(f, shards[slots[v] - 1].payload, scheme.p)});
      }
      if (decode(results, scheme, f) != expected) return false;
    }
  }
  return true;
}

}  // namespace

int run_verification(const std::function<void(const std::string&, bool)>& report) {
  Rng rng = derive_stream(20240915, 0);
  int failures = 0;
  auto run = [&](const std::string& name, bool ok) {
    if (!ok) ++failures;
    if (report) report(name, ok);
  };
  run("success_model: DP matches subset enumeration", check_dp_vs_bruteforce(rng));
  run("allocation: prefix search matches 2^n subset search", check_prefix_optimality(rng));
  run("allocation: two-tier vectors match general integer loads",
      check_two_value_sufficiency(rng));
  run("coding: decode from random K*-subsets matches direct evaluation",
      check_coding_decodability(rng));
  return failures;
}

}  // namespace lea
