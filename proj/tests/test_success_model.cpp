#include <doctest.h>

#include <cmath>
#include <vector>

#include "lea/rng.hpp"
#include "lea/success_model.hpp"

using namespace lea;

TEST_CASE("min_good_required") {
  LoadProfile p{10, 3, 99, 15};
  CHECK(min_good_required(8, p) == 8);   // ceil((99-21)/10)
  CHECK(min_good_required(10, p) == 9);  // ceil((99-15)/10)

  LoadProfile trivial{10, 3, 40, 15};  // K* <= n*l_b
  CHECK(min_good_required(0, trivial) == 0);

  LoadProfile degenerate{0, 3, 99, 15};
  CHECK(min_good_required(5, degenerate) == kInfeasible);
}

TEST_CASE("success probability, hand-checked instance") {
  // Workers {1,2} on the high tier, one low-tier worker, a = ceil(5/4) = 2.
  LoadProfile profile{4, 1, 6, 3};
  std::vector<double> probs = {0.8, 0.5};
  CHECK(success_probability_dp(probs, profile) == doctest::Approx(0.40).epsilon(1e-12));
  CHECK(success_probability_bruteforce(probs, profile) ==
        doctest::Approx(0.40).epsilon(1e-12));
}

TEST_CASE("trivial cases") {
  LoadProfile all_covered{4, 2, 6, 3};  // a = 0 with empty high tier
  CHECK(success_probability_dp({}, all_covered) == 1.0);

  LoadProfile needy{4, 0, 20, 3};  // a > |G_g|
  std::vector<double> two = {0.9, 0.9};
  CHECK(success_probability_dp(two, needy) == 0.0);

  LoadProfile p{4, 1, 6, 3};
  std::vector<double> ones = {1.0, 1.0};
  CHECK(success_probability_dp(ones, p) == doctest::Approx(1.0));
  std::vector<double> zeros = {0.0, 0.0};
  CHECK(success_probability_dp(zeros, p) == 0.0);
}

namespace {

LoadProfile random_profile(Rng& rng, int n) {
  LoadProfile profile;
  profile.n = n;
  profile.l_b = static_cast<long long>(rng.next_below(3));
  profile.l_g = profile.l_b + 1 + static_cast<long long>(rng.next_below(4));
  profile.k_star = 1 + static_cast<long long>(rng.next_below(n * profile.l_g));
  return profile;
}

}  // namespace

TEST_CASE("DP equals brute force on random instances") {
  Rng rng = derive_stream(31, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(12));
    LoadProfile profile = random_profile(rng, n);
    int g_size = static_cast<int>(rng.next_below(n + 1));
    std::vector<double> probs(g_size);
    for (auto& p : probs) p = rng.next_unit();
    CHECK(std::abs(success_probability_dp(probs, profile) -
                   success_probability_bruteforce(probs, profile)) <= 1e-12);
  }
}

TEST_CASE("success probability is nonincreasing in K*") {
  Rng rng = derive_stream(32, 0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.next_below(10));
    LoadProfile profile = random_profile(rng, n);
    int g_size = static_cast<int>(rng.next_below(n + 1));
    std::vector<double> probs(g_size);
    for (auto& p : probs) p = rng.next_unit();
    double prev = 1.0;
    for (long long k = 1; k <= n * profile.l_g + 2; ++k) {
      profile.k_star = k;
      double cur = success_probability_dp(probs, profile);
      CHECK(cur <= prev + 1e-15);
      prev = cur;
    }
  }
}

TEST_CASE("success probability is nondecreasing in each p_g") {
  Rng rng = derive_stream(33, 0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(8));
    LoadProfile profile = random_profile(rng, n);
    std::vector<double> probs(n);
    for (auto& p : probs) p = rng.next_unit();
    double base = success_probability_dp(probs, profile);
    int i = static_cast<int>(rng.next_below(n));
    probs[i] = probs[i] + (1.0 - probs[i]) * rng.next_unit();
    CHECK(success_probability_dp(probs, profile) >= base - 1e-15);
  }
}

TEST_CASE("adding a certain worker never hurts when a is unchanged") {
  Rng rng = derive_stream(34, 0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(8));
    LoadProfile profile = random_profile(rng, n);
    int g_size = static_cast<int>(rng.next_below(n));
    std::vector<double> probs(g_size);
    for (auto& p : probs) p = rng.next_unit();
    long long a_before = min_good_required(g_size, profile);
    double base = success_probability_dp(probs, profile);

    // Growing n and |G_g| together keeps n - |G_g| and hence a fixed.
    LoadProfile bigger = profile;
    bigger.n = profile.n + 1;
    std::vector<double> extended = probs;
    extended.push_back(1.0);
    REQUIRE(min_good_required(g_size + 1, bigger) == a_before);
    CHECK(success_probability_dp(extended, bigger) >= base - 1e-15);
  }
}
