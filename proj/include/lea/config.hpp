#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lea/field.hpp"
#include "lea/success_model.hpp"
#include "lea/worker_net.hpp"

namespace lea {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Strategy { lea, static_, genie };
enum class Fidelity { analytic, full };

std::string to_string(Strategy s);
std::string to_string(Fidelity f);
Strategy strategy_from_string(std::string_view s);
Fidelity fidelity_from_string(std::string_view s);

// One simulation scenario.  Speeds are global (the two tiers the deadline
// math depends on); transition probabilities may be overridden per worker
// with dotted keys (worker.3.p_gg = 0.9).
struct ScenarioConfig {
  int n = 0;
  int r = 0;
  int k = 0;
  int deg_f = 1;
  double d = 0.0;
  double mu_g = 0.0;
  double mu_b = 0.0;
  double p_gg = 0.0;
  double p_bb = 0.0;
  std::vector<std::pair<int, double>> p_gg_overrides;  // (worker index, value)
  std::vector<std::pair<int, double>> p_bb_overrides;
  Strategy strategy = Strategy::lea;
  std::optional<double> static_good_prob;
  long long rounds = 100000;
  std::uint64_t seed = 1;
  Fidelity fidelity = Fidelity::analytic;
  fe prime = kDefaultPrime;
  bool log_estimates = false;

  std::vector<std::string> warnings;

  std::vector<WorkerParams> worker_params() const;
  int k_star() const;
  LoadProfile profile() const;
};

// Applies one key=value pair; throws ConfigError naming the key on an
// unknown key or an unparsable value.
void apply_config_key(ScenarioConfig& cfg, std::string_view key, std::string_view value);

// Checks invariants (mu_g > mu_b > 0, probabilities strictly inside
// (0,1), feasibility n*l_g >= K*, prime large enough) and records
// warnings such as the always-feasible regime K* < n*l_b.
void validate_config(ScenarioConfig& cfg);

// Flat key=value text, '#' comments.  Validates before returning.
ScenarioConfig parse_config_text(std::string_view text);
ScenarioConfig parse_config(const std::string& path);

// Canonical emission; parse_config_text(canonical_config_text(c)) == c.
std::string canonical_config_text(const ScenarioConfig& cfg);

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

}  // namespace lea
