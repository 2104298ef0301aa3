#include "lea/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lea/coding.hpp"

namespace lea {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::lea:
      return "lea";
    case Strategy::static_:
      return "static";
    default:
      return "genie";
  }
}

std::string to_string(Fidelity f) {
  return f == Fidelity::analytic ? "analytic" : "full";
}

Strategy strategy_from_string(std::string_view s) {
  if (s == "lea") return Strategy::lea;
  if (s == "static") return Strategy::static_;
  if (s == "genie") return Strategy::genie;
  throw ConfigError("strategy: expected lea, static or genie, got '" + std::string(s) + "'");
}

Fidelity fidelity_from_string(std::string_view s) {
  if (s == "analytic") return Fidelity::analytic;
  if (s == "full") return Fidelity::full;
  throw ConfigError("fidelity: expected analytic or full, got '" + std::string(s) + "'");
}

std::vector<WorkerParams> ScenarioConfig::worker_params() const {
  std::vector<WorkerParams> workers(n, WorkerParams{p_gg, p_bb, mu_g, mu_b});
  for (const auto& [i, v] : p_gg_overrides) {
    if (i >= 1 && i <= n) workers[i - 1].p_gg = v;
  }
  for (const auto& [i, v] : p_bb_overrides) {
    if (i >= 1 && i <= n) workers[i - 1].p_bb = v;
  }
  return workers;
}

int ScenarioConfig::k_star() const { return recovery_threshold(n, r, k, deg_f); }

LoadProfile ScenarioConfig::profile() const {
  LoadProfile p;
  p.l_g = std::min(static_cast<long long>(std::floor(mu_g * d)), static_cast<long long>(r));
  p.l_b = static_cast<long long>(std::floor(mu_b * d));
  p.k_star = k_star();
  p.n = n;
  return p;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view key, std::string_view value) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(value) + "'");
  }
  return out;
}

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key) + ": expected a nonnegative integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  try {
    std::size_t pos = 0;
    double out = std::stod(std::string(value), &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return out;
  } catch (const std::exception&) {
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(value) + "'");
  }
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(value) + "'");
}

void set_override(std::vector<std::pair<int, double>>& overrides, int worker, double value) {
  for (auto& [i, v] : overrides) {
    if (i == worker) {
      v = value;
      return;
    }
  }
  overrides.emplace_back(worker, value);
}

}  // namespace

void apply_config_key(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "n") {
    cfg.n = static_cast<int>(parse_int(key, value));
  } else if (key == "r") {
    cfg.r = static_cast<int>(parse_int(key, value));
  } else if (key == "k") {
    cfg.k = static_cast<int>(parse_int(key, value));
  } else if (key == "deg_f") {
    cfg.deg_f = static_cast<int>(parse_int(key, value));
  } else if (key == "d") {
    cfg.d = parse_double(key, value);
  } else if (key == "mu_g") {
    cfg.mu_g = parse_double(key, value);
  } else if (key == "mu_b") {
    cfg.mu_b = parse_double(key, value);
  } else if (key == "p_gg") {
    cfg.p_gg = parse_double(key, value);
  } else if (key == "p_bb") {
    cfg.p_bb = parse_double(key, value);
  } else if (key == "strategy") {
    cfg.strategy = strategy_from_string(value);
  } else if (key == "static_good_prob") {
    cfg.static_good_prob = parse_double(key, value);
  } else if (key == "rounds") {
    cfg.rounds = parse_int(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_uint(key, value);
  } else if (key == "fidelity") {
    cfg.fidelity = fidelity_from_string(value);
  } else if (key == "prime") {
    cfg.prime = parse_uint(key, value);
  } else if (key == "log_estimates") {
    cfg.log_estimates = parse_bool(key, value);
  } else if (key.starts_with("worker.")) {
    // worker.<index>.p_gg / worker.<index>.p_bb, 1-based index
    std::string_view rest = key.substr(7);
    std::size_t dot = rest.find('.');
    if (dot == std::string_view::npos) {
      throw ConfigError("unknown key '" + std::string(key) + "'");
    }
    int worker = static_cast<int>(parse_int(key, rest.substr(0, dot)));
    std::string_view field = rest.substr(dot + 1);
    if (worker < 1) throw ConfigError(std::string(key) + ": worker index must be >= 1");
    if (field == "p_gg") {
      set_override(cfg.p_gg_overrides, worker, parse_double(key, value));
    } else if (field == "p_bb") {
      set_override(cfg.p_bb_overrides, worker, parse_double(key, value));
    } else {
      throw ConfigError("unknown key '" + std::string(key) + "'");
    }
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

void validate_config(ScenarioConfig& cfg) {
  cfg.warnings.clear();
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  require(cfg.n >= 1, "n: must be >= 1 (missing or invalid)");
  require(cfg.r >= 1, "r: must be >= 1 (missing or invalid)");
  require(cfg.k >= 1, "k: must be >= 1 (missing or invalid)");
  require(cfg.deg_f >= 1, "deg_f: must be >= 1");
  require(cfg.d > 0.0, "d: deadline must be > 0 (missing or invalid)");
  require(cfg.mu_b > 0.0, "mu_b: must be > 0 (missing or invalid)");
  require(cfg.mu_g > cfg.mu_b, "mu_g: must exceed mu_b");
  require(cfg.rounds >= 1, "rounds: must be >= 1");

  auto check_prob = [&](const std::string& key, double v) {
    require(v > 0.0 && v < 1.0, key + ": must lie strictly in (0, 1)");
  };
  check_prob("p_gg", cfg.p_gg);
  check_prob("p_bb", cfg.p_bb);
  for (const auto& [i, v] : cfg.p_gg_overrides) {
    require(i <= cfg.n, "worker." + std::to_string(i) + ".p_gg: index exceeds n");
    check_prob("worker." + std::to_string(i) + ".p_gg", v);
  }
  for (const auto& [i, v] : cfg.p_bb_overrides) {
    require(i <= cfg.n, "worker." + std::to_string(i) + ".p_bb: index exceeds n");
    check_prob("worker." + std::to_string(i) + ".p_bb", v);
  }
  if (cfg.static_good_prob) {
    require(*cfg.static_good_prob >= 0.0 && *cfg.static_good_prob <= 1.0,
            "static_good_prob: must lie in [0, 1]");
  }

  // Scheme construction checks the prime and field size.
  try {
    CodingScheme::make(cfg.n, cfg.r, cfg.k, cfg.deg_f, cfg.prime);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("coding: ") + e.what());
  }

  LoadProfile profile = cfg.profile();
  require(profile.l_g >= 1, "d: deadline too small, l_g = floor(mu_g*d) is 0");
  require(static_cast<long long>(cfg.n) * profile.l_g >= profile.k_star,
          "deadline infeasible: n*l_g < K*");
  if (profile.k_star < static_cast<long long>(cfg.n) * profile.l_b) {
    cfg.warnings.push_back(
        "K* < n*l_b: every round succeeds regardless of states (trivial regime)");
  }
}

ScenarioConfig parse_config_text(std::string_view text) {
  ScenarioConfig cfg;
  std::set<std::string> seen;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ConfigError("duplicate key '" + key + "'");
    }
    apply_config_key(cfg, key, value);
  }
  validate_config(cfg);
  return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string canonical_config_text(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "n = " << cfg.n << '\n';
  out << "r = " << cfg.r << '\n';
  out << "k = " << cfg.k << '\n';
  out << "deg_f = " << cfg.deg_f << '\n';
  out << "d = " << fmt_double(cfg.d) << '\n';
  out << "mu_g = " << fmt_double(cfg.mu_g) << '\n';
  out << "mu_b = " << fmt_double(cfg.mu_b) << '\n';
  out << "p_gg = " << fmt_double(cfg.p_gg) << '\n';
  out << "p_bb = " << fmt_double(cfg.p_bb) << '\n';
  auto ordered = [](std::vector<std::pair<int, double>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  for (const auto& [i, v] : ordered(cfg.p_gg_overrides)) {
    out << "worker." << i << ".p_gg = " << fmt_double(v) << '\n';
  }
  for (const auto& [i, v] : ordered(cfg.p_bb_overrides)) {
    out << "worker." << i << ".p_bb = " << fmt_double(v) << '\n';
  }
  out << "strategy = " << to_string(cfg.strategy) << '\n';
  if (cfg.static_good_prob) {
    out << "static_good_prob = " << fmt_double(*cfg.static_good_prob) << '\n';
  }
  out << "rounds = " << cfg.rounds << '\n';
  out << "seed = " << cfg.seed << '\n';
  out << "fidelity = " << to_string(cfg.fidelity) << '\n';
  out << "prime = " << cfg.prime << '\n';
  out << "log_estimates = " << (cfg.log_estimates ? "true" : "false") << '\n';
  return out.str();
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
  auto sorted = [](std::vector<std::pair<int, double>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return a.n == b.n && a.r == b.r && a.k == b.k && a.deg_f == b.deg_f && a.d == b.d &&
         a.mu_g == b.mu_g && a.mu_b == b.mu_b && a.p_gg == b.p_gg && a.p_bb == b.p_bb &&
         sorted(a.p_gg_overrides) == sorted(b.p_gg_overrides) &&
         sorted(a.p_bb_overrides) == sorted(b.p_bb_overrides) &&
         a.strategy == b.strategy && a.static_good_prob == b.static_good_prob &&
         a.rounds == b.rounds && a.seed == b.seed && a.fidelity == b.fidelity &&
         a.prime == b.prime && a.log_estimates == b.log_estimates;
}

}  // namespace lea
