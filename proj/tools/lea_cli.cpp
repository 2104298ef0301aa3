// Command-line front end for the coded-computing scheduling library.
// Talks to the core exclusively through the C API in lea/lea.h.

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lea/lea.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitVerifyFailure = 2;

struct ConfigDeleter {
  void operator()(lea_config* c) const { lea_config_free(c); }
};
struct ReportDeleter {
  void operator()(lea_report* r) const { lea_report_free(r); }
};
using ConfigPtr = std::unique_ptr<lea_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<lea_report, ReportDeleter>;

struct Overrides {
  std::string rounds;
  std::string seed;
  std::string strategy;
  std::string fidelity;
};

void add_override_flags(CLI::App* cmd, Overrides& ov) {
  cmd->add_option("--rounds", ov.rounds, "Override the number of rounds M");
  cmd->add_option("--seed", ov.seed, "Override the RNG seed");
  cmd->add_option("--strategy", ov.strategy, "Override the strategy: lea, static or genie");
  cmd->add_option("--fidelity", ov.fidelity, "Override the fidelity: analytic or full");
}

ConfigPtr load_config(const std::string& path, const Overrides& ov) {
  ConfigPtr cfg(lea_config_load(path.c_str()));
  if (!cfg) {
    std::fprintf(stderr, "error: %s\n", lea_last_error());
    return nullptr;
  }
  auto apply = [&](const char* key, const std::string& value) {
    if (value.empty()) return true;
    if (lea_config_set(cfg.get(), key, value.c_str()) != LEA_OK) {
      std::fprintf(stderr, "error: %s\n", lea_last_error());
      return false;
    }
    return true;
  };
  if (!apply("rounds", ov.rounds) || !apply("seed", ov.seed) ||
      !apply("strategy", ov.strategy) || !apply("fidelity", ov.fidelity)) {
    return nullptr;
  }
  for (int i = 0; i < lea_config_warning_count(cfg.get()); ++i) {
    std::fprintf(stderr, "warning: %s\n", lea_config_warning(cfg.get(), i));
  }
  return cfg;
}

int cmd_simulate(const std::string& config_path, const Overrides& ov,
                 const std::string& out, const std::string& format,
                 const std::string& est_log) {
  ConfigPtr cfg = load_config(config_path, ov);
  if (!cfg) return kExitConfigError;
  if (!est_log.empty() &&
      lea_config_set(cfg.get(), "log_estimates", "true") != LEA_OK) {
    std::fprintf(stderr, "error: %s\n", lea_last_error());
    return kExitConfigError;
  }
  ReportPtr report(lea_simulate(cfg.get()));
  if (!report) {
    std::fprintf(stderr, "error: %s\n", lea_last_error());
    return kExitConfigError;
  }
  const char* path = out.empty() ? nullptr : out.c_str();
  int rc = format == "csv" ? lea_report_write_rounds_csv(report.get(), path)
                           : lea_report_write_summary(report.get(), path);
  if (rc == LEA_OK && !est_log.empty()) {
    rc = lea_report_write_estimates_csv(report.get(), est_log.c_str());
  }
  if (rc != LEA_OK) {
    std::fprintf(stderr, "error: %s\n", lea_last_error());
    return kExitConfigError;
  }
  return kExitOk;
}

int cmd_sweep(const std::vector<std::string>& config_paths, const Overrides& ov,
              unsigned long long seed_lo, unsigned long long seed_hi,
              const std::string& out) {
  std::string csv = "config,seed,strategy,rounds,successes,throughput\n";
  for (const auto& path : config_paths) {
    for (unsigned long long seed = seed_lo; seed <= seed_hi; ++seed) {
      Overrides cell = ov;
      cell.seed = std::to_string(seed);
      ConfigPtr cfg = load_config(path, cell);
      if (!cfg) return kExitConfigError;
      ReportPtr report(lea_simulate(cfg.get()));
      if (!report) {
        std::fprintf(stderr, "error: %s\n", lea_last_error());
        return kExitConfigError;
      }
      char row[256];
      std::snprintf(row, sizeof(row), "%s,%llu,%s,%lld,%lld,%.12g\n", path.c_str(), seed,
                    lea_report_strategy(report.get()), lea_report_rounds(report.get()),
                    lea_report_successes(report.get()),
                    lea_report_throughput(report.get()));
      csv += row;
    }
  }
  if (out.empty()) {
    std::fputs(csv.c_str(), stdout);
    return kExitOk;
  }
  std::FILE* f = std::fopen(out.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "error: cannot write %s\n", out.c_str());
    return kExitConfigError;
  }
  std::fwrite(csv.data(), 1, csv.size(), f);
  std::fclose(f);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coded-computing scheduling simulator (Lagrange coding + online load allocation)"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run one scenario and emit results");
  std::string sim_config, sim_out, sim_format = "text", sim_est_log;
  Overrides sim_ov;
  simulate->add_option("--config", sim_config, "Scenario config file")->required();
  add_override_flags(simulate, sim_ov);
  simulate->add_option("--out", sim_out, "Output path (default: stdout)");
  simulate->add_option("--format", sim_format, "Output format: csv (per-round log) or text (summary)")
      ->check(CLI::IsMember({"csv", "text"}));
  simulate->add_option("--est-log", sim_est_log,
                       "Also write per-round estimator snapshots to this CSV path");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run (config, seed) cells and emit a summary CSV");
  std::vector<std::string> sweep_configs;
  std::string sweep_out, sweep_seeds = "1..1";
  Overrides sweep_ov;
  sweep->add_option("configs", sweep_configs, "Scenario config files")->required();
  sweep->add_option("--seeds", sweep_seeds, "Seed range, e.g. 1..8");
  add_override_flags(sweep, sweep_ov);
  sweep->add_option("--out", sweep_out, "Output CSV path (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the built-in oracle suites");

  // encode-demo
  auto* demo = app.add_subcommand("encode-demo", "Encode a dataset with the config's coding scheme");
  std::string demo_config, demo_data, demo_out;
  demo->add_option("--config", demo_config, "Scenario config file")->required();
  demo->add_option("--data", demo_data,
                   "Decimal-text dataset, one row per chunk (random data when omitted)");
  demo->add_option("--out", demo_out, "Output shards file")->required();

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) {
    return cmd_simulate(sim_config, sim_ov, sim_out, sim_format, sim_est_log);
  }
  if (sweep->parsed()) {
    unsigned long long lo = 0, hi = 0;
    if (std::sscanf(sweep_seeds.c_str(), "%llu..%llu", &lo, &hi) != 2 || hi < lo) {
      std::fprintf(stderr, "error: --seeds expects a range like 1..8\n");
      return kExitConfigError;
    }
    return cmd_sweep(sweep_configs, sweep_ov, lo, hi, sweep_out);
  }
  if (verify->parsed()) {
    int failures = lea_verify(1);
    if (failures == 0) {
      std::printf("all checks passed\n");
      return kExitOk;
    }
    std::printf("%d check(s) failed\n", failures);
    return kExitVerifyFailure;
  }
  if (demo->parsed()) {
    ConfigPtr cfg = load_config(demo_config, Overrides{});
    if (!cfg) return kExitConfigError;
    if (lea_encode_demo(cfg.get(), demo_data.empty() ? nullptr : demo_data.c_str(),
                        demo_out.c_str()) != LEA_OK) {
      std::fprintf(stderr, "error: %s\n", lea_last_error());
      return kExitConfigError;
    }
    return kExitOk;
  }
  return kExitConfigError;
}
