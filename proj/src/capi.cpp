#include "lea/lea.h"

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "lea/allocation.hpp"
#include "lea/coding.hpp"
#include "lea/config.hpp"
#include "lea/sim.hpp"
#include "lea/verify.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

int status_from_exception() {
  try {
    throw;
  } catch (const lea::ConfigError& e) {
    set_error(e.what());
    return LEA_ERR_CONFIG;
  } catch (const lea::InfeasibleError& e) {
    set_error(e.what());
    return LEA_ERR_INFEASIBLE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return LEA_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return LEA_ERR_INTERNAL;
  }
}

int write_document(const std::string& text, const char* path) {
  if (path == nullptr) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return LEA_OK;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    set_error(std::string("cannot write file: ") + path);
    return LEA_ERR_IO;
  }
  out << text;
  return out ? LEA_OK : LEA_ERR_IO;
}

}  // namespace

struct lea_config {
  lea::ScenarioConfig cfg;
  std::string text_cache;
};

struct lea_report {
  lea::SummaryReport report;
};

extern "C" {

const char* lea_last_error(void) { return g_last_error.c_str(); }

lea_config* lea_config_load(const char* path) {
  if (path == nullptr) {
    set_error("null path");
    return nullptr;
  }
  try {
    return new lea_config{lea::parse_config(path), {}};
  } catch (...) {
    status_from_exception();
    return nullptr;
  }
}

lea_config* lea_config_parse(const char* text) {
  if (text == nullptr) {
    set_error("null text");
    return nullptr;
  }
  try {
    return new lea_config{lea::parse_config_text(text), {}};
  } catch (...) {
    status_from_exception();
    return nullptr;
  }
}

int lea_config_set(lea_config* cfg, const char* key, const char* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr) {
    set_error("null argument");
    return LEA_ERR_INVALID;
  }
  try {
    lea::ScenarioConfig next = cfg->cfg;
    lea::apply_config_key(next, key, value);
    lea::validate_config(next);
    cfg->cfg = std::move(next);
    return LEA_OK;
  } catch (...) {
    return status_from_exception();
  }
}

void lea_config_free(lea_config* cfg) { delete cfg; }

int lea_config_warning_count(const lea_config* cfg) {
  return cfg ? static_cast<int>(cfg->cfg.warnings.size()) : 0;
}

const char* lea_config_warning(const lea_config* cfg, int index) {
  if (cfg == nullptr || index < 0 || index >= static_cast<int>(cfg->cfg.warnings.size())) {
    return nullptr;
  }
  return cfg->cfg.warnings[index].c_str();
}

const char* lea_config_text(lea_config* cfg) {
  if (cfg == nullptr) return nullptr;
  cfg->text_cache = lea::canonical_config_text(cfg->cfg);
  return cfg->text_cache.c_str();
}

lea_report* lea_simulate(const lea_config* cfg) {
  if (cfg == nullptr) {
    set_error("null config");
    return nullptr;
  }
  try {
    return new lea_report{lea::run_simulation(cfg->cfg)};
  } catch (...) {
    status_from_exception();
    return nullptr;
  }
}

void lea_report_free(lea_report* report) { delete report; }

double lea_report_throughput(const lea_report* report) {
  return report ? report->report.throughput : -1.0;
}

long long lea_report_rounds(const lea_report* report) {
  return report ? report->report.rounds : -1;
}

long long lea_report_successes(const lea_report* report) {
  return report ? report->report.successes : -1;
}

const char* lea_report_strategy(const lea_report* report) {
  if (report == nullptr) return "";
  switch (report->report.config.strategy) {
    case lea::Strategy::lea:
      return "lea";
    case lea::Strategy::static_:
      return "static";
    default:
      return "genie";
  }
}

int lea_report_write_rounds_csv(const lea_report* report, const char* path) {
  if (report == nullptr) {
    set_error("null report");
    return LEA_ERR_INVALID;
  }
  return write_document(lea::rounds_csv(report->report), path);
}

int lea_report_write_summary(const lea_report* report, const char* path) {
  if (report == nullptr) {
    set_error("null report");
    return LEA_ERR_INVALID;
  }
  return write_document(lea::summary_text(report->report), path);
}

int lea_report_write_estimates_csv(const lea_report* report, const char* path) {
  if (report == nullptr) {
    set_error("null report");
    return LEA_ERR_INVALID;
  }
  if (report->report.estimate_log.empty()) {
    set_error("estimate log empty; set log_estimates = true in the config");
    return LEA_ERR_INVALID;
  }
  return write_document(lea::estimates_csv(report->report), path);
}

int lea_verify(int verbose) {
  try {
    return lea::run_verification([verbose](const std::string& name, bool ok) {
      if (verbose) {
        std::printf("%s: %s\n", ok ? "PASS" : "FAIL", name.c_str());
      }
    });
  } catch (...) {
    status_from_exception();
    return -1;
  }
}

int lea_encode_demo(const lea_config* cfg, const char* data_path, const char* out_path) {
  if (cfg == nullptr || out_path == nullptr) {
    set_error("null argument");
    return LEA_ERR_INVALID;
  }
  try {
    const auto& c = cfg->cfg;
    auto scheme = lea::CodingScheme::make(c.n, c.r, c.k, c.deg_f, c.prime);
    lea::Dataset data;
    if (data_path != nullptr) {
      data = lea::read_dataset_text(data_path, scheme.p);
      if (data.k() != c.k) {
        set_error("dataset has " + std::to_string(data.k()) + " chunks, config expects " +
                  std::to_string(c.k));
        return LEA_ERR_CONFIG;
      }
    } else {
      lea::Rng rng = lea::derive_stream(c.seed, 0);
      data.chunks.assign(c.k, std::vector<lea::fe>(4));
      for (auto& chunk : data.chunks) {
        for (auto& v : chunk) v = rng.next_below(scheme.p);
      }
    }
    lea::write_shards_text(lea::encode(data, scheme), out_path);
    return LEA_OK;
  } catch (...) {
    return status_from_exception();
  }
}

}  // extern "C"
