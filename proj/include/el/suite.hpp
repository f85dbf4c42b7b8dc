#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "el/groebner.hpp"

namespace el {

inline constexpr const char* kToolVersion = "el 0.1.0";

struct RunConfig {
  std::string field = "fp:auto";  // Q | fp:<p> | fp:auto (resolved per master seed)
  std::uint64_t master_seed = 1;
  int seeds = 5;     // master seeds per randomized check: master_seed, master_seed+1, ...
  int required = 4;  // seeds that must pass
  int workers = 1;
  std::string suite = "core";  // core | stretch
  Budget budget;
};

struct CheckRecord {
  std::string id;
  int criterion = 0;
  std::string anchor;    // the claim being checked
  std::string expected;
  std::string computed;  // from the first passing seed, else the first seed
  std::string status;    // pass | fail | skipped
  std::string reason;    // set for fail and skipped
  bool budget_exhausted = false;
  double seconds = 0;
  std::vector<std::string> fields;  // field used per seed
  std::vector<std::uint64_t> seeds;
  int passed_seeds = 0;
};

struct SuiteReport {
  std::string suite;
  std::string version = kToolVersion;
  std::vector<CheckRecord> checks;  // sorted by id
  int passed = 0, failed = 0, skipped = 0;
};

/// Check ids of a suite, in order.
std::vector<std::string> suite_check_ids(const std::string& suite);

/// Runs every check of cfg.suite; independent checks run on up to cfg.workers threads.
SuiteReport run_suite(const RunConfig& cfg);

/// Runs a single check by id.
CheckRecord run_check(const std::string& id, const RunConfig& cfg);

}  // namespace el
