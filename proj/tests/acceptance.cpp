// Runs the core suite with the default configuration and prints one line per criterion.

#include <algorithm>
#include <cstdio>
#include <map>
#include <thread>

#include "el/suite.hpp"

int main() {
  el::RunConfig cfg;
  cfg.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto rep = el::run_suite(cfg);
  std::map<int, bool> ok;
  for (const auto& c : rep.checks) {
    auto it = ok.try_emplace(c.criterion, true).first;
    it->second = it->second && c.status == "pass";
    std::printf("  %-26s %-7s seeds %d/%zu  %.1fs  %s\n", c.id.c_str(), c.status.c_str(), c.passed_seeds,
                c.seeds.size(), c.seconds, c.computed.c_str());
    if (!c.reason.empty()) std::printf("    reason: %s\n", c.reason.c_str());
  }
  bool all = true;
  for (const auto& [criterion, pass] : ok) {
    std::printf("criterion %2d: %s\n", criterion, pass ? "PASS" : "FAIL");
    all = all && pass;
  }
  return all ? 0 : 1;
}
