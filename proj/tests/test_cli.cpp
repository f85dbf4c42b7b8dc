// The el command line: exit codes, report fields, determinism.

#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "el/cli.hpp"

using namespace el;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run el_run(std::vector<std::string> args) {
  args.insert(args.begin(), "el");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("entry-locus on the scroll") {
  auto r = el_run({"entry-locus", "--variety", "scroll12", "--seed", "7", "--field", "fp:auto"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["degree"] == 2);
  CHECK(j["components"] == 1);
  CHECK(j["type_irreducibility"] == "I");
  CHECK(j["type_ab"] == "A");
  CHECK(j["field"].get<std::string>().rfind("Fp:", 0) == 0);
}

TEST_CASE("segre on elliptic4") {
  auto r = el_run({"segre", "--curve", "elliptic4", "--seed", "3"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 4);
}

TEST_CASE("exit codes") {
  CHECK(el_run({}).code == exit_usage);
  CHECK(el_run({"frobnicate"}).code == exit_usage);
  CHECK(el_run({"entry-locus"}).code == exit_usage);
  CHECK(el_run({"entry-locus", "--variety", "no_such_key"}).code == exit_usage);
  CHECK(el_run({"entry-locus", "--variety", "scroll12", "--field", "fp:10"}).code == exit_usage);
  CHECK(el_run({"verify", "--seeds", "2", "--required", "3"}).code == exit_usage);
  CHECK(el_run({"entry-locus", "--variety", "delpezzo4", "--max-pairs", "3"}).code == exit_budget);
  CHECK(el_run({"catalog"}).code == exit_pass);
}

TEST_CASE("reports are byte-identical without timings") {
  auto a = el_run({"verify", "--no-timings", "--workers", "1"});
  auto b = el_run({"verify", "--no-timings", "--workers", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["summary"]["failed"] == 0);
  for (const auto& c : j["checks"]) {
    CHECK(!c["anchor"].get<std::string>().empty());
    CHECK(!c.contains("seconds"));
  }
  auto e1 = el_run({"entry-locus", "--variety", "delpezzo4", "--seed", "5", "--no-timings"});
  auto e2 = el_run({"entry-locus", "--variety", "delpezzo4", "--seed", "5", "--no-timings"});
  CHECK(e1.out == e2.out);
}
