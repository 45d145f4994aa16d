// The one-shot harness behind `verify all`: every module's property suite at
// configured sizes, driven by a single seeded generator. Failures carry the
// failing instance serialized for replay.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace signcount {

struct VerifyOptions {
  std::uint64_t seed = 1;
  bool quick = false;
  int threads = 1;
  std::string inject_fault;  // test-only: name of a check to sabotage
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  long long checks = 0;
  std::string failure;  // empty when passed; includes the failing instance
};

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

}  // namespace signcount
