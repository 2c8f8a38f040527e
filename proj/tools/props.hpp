#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kf::props {

struct Failure {
  size_t trial = 0;
  uint64_t seed = 0;
  std::string what;
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  size_t trials = 0;
  size_t passed = 0;
  std::vector<Failure> failures;
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

constexpr uint64_t kDefaultSeed = 20240517;
constexpr size_t kDefaultTrials = 100;

// smith, rowreduce, inertia, doubling, canonical, synth, lagrange, junitary
const std::vector<std::string>& suite_names();
// KF_SEED when set and numeric, else kDefaultSeed.
uint64_t default_seed();
// PreconditionViolated for an unknown suite.
SuiteReport run_suite(const std::string& name, uint64_t seed, size_t trials = kDefaultTrials);

}  // namespace kf::props
