#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fubinilab/json_io.hpp"

namespace fubinilab {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

struct SuiteConfig {
  int field = 2;
  std::size_t max_size = 2;
  Axioms axioms = Axioms::limit;
  std::size_t carrier = 64;
  std::size_t budget = 8;
  std::vector<std::string> suites{"all"};
  unsigned jobs = 1;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::size_t oracle_samples = 100;

  /// Throws InvalidConfig.
  void validate() const;
  /// Suite names with "all" expanded, in the fixed order.
  std::vector<std::string> selected() const;
  Bounds bounds() const { return Bounds{carrier, kMaxMaterializedPoints}; }
};

/// The fixed set of suite names.
const std::vector<std::string>& suite_names();

/// FUBINILAB_SEED when set and numeric, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

struct InstanceResult {
  std::string suite;
  std::string instance;
  bool ok = false;
  Json detail;
};

struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<InstanceResult> instances;
  std::map<std::string, Tally> tallies;

  bool ok() const;
  Json summary() const;
  /// One JSON object per instance and the summary last, one per line.
  std::string jsonl() const;
};

/// Validates the config before any work, then runs every selected suite.
/// Instances run on `jobs` threads; the report does not depend on `jobs`.
SuiteReport run_suite(const SuiteConfig& config);

/// Carriers, reflexivity verdicts, both composite tables and the first
/// differing triple, if any.
std::string explain_instance(const ConvSpace& x, const ConvSpace& y, const SuiteConfig& config);

}  // namespace fubinilab
