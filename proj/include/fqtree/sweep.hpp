#pragma once

// Exhaustive construction-and-certification runs over all terminal triples.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fqtree {

inline constexpr int kSweepOrderCap = 8;

struct SweepOptions {
  int n = 2;
  bool orbit_reduce = false;  // fix the first terminal at 0...0
  int workers = 1;
  bool allow_large = false;   // lift kSweepOrderCap
};

struct SweepSummary {
  int n = 0;
  bool orbit_reduce = false;
  std::uint64_t triples = 0;
  std::uint64_t failures = 0;
  std::uint64_t fallbacks = 0;
  /// Branch label -> number of triples whose trace contains it.
  std::map<std::string, std::uint64_t> histogram;
  /// First few failing triples with their error messages.
  std::vector<std::string> failure_samples;
  double wall_seconds = 0.0;
};

/// Number of triples a sweep visits.
std::uint64_t sweep_size(int n, bool orbit_reduce);

/// Throws Error(Resource) when n exceeds the cap without override.
SweepSummary run_sweep(const SweepOptions& opts);

std::string to_json(const SweepSummary& summary);

}  // namespace fqtree
