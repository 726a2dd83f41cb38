#include "fqtree/sweep.hpp"

#include <atomic>
#include <chrono>
#include <json.hpp>
#include <mutex>
#include <set>
#include <thread>

#include "fqtree/certify.hpp"
#include "fqtree/folded_construction.hpp"

namespace fqtree {
namespace {

constexpr std::size_t kMaxSamples = 8;

struct Tally {
  std::uint64_t triples = 0;
  std::uint64_t failures = 0;
  std::uint64_t fallbacks = 0;
  std::map<std::string, std::uint64_t> histogram;
  std::vector<std::string> samples;

  void merge(const Tally& other) {
    triples += other.triples;
    failures += other.failures;
    fallbacks += other.fallbacks;
    for (const auto& [k, v] : other.histogram) histogram[k] += v;
    for (const auto& s : other.samples) {
      if (samples.size() < kMaxSamples) samples.push_back(s);
    }
  }
};

std::string describe(const TerminalTriple& s) {
  const int n = s.order();
  return render(s[0], n) + "," + render(s[1], n) + "," + render(s[2], n);
}

void record(Tally& tally, const TerminalTriple& s) {
  ++tally.triples;
  try {
    const TreeBundle bundle = s_trees(s);
    const CertReport report = verify_bundle(bundle);
    std::set<std::string> leaves;
    for (const TraceStep& step : bundle.trace.steps) {
      if (step.branch == Branch::Resplit) continue;
      leaves.insert(to_string(step.branch));
      if (step.branch == Branch::Fallback) ++tally.fallbacks;
    }
    for (const auto& leaf : leaves) ++tally.histogram[leaf];
    if (!report.ok()) {
      ++tally.failures;
      if (tally.samples.size() < kMaxSamples) {
        tally.samples.push_back(describe(s) + ": " +
                                std::string(to_string(report.violations[0].kind)));
      }
    }
  } catch (const std::exception& e) {
    ++tally.failures;
    if (tally.samples.size() < kMaxSamples) {
      tally.samples.push_back(describe(s) + ": " + e.what());
    }
  }
}

}  // namespace

std::uint64_t sweep_size(int n, bool orbit_reduce) {
  const std::uint64_t v = vertex_count(n);
  if (orbit_reduce) return (v - 1) * (v - 2) / 2;
  return v * (v - 1) * (v - 2) / 6;
}

SweepSummary run_sweep(const SweepOptions& opts) {
  const int n = opts.n;
  check_order(n);
  if (n > kSweepOrderCap && !opts.allow_large) {
    throw Error(ErrorKind::Resource, "sweep order " + std::to_string(n) +
                                         " exceeds the cap of " +
                                         std::to_string(kSweepOrderCap));
  }
  if (opts.workers < 1) throw Error(ErrorKind::Resource, "workers must be positive");
  const auto start = std::chrono::steady_clock::now();
  const std::uint32_t count = static_cast<std::uint32_t>(vertex_count(n));
  const std::uint32_t first_limit = opts.orbit_reduce ? 1 : count;

  // Work items are (a, b) prefixes; each covers every c > b.
  std::atomic<std::uint64_t> next{0};
  const std::uint64_t items = std::uint64_t{first_limit} * count;
  Tally total;
  std::mutex mu;
  auto worker = [&] {
    Tally local;
    for (std::uint64_t item = next++; item < items; item = next++) {
      const auto a = static_cast<std::uint32_t>(item / count);
      const auto b = static_cast<std::uint32_t>(item % count);
      if (b <= a) continue;
      for (std::uint32_t c = b + 1; c < count; ++c) {
        record(local, TerminalTriple(VertexId{a}, VertexId{b}, VertexId{c}, n));
      }
    }
    std::lock_guard lock(mu);
    total.merge(local);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < opts.workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepSummary out;
  out.n = n;
  out.orbit_reduce = opts.orbit_reduce;
  out.triples = total.triples;
  out.failures = total.failures;
  out.fallbacks = total.fallbacks;
  out.histogram = std::move(total.histogram);
  out.failure_samples = std::move(total.samples);
  out.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return out;
}

std::string to_json(const SweepSummary& summary) {
  nlohmann::json j;
  j["n"] = summary.n;
  j["orbit_reduce"] = summary.orbit_reduce;
  j["triples"] = summary.triples;
  j["failures"] = summary.failures;
  j["fallbacks"] = summary.fallbacks;
  j["histogram"] = summary.histogram;
  j["failure_samples"] = summary.failure_samples;
  j["wall_seconds"] = summary.wall_seconds;
  return j.dump(2) + "\n";
}

}  // namespace fqtree
