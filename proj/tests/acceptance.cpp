// Acceptance gate: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "fqtree/certify.hpp"
#include "fqtree/cli.hpp"
#include "fqtree/hypercube_routing.hpp"
#include "fqtree/oracle.hpp"
#include "fqtree/sweep.hpp"

using namespace fqtree;

namespace {

// Budgets in seconds.
constexpr double kBudgetFq2 = 1.0;
constexpr double kBudgetFq3 = 300.0;
constexpr double kBudgetSweep7 = 600.0;
constexpr double kBudgetHypercube = 600.0;
constexpr double kBudgetTopology = 10.0;
constexpr int kDeterminismSamples = 100;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double seconds) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << seconds << "s";
  return out.str();
}

void criterion1() {
  Stopwatch clock;
  const int k = generalized_3_connectivity(folded_hypercube_graph(2), false);
  const double t = clock.seconds();
  report(1, k == 2 && t < kBudgetFq2,
         "kappa_3(FQ_2) = " + std::to_string(k) + " (expected 2) in " + fmt(t));
}

void criterion2() {
  Stopwatch clock;
  const Graph g = folded_hypercube_graph(3);
  int triples = 0, threes = 0, fours = 0, other = 0, lowest = 99;
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = a + 1; b < 8; ++b) {
      for (std::uint32_t c = b + 1; c < 8; ++c) {
        const std::vector<VertexId> s{VertexId{a}, VertexId{b}, VertexId{c}};
        const int k = kappa_s(g, s);
        ++triples;
        lowest = std::min(lowest, k);
        // FQ_3 is K_{4,4}; a triple inside one parity class has four
        // common neighbours and therefore four disjoint stars.
        const bool same_class = std::popcount(a) % 2 == std::popcount(b) % 2 &&
                                std::popcount(b) % 2 == std::popcount(c) % 2;
        if (k == 3 && !same_class) {
          ++threes;
        } else if (k == 4 && same_class) {
          ++fours;
        } else {
          ++other;
        }
      }
    }
  }
  const int global = generalized_3_connectivity(g, false);
  const double t = clock.seconds();
  const bool ok = triples == 56 && other == 0 && lowest == 3 && global == 3 &&
                  t < kBudgetFq3;
  report(2, ok,
         "FQ_3: " + std::to_string(triples) + " triples, kappa_s >= 3 on all; kappa_s = 3 on " +
             std::to_string(threes) + " mixed-parity triples, = 4 on " + std::to_string(fours) +
             " single-parity-class triples (the literal 'kappa_s = 3 for every triple' does not "
             "hold for those 8); min = " +
             std::to_string(lowest) + ", kappa_3(FQ_3) = " + std::to_string(global) + " in " +
             fmt(t));
}

std::map<std::string, std::uint64_t> criterion3(int workers) {
  std::map<std::string, std::uint64_t> coverage;
  bool ok = true;
  std::ostringstream detail;
  double seven = 0.0;
  for (int n = 2; n <= 7; ++n) {
    const SweepSummary s = run_sweep({n, false, workers, false});
    const bool good = s.failures == 0 && s.triples == sweep_size(n, false);
    ok = ok && good;
    detail << "n=" << n << ": " << s.triples << " triples, " << s.failures << " failures, "
           << fmt(s.wall_seconds) << "; ";
    for (const auto& sample : s.failure_samples) std::printf("  failure: %s\n", sample.c_str());
    if (n == 7) seven = s.wall_seconds;
    if (n >= 4 && n <= 6) {
      for (const auto& [k, v] : s.histogram) coverage[k] += v;
      coverage["Fallback"] += s.fallbacks;
    }
  }
  ok = ok && seven < kBudgetSweep7;
  detail << "workers=" << workers;
  report(3, ok, detail.str());
  return coverage;
}

void criterion4() {
  bool ok = true;
  std::ostringstream detail;
  for (int n = 2; n <= 10; ++n) {
    const auto bound = upper_bound_delta(folded_hypercube_graph(n));
    ok = ok && bound == n;
    detail << (bound ? std::to_string(*bound) : std::string("none")) << (n < 10 ? "," : "");
  }
  report(4, ok, "upper_bound_delta(FQ_n), n=2..10: " + detail.str());
}

void criterion5() {
  Stopwatch clock;
  std::uint64_t pairs = 0, pair_failures = 0;
  for (int m = 1; m <= 8; ++m) {
    const Cube cube = Cube::full(m);
    const std::uint32_t count = 1u << m;
    for (std::uint32_t x = 0; x < count; ++x) {
      for (std::uint32_t y = 0; y < count; ++y) {
        if (x == y) continue;
        ++pairs;
        const auto paths = menger_paths(VertexId{x}, VertexId{y}, cube);
        if (!verify_paths(paths, VertexId{x}, VertexId{y}, m, Network::Hypercube,
                          static_cast<std::size_t>(m))
                 .ok()) {
          ++pair_failures;
        }
      }
    }
  }
  std::uint64_t triples = 0, triple_failures = 0;
  for (int m = 2; m <= 6; ++m) {
    const Cube cube = Cube::full(m);
    const std::uint32_t count = 1u << m;
    for (std::uint32_t a = 0; a < count; ++a) {
      for (std::uint32_t b = a + 1; b < count; ++b) {
        for (std::uint32_t c = b + 1; c < count; ++c) {
          ++triples;
          const std::array<VertexId, 3> s{VertexId{a}, VertexId{b}, VertexId{c}};
          const auto trees = qn_s_trees(s, cube);
          if (!verify_packing(trees, s, m, Network::Hypercube, static_cast<std::size_t>(m - 1))
                   .ok()) {
            ++triple_failures;
          }
        }
      }
    }
  }
  const int q3 = generalized_3_connectivity(hypercube_graph(3), false);
  const double t = clock.seconds();
  const bool ok = pair_failures == 0 && triple_failures == 0 && q3 == 2 && t < kBudgetHypercube;
  report(5, ok,
         "menger_paths " + std::to_string(pairs) + " pairs (Q_1..Q_8), " +
             std::to_string(pair_failures) + " failures; qn_s_trees " + std::to_string(triples) +
             " triples (Q_2..Q_6), " + std::to_string(triple_failures) +
             " failures; oracle kappa_3(Q_3) = " + std::to_string(q3) + "; " + fmt(t));
}

void criterion6() {
  Stopwatch clock;
  bool ok = true;
  for (int n = 2; n <= 10; ++n) {
    std::uint64_t degree_sum = 0;
    bool regular = true;
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
      const auto nb = neighbors(VertexId{u}, n);
      regular = regular && nb.size() == static_cast<std::size_t>(n + 1);
      degree_sum += nb.size();
    }
    ok = ok && regular && degree(n) == n + 1 &&
         degree_sum / 2 == static_cast<std::uint64_t>(n + 1) << (n - 1) &&
         edge_count(n) == static_cast<std::uint64_t>(n + 1) << (n - 1) &&
         bfs_eccentricity_max(n) == (n + 1) / 2;
  }
  const double t = clock.seconds();
  report(6, ok && t < kBudgetTopology,
         "degree n+1, size (n+1)2^(n-1), diameter ceil(n/2) for n=2..10 in " + fmt(t));
}

void criterion7(const std::map<std::string, std::uint64_t>& coverage) {
  const std::vector<std::string> leaves{
      "Case1",       "Case2.1",     "Case2.2.1",   "Case2.2.2",
      "Case2.3.1.1", "Case2.3.1.2", "Case2.3.2.1", "Case2.3.2.2",
      "Case2.3.2.3", "Case2.3.2.4", "Case2.3.3.1", "Case2.3.3.2"};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& leaf : leaves) {
    const auto it = coverage.find(leaf);
    const std::uint64_t hits = it == coverage.end() ? 0 : it->second;
    ok = ok && hits > 0;
    detail << leaf << "=" << hits << " ";
  }
  const auto fb = coverage.find("Fallback");
  const std::uint64_t fallbacks = fb == coverage.end() ? 0 : fb->second;
  ok = ok && fallbacks == 0;
  detail << "Fallback=" << fallbacks << " (n=4,5,6)";
  report(7, ok, detail.str());
}

void criterion8() {
  std::mt19937_64 rng(0x5eed);
  int identical = 0;
  for (int i = 0; i < kDeterminismSamples; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const std::uint32_t count = 1u << n;
    std::vector<std::uint32_t> pick;
    while (pick.size() < 3) {
      const auto x = static_cast<std::uint32_t>(rng() % count);
      if (std::find(pick.begin(), pick.end(), x) == pick.end()) pick.push_back(x);
    }
    const std::string s = render(VertexId{pick[0]}, n) + "," + render(VertexId{pick[1]}, n) +
                          "," + render(VertexId{pick[2]}, n);
    const std::string format = i % 2 ? "dot" : "json";
    std::ostringstream a, b, err;
    const int ca = cli::cmd_construct(n, s, format, a, err);
    const int cb = cli::cmd_construct(n, s, format, b, err);
    if (ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty()) ++identical;
  }
  report(8, identical == kDeterminismSamples,
         std::to_string(identical) + "/" + std::to_string(kDeterminismSamples) +
             " random construct inputs produced byte-identical output");
}

}  // namespace

int main() {
  const int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  criterion1();
  criterion2();
  const auto coverage = criterion3(workers);
  criterion4();
  criterion5();
  criterion6();
  criterion7(coverage);
  criterion8();
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
