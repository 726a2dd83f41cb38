#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <set>

#include "fqtree/certify.hpp"
#include "fqtree/folded_construction.hpp"
#include "fqtree/oracle.hpp"

using namespace fqtree;

namespace {

VertexId v(const char* s) { return parse_vertex(s, static_cast<int>(std::strlen(s))); }

std::vector<Edge> edges(std::vector<std::pair<const char*, const char*>> list) {
  std::vector<Edge> out;
  for (auto [a, b] : list) out.push_back(make_edge(v(a), v(b)));
  std::sort(out.begin(), out.end());
  return out;
}

bool has_step(const CaseTrace& t, Branch b) {
  return std::any_of(t.steps.begin(), t.steps.end(),
                     [&](const TraceStep& s) { return s.branch == b; });
}

// Orbits of 3-subsets of {0..7} under x -> perm(x) ^ c, computed without
// the library's automorphism code.
std::size_t brute_orbit_count() {
  std::set<std::array<int, 3>> seen;
  std::size_t orbits = 0;
  std::array<int, 3> p{0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto image = [&](int x, const std::array<int, 3>& q, int c) {
    int y = 0;
    for (int b = 0; b < 3; ++b) {
      if (x >> b & 1) y |= 1 << q[static_cast<std::size_t>(b)];
    }
    return y ^ c;
  };
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (int c = b + 1; c < 8; ++c) {
        if (seen.contains({a, b, c})) continue;
        ++orbits;
        for (const auto& q : perms) {
          for (int t = 0; t < 8; ++t) {
            std::array<int, 3> img{image(a, q, t), image(b, q, t), image(c, q, t)};
            std::sort(img.begin(), img.end());
            seen.insert(img);
          }
        }
      }
    }
  }
  return orbits;
}

std::vector<TerminalTriple> all_triples(int n) {
  std::vector<TerminalTriple> out;
  const std::uint32_t count = 1u << n;
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) {
      for (std::uint32_t c = b + 1; c < count; ++c) {
        out.emplace_back(VertexId{a}, VertexId{b}, VertexId{c}, n);
      }
    }
  }
  return out;
}

TreeBundle run_case2(int n, const char* x, const char* y,
                     std::vector<Tree> (*branch)(VertexId, VertexId, cases::Context&)) {
  CaseTrace trace{{}, Automorphism::identity(n)};
  cases::Context ctx{n, &trace, 0};
  std::vector<Tree> trees = branch(v(x), v(y), ctx);
  return {n, TerminalTriple(v(x), v(y), all_ones(n), n), std::move(trees), trace};
}

}  // namespace

TEST_CASE("base_fq2") {
  const TreeBundle a = base_fq2(TerminalTriple(v("00"), v("01"), v("10"), 2));
  REQUIRE(a.trees.size() == 2);
  CHECK(a.trees[0].edges == edges({{"00", "01"}, {"00", "10"}}));
  CHECK(a.trees[1].edges == edges({{"11", "00"}, {"11", "01"}, {"11", "10"}}));
  CHECK(verify_bundle(a).ok());

  const TreeBundle b = base_fq2(TerminalTriple(v("00"), v("01"), v("11"), 2));
  CHECK(b.trees[0].edges == edges({{"00", "01"}, {"00", "11"}}));
  CHECK(b.trees[1].edges == edges({{"10", "00"}, {"10", "01"}, {"10", "11"}}));
  CHECK(verify_bundle(b).ok());
  CHECK(b.trace.labels() == std::vector<std::string>{"BaseN2"});
  CHECK_THROWS_AS(base_fq2(TerminalTriple(v("000"), v("001"), v("011"), 3)), Error);
}

TEST_CASE("base_fq3") {
  const TreeBundle b = base_fq3(TerminalTriple(v("000"), v("010"), v("011"), 3));
  CHECK(b.trees.size() == 3);
  CHECK(verify_bundle(b).ok());
  for (const TerminalTriple& s : all_triples(3)) {
    const TreeBundle x = base_fq3(s);
    CHECK(verify_bundle(x).ok());
    const std::vector<VertexId> terms(s.begin(), s.end());
    CHECK(packing_feasible({folded_hypercube_graph(3), terms, 3}).has_value());
  }
  CHECK(fq3_orbit_count() == brute_orbit_count());
  CHECK(fq3_orbit_count() == 3);
  CHECK(fq3_orbit_count() <= 5);
}

TEST_CASE("choose_split") {
  const SplitChoice a = choose_split(TerminalTriple(v("0000"), v("0001"), v("0010"), 4));
  CHECK(a.dim == 1);
  CHECK(a.three_zero);
  const SplitChoice b = choose_split(TerminalTriple(v("0000"), v("0001"), v("1000"), 4));
  CHECK(b.dim == 2);
  CHECK(b.three_zero);
  const SplitChoice c = choose_split(TerminalTriple(v("000"), v("011"), v("101"), 3));
  CHECK(c.dim == 1);
  CHECK_FALSE(c.three_zero);
  CHECK(c.lone == v("101"));
}

TEST_CASE("s_trees examples") {
  const TreeBundle a = s_trees(TerminalTriple(v("0000"), v("0001"), v("0010"), 4));
  CHECK(a.trees.size() == 4);
  CHECK(verify_bundle(a).ok());
  CHECK(a.trace.labels() == std::vector<std::string>{"Case1"});
  const std::vector<VertexId> terms{v("0000"), v("0001"), v("0010")};
  CHECK(packing_feasible({folded_hypercube_graph(4), terms, 4}).has_value());

  const TreeBundle b = s_trees(TerminalTriple(v("0000"), v("0011"), v("0101"), 4));
  CHECK(verify_bundle(b).ok());
  CHECK(b.trace.labels() == std::vector<std::string>{"Case1"});
}

TEST_CASE("case dispatch") {
  CaseTrace trace{{}, Automorphism::identity(4)};
  cases::Context ctx{4, &trace, 0};
  cases::case2_dispatch(v("0111"), v("0000"), ctx);
  CHECK(trace.labels() == std::vector<std::string>{"Case2.1"});
  trace.steps.clear();
  cases::case2_dispatch(v("0010"), v("0111"), ctx);
  CHECK(trace.labels() == std::vector<std::string>{"Case2.2.1"});
  trace.steps.clear();
  cases::case2_dispatch(v("0000"), v("0110"), ctx);
  CHECK(trace.labels() == std::vector<std::string>{"Case2.2.2"});
  trace.steps.clear();
  cases::case2_dispatch(v("0001"), v("0110"), ctx);
  CHECK(trace.labels().front().starts_with("Case2.3"));
}

TEST_CASE("Subcase 2.1") {
  for (int n = 4; n <= 7; ++n) {
    const std::string x = "0" + std::string(static_cast<std::size_t>(n - 1), '1');
    const std::string y(static_cast<std::size_t>(n), '0');
    const TreeBundle b = run_case2(n, x.c_str(), y.c_str(), cases::case2_1);
    CHECK(b.trees.size() == static_cast<std::size_t>(n));
    CHECK(verify_bundle(b).ok());
    const VertexId z = all_ones(n);
    CHECK(b.trees[0].edges ==
          std::vector<Edge>{make_edge(v(y.c_str()), z), make_edge(v(x.c_str()), z)});
    for (std::size_t i = 1; i < b.trees.size(); ++i) {
      int ws = 0;
      for (VertexId u : b.trees[i].vertices()) {
        for (int d = 2; d <= n; ++d) ws += u == anti_unit_vertex(d, n);
      }
      CHECK(ws == 1);
    }
  }
  CHECK_THROWS_AS(run_case2(4, "0110", "0000", cases::case2_1), PreconditionFailure);
}

TEST_CASE("Subcase 2.2.1 with Y adjacent to X") {
  // Y = N_3(X); the branch relabels so the dimension-2 path is the edge XY.
  const TreeBundle b = run_case2(5, "01111", "01101", cases::case2_2_1);
  CHECK(verify_bundle(b).ok());
  bool direct = false;
  for (const Tree& t : b.trees) {
    const auto e = t.edges;
    direct = direct || (std::find(e.begin(), e.end(), make_edge(v("01111"), v("01101"))) !=
                            e.end() &&
                        std::find(e.begin(), e.end(), make_edge(v("01111"), v("11111"))) !=
                            e.end() &&
                        e.size() == 2);
  }
  CHECK(direct);
}

TEST_CASE("Subcase 2.2.2 leaves X through E_2..E_n") {
  const int n = 5;
  const TreeBundle b = run_case2(n, "00000", "00111", cases::case2_2_2);
  CHECK(verify_bundle(b).ok());
  std::set<VertexId> first;
  for (const Tree& t : b.trees) {
    for (const Edge& e : t.edges) {
      if (e.u == VertexId{0} && e.v != all_ones(n)) first.insert(e.v);
    }
  }
  std::set<VertexId> expected;
  for (int i = 1; i <= n; ++i) expected.insert(unit_vertex(i, n));
  CHECK(first == expected);
}

TEST_CASE("Subcase 2.3.2.3 paths") {
  for (int n = 4; n <= 7; ++n) {
    std::string x(static_cast<std::size_t>(n), '0'), y = x, mid = x;
    x[1] = '1';
    y[2] = '1';
    mid[1] = mid[2] = '1';
    CaseTrace trace{{}, Automorphism::identity(n)};
    cases::Context ctx{n, &trace, 0};
    const auto trees = cases::case2_3(v(x.c_str()), v(y.c_str()), ctx);
    CHECK(trace.labels() == std::vector<std::string>{"Case2.3.2.3"});
    const TreeBundle b{n, TerminalTriple(v(x.c_str()), v(y.c_str()), all_ones(n), n), trees,
                       trace};
    CHECK(verify_bundle(b).ok());
    // P_3 has exactly one internal vertex, 0110...0.
    const auto& t3 = trees[2].edges;
    CHECK(std::find(t3.begin(), t3.end(), make_edge(v(x.c_str()), v(mid.c_str()))) != t3.end());
    CHECK(std::find(t3.begin(), t3.end(), make_edge(v(mid.c_str()), v(y.c_str()))) != t3.end());
  }
}

TEST_CASE("Subcase 2.3.1 is unreachable at n = 4") {
  // Every vertex of Q_4^1[0] other than 0000 and 0111 has an out-neighbour
  // in W = {1011, 1101, 1110}.
  const int n = 4;
  for (std::uint32_t u = 1; u < 7; ++u) {
    const VertexId x{u};
    bool hit = false;
    for (int i = 2; i <= n; ++i) {
      hit = hit || flip(x, 1, n) == anti_unit_vertex(i, n) ||
            complement_neighbor(x, n) == anti_unit_vertex(i, n);
    }
    CHECK(hit);
  }
}

TEST_CASE("Subcase 2.3.1 at n = 5") {
  // Both 2.3.1 leaves occur.
  std::set<std::string> leaves;
  for (const TerminalTriple& s : all_triples(5)) {
    const TreeBundle b = s_trees(s);
    for (const auto& l : b.trace.labels()) {
      if (l.starts_with("Case2.3.1")) leaves.insert(l);
    }
  }
  CHECK(leaves == std::set<std::string>{"Case2.3.1.1", "Case2.3.1.2"});
}

TEST_CASE("re-split recursion") {
  // N_1(X) = W_2 and N_1(Y) = W_3: re-split along the last digit.
  const TreeBundle a = s_trees(TerminalTriple(v("00111"), v("01011"), v("11111"), 5));
  CHECK(verify_bundle(a).ok());
  CHECK(a.trace.labels() == std::vector<std::string>{"Case2.3.2.1", "Resplit(5)", "Case1"});

  // X = N_1(W_2), Y = E_2: both out-neighbours land on W_2.
  const TreeBundle b = s_trees(TerminalTriple(v("00111"), v("01000"), v("11111"), 5));
  CHECK(verify_bundle(b).ok());
  const auto labels = b.trace.labels();
  CHECK(std::find(labels.begin(), labels.end(), "Resplit(4)") != labels.end());
  CHECK(labels.back() == "Case1");
}

TEST_CASE("no fallback and determinism on full sweeps") {
  for (int n = 2; n <= 5; ++n) {
    for (const TerminalTriple& s : all_triples(n)) {
      const TreeBundle a = s_trees(s);
      CHECK(a.trees.size() == static_cast<std::size_t>(n));
      CHECK_FALSE(has_step(a.trace, Branch::Fallback));
      const TreeBundle b = s_trees(s);
      CHECK(a.trees == b.trees);
      CHECK(a.trace.steps == b.trace.steps);
    }
  }
}

TEST_CASE("pull-back onto the original coordinates") {
  // The lone terminal is not 1...1, so the recorded map is non-trivial.
  const TerminalTriple s(v("010110"), v("001011"), v("101100"), 6);
  const TreeBundle b = s_trees(s);
  CHECK(verify_bundle(b).ok());
  CHECK_FALSE(b.trace.normalization == Automorphism::identity(6));
  CHECK(b.trace.normalization(v("101100")) == all_ones(6));
  for (const Tree& t : b.trees) {
    CHECK(t.terminals == std::vector<VertexId>(s.begin(), s.end()));
  }
}

TEST_CASE("larger orders") {
  const TerminalTriple s(VertexId{12345}, VertexId{999}, VertexId{40000}, 16);
  const TreeBundle b = s_trees(s);
  CHECK(b.trees.size() == 16);
  CHECK(verify_bundle(b).ok());
}
