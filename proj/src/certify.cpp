#include "fqtree/certify.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace fqtree {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotAnEdge: return "NotAnEdge";
    case ViolationKind::Cyclic: return "Cyclic";
    case ViolationKind::Disconnected: return "Disconnected";
    case ViolationKind::MissingTerminal: return "MissingTerminal";
    case ViolationKind::SharedInternalVertex: return "SharedInternalVertex";
    case ViolationKind::SharedEdge: return "SharedEdge";
    case ViolationKind::WrongCount: return "WrongCount";
  }
  return "Unknown";
}

bool CertReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

namespace {

bool valid_edge(const Edge& e, int n, Network net) {
  if (n < 1 || n > kMaxOrder) return false;
  if ((e.u.value >> n) != 0 || (e.v.value >> n) != 0) return false;
  return adjacent(e.u, e.v, n, net);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_tree(const Tree& t, std::span<const VertexId> terminals, int n,
                Network net, std::size_t index, CertReport& report) {
  auto add = [&](ViolationKind kind, std::vector<VertexId> vs,
                 std::vector<Edge> es) {
    report.violations.push_back({kind, {index}, std::move(vs), std::move(es)});
  };
  std::vector<VertexId> verts;
  for (const Edge& e : t.edges) {
    if (!valid_edge(e, n, net)) add(ViolationKind::NotAnEdge, {}, {e});
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::vector<VertexId> missing;
  for (VertexId s : terminals) {
    if (!std::binary_search(verts.begin(), verts.end(), s)) missing.push_back(s);
  }
  // A single terminal with no edges is a trivial tree.
  const bool trivial = t.edges.empty() && terminals.size() == 1;
  if (!missing.empty() && !trivial) {
    add(ViolationKind::MissingTerminal, std::move(missing), {});
  }
  if (verts.empty()) return;

  auto idx = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  DisjointSets sets(verts.size());
  std::vector<Edge> closing;
  for (const Edge& e : t.edges) {
    if (!sets.unite(idx(e.u), idx(e.v))) closing.push_back(e);
  }
  if (!closing.empty()) add(ViolationKind::Cyclic, {}, std::move(closing));
  std::vector<VertexId> roots;
  for (VertexId v : verts) {
    if (sets.find(idx(v)) != sets.find(0)) roots.push_back(v);
  }
  if (!roots.empty()) {
    roots.insert(roots.begin(), verts.front());
    add(ViolationKind::Disconnected, std::move(roots), {});
  }
}

}  // namespace

CertReport verify_tree(const Tree& t, int n, Network net) {
  CertReport report;
  check_tree(t, t.terminals, n, net, 0, report);
  return report;
}

CertReport verify_packing(std::span<const Tree> trees,
                          std::span<const VertexId> s, int n, Network net,
                          std::size_t expected_count) {
  CertReport report;
  if (trees.size() != expected_count) {
    report.violations.push_back(
        {ViolationKind::WrongCount, {}, {}, {}});
  }
  std::vector<VertexId> terms(s.begin(), s.end());
  std::sort(terms.begin(), terms.end());
  std::unordered_map<std::uint32_t, std::size_t> vertex_owner;
  std::unordered_map<std::uint64_t, std::size_t> edge_owner;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    check_tree(trees[i], terms, n, net, i, report);
    for (VertexId v : trees[i].vertices()) {
      if (std::binary_search(terms.begin(), terms.end(), v)) continue;
      auto [it, fresh] = vertex_owner.emplace(v.value, i);
      if (!fresh && it->second != i) {
        report.violations.push_back(
            {ViolationKind::SharedInternalVertex, {it->second, i}, {v}, {}});
      }
    }
    for (const Edge& raw : trees[i].edges) {
      const Edge e = make_edge(raw.u, raw.v);
      const std::uint64_t key =
          (static_cast<std::uint64_t>(e.u.value) << 32) | e.v.value;
      auto [it, fresh] = edge_owner.emplace(key, i);
      if (!fresh && it->second != i) {
        report.violations.push_back(
            {ViolationKind::SharedEdge, {it->second, i}, {}, {e}});
      }
    }
  }
  return report;
}

CertReport verify_bundle(const TreeBundle& b) {
  return verify_packing(b.trees, {b.s.begin(), b.s.end()}, b.n, Network::Folded,
                        static_cast<std::size_t>(b.n));
}

CertReport verify_paths(std::span<const Path> paths, VertexId x, VertexId y,
                        int n, Network net, std::size_t expected_count) {
  CertReport report;
  if (paths.size() != expected_count) {
    report.violations.push_back({ViolationKind::WrongCount, {}, {}, {}});
  }
  std::unordered_map<std::uint32_t, std::size_t> owner;
  std::unordered_map<std::uint64_t, std::size_t> edge_owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    if (p.size() < 2 || p.front() != x || p.back() != y) {
      report.violations.push_back(
          {ViolationKind::MissingTerminal, {i}, {x, y}, {}});
      continue;
    }
    std::vector<VertexId> seen(p.begin(), p.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      report.violations.push_back({ViolationKind::Cyclic, {i}, {}, {}});
    }
    for (std::size_t j = 1; j < p.size(); ++j) {
      const Edge e = make_edge(p[j - 1], p[j]);
      if (!valid_edge(e, n, net)) {
        report.violations.push_back({ViolationKind::NotAnEdge, {i}, {}, {e}});
      }
      const std::uint64_t key =
          (static_cast<std::uint64_t>(e.u.value) << 32) | e.v.value;
      auto [it, fresh] = edge_owner.emplace(key, i);
      if (!fresh && it->second != i) {
        report.violations.push_back(
            {ViolationKind::SharedEdge, {it->second, i}, {}, {e}});
      }
    }
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      auto [it, fresh] = owner.emplace(p[j].value, i);
      if (!fresh && it->second != i) {
        report.violations.push_back(
            {ViolationKind::SharedInternalVertex, {it->second, i}, {p[j]}, {}});
      }
    }
  }
  return report;
}

}  // namespace fqtree
