#include "fqtree/topology.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace fqtree {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::InvalidVertex: return "invalid-vertex";
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::DegeneratePair: return "degenerate-pair";
    case ErrorKind::Membership: return "membership";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Conflict: return "conflict";
    case ErrorKind::OrderMismatch: return "order-mismatch";
    case ErrorKind::MalformedPermutation: return "malformed-permutation";
    case ErrorKind::InvalidTerminals: return "invalid-terminals";
    case ErrorKind::ConstructionDefect: return "construction-defect";
    case ErrorKind::TheoremViolation: return "theorem-violation";
    case ErrorKind::InvalidDocument: return "invalid-document";
  }
  return "unknown";
}

std::string to_string(EdgeKind kind) {
  if (kind.is_complement()) return "Complement";
  return "HypercubeDim(" + std::to_string(kind.dim()) + ")";
}

void check_order(int n) {
  if (n < 2 || n > kMaxOrder) {
    throw Error(ErrorKind::InvalidOrder,
                "order must lie in [2, " + std::to_string(kMaxOrder) +
                    "], got " + std::to_string(n));
  }
}

void check_dimension(int d, int n) {
  if (d < 1 || d > n) {
    throw Error(ErrorKind::Dimension, "dimension " + std::to_string(d) +
                                          " outside [1, " + std::to_string(n) +
                                          "]");
  }
}

void check_vertex(VertexId v, int n) {
  if (n < 1 || n > kMaxOrder || (v.value >> n) != 0) {
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(v.value) +
                    " is not valid for order " + std::to_string(n));
  }
}

TerminalTriple::TerminalTriple(VertexId a, VertexId b, VertexId c, int n)
    : v_{a, b, c}, n_(n) {
  check_order(n);
  for (VertexId v : v_) check_vertex(v, n);
  std::sort(std::begin(v_), std::end(v_));
  if (v_[0] == v_[1] || v_[1] == v_[2]) {
    throw Error(ErrorKind::InvalidTerminals, "terminals must be distinct");
  }
}

bool TerminalTriple::contains(VertexId v) const {
  return v == v_[0] || v == v_[1] || v == v_[2];
}

int degree(int n, Network net) {
  check_order(n);
  return net == Network::Folded ? n + 1 : n;
}

VertexId hypercube_neighbor(VertexId u, int d, int n) {
  check_dimension(d, n);
  check_vertex(u, n);
  return flip(u, d, n);
}

VertexId complement_neighbor(VertexId u, int n) {
  check_vertex(u, n);
  return u ^ all_ones(n);
}

std::vector<VertexId> neighbors(VertexId u, int n, Network net) {
  check_vertex(u, n);
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) out.push_back(flip(u, d, n));
  if (net == Network::Folded) out.push_back(u ^ all_ones(n));
  return out;
}

std::optional<EdgeKind> edge_kind(VertexId u, VertexId v, int n) {
  check_vertex(u, n);
  check_vertex(v, n);
  if (u == v) {
    throw Error(ErrorKind::SelfLoop,
                "edge_kind called with identical endpoints " + render(u, n));
  }
  const std::uint32_t x = (u ^ v).value;
  if (std::has_single_bit(x)) {
    return EdgeKind::hypercube(n - std::countr_zero(x));
  }
  if (x == all_ones(n).value) return EdgeKind::complement();
  return std::nullopt;
}

bool adjacent(VertexId u, VertexId v, int n, Network net) {
  if (u == v) return false;
  const auto kind = edge_kind(u, v, n);
  if (!kind) return false;
  return net == Network::Folded || !kind->is_complement();
}

VertexId unit_vertex(int i, int n) {
  check_dimension(i, n);
  return VertexId{digit_mask(i, n)};
}

VertexId anti_unit_vertex(int i, int n) {
  return unit_vertex(i, n) ^ all_ones(n);
}

bool side(VertexId u, const SubcubeSide& s, int n) {
  check_vertex(u, n);
  check_dimension(s.dim, n);
  if (digit(u, s.dim, n) != s.bit) return false;
  if (s.dim2) {
    check_dimension(*s.dim2, n);
    return digit(u, *s.dim2, n) == s.bit2;
  }
  return true;
}

std::uint64_t vertex_count(int n) {
  check_order(n);
  return std::uint64_t{1} << n;
}

std::uint64_t edge_count(int n, Network net) {
  return static_cast<std::uint64_t>(degree(n, net)) * (vertex_count(n) / 2);
}

int bfs_eccentricity_max(int n, int cap) {
  check_order(n);
  if (n > cap) {
    throw Error(ErrorKind::Resource, "BFS order " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cap));
  }
  std::vector<int> dist(vertex_count(n), -1);
  std::deque<std::uint32_t> queue{0};
  dist[0] = 0;
  int ecc = 0;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    for (VertexId w : neighbors(VertexId{u}, n)) {
      if (dist[w.value] >= 0) continue;
      dist[w.value] = dist[u] + 1;
      ecc = std::max(ecc, dist[w.value]);
      queue.push_back(w.value);
    }
  }
  return ecc;
}

std::string render(VertexId v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int d = 1; d <= n; ++d) {
    if (digit(v, d, n)) s[static_cast<std::size_t>(d - 1)] = '1';
  }
  return s;
}

VertexId parse_vertex(std::string_view text, int n) {
  if (n < 1 || n > kMaxOrder || text.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::InvalidVertex,
                "expected a " + std::to_string(n) + "-digit binary string, got '" +
                    std::string(text) + "'");
  }
  std::uint32_t value = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidVertex,
                  "not a binary string: '" + std::string(text) + "'");
    }
    value = (value << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return VertexId{value};
}

}  // namespace fqtree
