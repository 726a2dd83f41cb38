#pragma once

// Folded hypercube FQ_n and hypercube Q_n over bit-string vertices.
//
// A vertex of order n is an n-digit binary string x_1 x_2 ... x_n stored in
// the low n bits of an unsigned integer; digit 1 is the most significant of
// those bits, digit i is bit (n - i).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqtree/error.hpp"

namespace fqtree {

inline constexpr int kMaxOrder = 20;
inline constexpr int kBfsOrderCap = 14;

struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
  friend constexpr VertexId operator^(VertexId a, VertexId b) {
    return VertexId{a.value ^ b.value};
  }
};

struct Edge {
  VertexId u;
  VertexId v;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge with endpoints ordered so that equal edges compare equal.
constexpr Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

class EdgeKind {
 public:
  static constexpr EdgeKind hypercube(int dim) { return EdgeKind(dim); }
  static constexpr EdgeKind complement() { return EdgeKind(0); }

  constexpr bool is_complement() const { return dim_ == 0; }
  /// Dimension in [1, n]; zero for the complement kind.
  constexpr int dim() const { return dim_; }

  friend constexpr bool operator==(EdgeKind, EdgeKind) = default;

 private:
  constexpr explicit EdgeKind(int dim) : dim_(dim) {}
  int dim_;
};

std::string to_string(EdgeKind kind);

enum class Network { Folded, Hypercube };

/// Induced subcube Q_n^d[b], optionally split again as Q_n^{d,d2}[b,b2].
struct SubcubeSide {
  int dim = 1;
  int bit = 0;
  std::optional<int> dim2;
  int bit2 = 0;
};

void check_order(int n);
void check_dimension(int d, int n);
void check_vertex(VertexId v, int n);

constexpr std::uint32_t digit_mask(int d, int n) {
  return std::uint32_t{1} << (n - d);
}
constexpr VertexId all_ones(int n) {
  return VertexId{(std::uint32_t{1} << n) - 1};
}
constexpr int digit(VertexId v, int d, int n) {
  return static_cast<int>((v.value >> (n - d)) & 1U);
}
constexpr VertexId flip(VertexId v, int d, int n) {
  return VertexId{v.value ^ digit_mask(d, n)};
}

/// Three distinct terminals, stored in ascending order.
class TerminalTriple {
 public:
  TerminalTriple(VertexId a, VertexId b, VertexId c, int n);

  const VertexId& operator[](std::size_t i) const { return v_[i]; }
  const VertexId* begin() const { return v_; }
  const VertexId* end() const { return v_ + 3; }
  bool contains(VertexId v) const;
  int order() const { return n_; }

  friend bool operator==(const TerminalTriple&, const TerminalTriple&) = default;

 private:
  VertexId v_[3];
  int n_;
};

int degree(int n, Network net = Network::Folded);
VertexId hypercube_neighbor(VertexId u, int d, int n);
VertexId complement_neighbor(VertexId u, int n);
/// Neighbors in ascending dimension order; the complement neighbor is last.
std::vector<VertexId> neighbors(VertexId u, int n, Network net = Network::Folded);
std::optional<EdgeKind> edge_kind(VertexId u, VertexId v, int n);
bool adjacent(VertexId u, VertexId v, int n, Network net = Network::Folded);

/// E_i: digit i is 1, every other digit 0.
VertexId unit_vertex(int i, int n);
/// W_i: the complement of E_i.
VertexId anti_unit_vertex(int i, int n);

bool side(VertexId u, const SubcubeSide& s, int n);

std::uint64_t vertex_count(int n);
std::uint64_t edge_count(int n, Network net = Network::Folded);
int bfs_eccentricity_max(int n, int cap = kBfsOrderCap);

std::string render(VertexId v, int n);
/// Parses an n-digit binary string; throws InvalidVertex on anything else.
VertexId parse_vertex(std::string_view text, int n);

}  // namespace fqtree
