#pragma once

// Constructive routing inside hypercube subcubes of FQ_n. Only hypercube
// edges are ever used here; complement edges belong to the folded layer.

#include <span>
#include <vector>

#include "fqtree/topology.hpp"
#include "fqtree/tree.hpp"

namespace fqtree {

/// Subcube of Q_n: the digits in `free_dims` vary, every other digit is
/// pinned to its value in `anchor`.
class Cube {
 public:
  Cube(int n, std::vector<int> free_dims, VertexId anchor);

  static Cube full(int n);
  static Cube from_side(const SubcubeSide& s, int n);

  int ambient_order() const { return n_; }
  int order() const { return static_cast<int>(free_.size()); }
  const std::vector<int>& free_dims() const { return free_; }
  VertexId anchor() const { return fixed_; }

  bool contains(VertexId v) const;
  /// The half of this cube where free digit `d` equals `bit`.
  Cube restrict(int d, int bit) const;

  std::uint32_t to_local(VertexId v) const;
  VertexId from_local(std::uint32_t local) const;

 private:
  int n_;
  std::vector<int> free_;
  std::uint32_t fixed_mask_ = 0;
  VertexId fixed_;
};

/// `order()` internally disjoint (x, y)-paths inside `cube`. Path j leaves x
/// through a different dimension; rotations over the differing digits come
/// first, then one detour per agreeing free digit, each group ascending.
std::vector<Path> menger_paths(VertexId x, VertexId y, const Cube& cube);

/// `order() - 1` internally disjoint trees spanning the three terminals.
std::vector<Tree> qn_s_trees(std::span<const VertexId, 3> s, const Cube& cube);

/// One tree in `cube` minus `forbidden` spanning `s` (duplicates allowed).
/// At most `order() - 1` forbidden vertices are accepted, which keeps the
/// punctured cube connected.
Tree steiner_avoiding(std::span<const VertexId> s,
                      std::span<const VertexId> forbidden, const Cube& cube);

}  // namespace fqtree
