#pragma once

#include <vector>

#include "fqtree/topology.hpp"

namespace fqtree {

/// Ordered vertex sequence; consecutive entries are adjacent.
using Path = std::vector<VertexId>;

/// A tree given by its edge set, together with the terminals it must span.
struct Tree {
  std::vector<VertexId> terminals;  // sorted, unique
  std::vector<Edge> edges;          // sorted, unique

  /// Sorted distinct endpoints of the edges, plus the terminals.
  std::vector<VertexId> vertices() const;
  /// Restores the sorted-unique representation.
  void normalize();

  friend bool operator==(const Tree&, const Tree&) = default;
};

Tree make_tree(std::vector<VertexId> terminals, std::vector<Edge> edges);
/// Appends the edges of `path` to `edges`.
void append_path(std::vector<Edge>& edges, const Path& path);

}  // namespace fqtree
