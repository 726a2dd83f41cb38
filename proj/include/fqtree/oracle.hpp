#pragma once

// Exact brute-force packing of internally disjoint S-trees in small graphs.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fqtree/topology.hpp"
#include "fqtree/tree.hpp"

namespace fqtree {

/// Undirected simple graph whose vertices carry VertexId labels.
struct Graph {
  std::vector<VertexId> labels;
  std::vector<std::vector<int>> adj;  // sorted neighbor indices

  std::size_t size() const { return labels.size(); }
  /// Index of the vertex labelled `v`, or -1.
  int index_of(VertexId v) const;
};

Graph graph_from_edges(std::vector<VertexId> labels,
                       std::span<const std::pair<int, int>> edges);
Graph folded_hypercube_graph(int n);
Graph hypercube_graph(int n);
/// Subgraph induced by the hypercube edges among the given vertices.
Graph hypercube_induced(std::span<const VertexId> vertices, int n);

struct SearchLimits {
  std::size_t max_vertices = 16;
};

struct PackingInstance {
  Graph graph;
  std::vector<VertexId> s;
  int k = 1;
};

/// k internally disjoint S-trees if they exist. The search is complete: an
/// empty result proves that no such packing exists.
std::optional<std::vector<Tree>> packing_feasible(const PackingInstance& inst,
                                                  SearchLimits limits = {});

/// Maximum number of internally disjoint S-trees.
int kappa_s(const Graph& graph, std::span<const VertexId> s,
            SearchLimits limits = {});

/// Minimum of kappa_s over all 3-subsets. With `vertex_transitive` set the
/// first terminal is pinned to the vertex labelled 0.
int generalized_3_connectivity(const Graph& graph, bool vertex_transitive,
                               SearchLimits limits = {});

/// delta - 1 when two minimum-degree vertices are adjacent.
std::optional<int> upper_bound_delta(const Graph& graph);

}  // namespace fqtree
