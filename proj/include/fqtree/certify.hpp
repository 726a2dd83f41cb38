#pragma once

// Independent verification of internally disjoint S-tree bundles. Only the
// topology primitives are shared with the construction code.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqtree/bundle.hpp"
#include "fqtree/topology.hpp"
#include "fqtree/tree.hpp"

namespace fqtree {

enum class ViolationKind {
  NotAnEdge,
  Cyclic,
  Disconnected,
  MissingTerminal,
  SharedInternalVertex,
  SharedEdge,
  WrongCount,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> trees;  // one index, or a pair
  std::vector<VertexId> witness_vertices;
  std::vector<Edge> witness_edges;
};

struct CertReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

CertReport verify_tree(const Tree& t, int n, Network net = Network::Folded);

/// Checks `trees` are `expected_count` pairwise internally disjoint trees
/// spanning `s`: edge sets disjoint and vertex sets meeting exactly in `s`.
CertReport verify_packing(std::span<const Tree> trees,
                          std::span<const VertexId> s, int n, Network net,
                          std::size_t expected_count);

/// A bundle must hold n internally disjoint trees of FQ_n.
CertReport verify_bundle(const TreeBundle& b);

/// Checks pairwise internally disjoint (x, y)-paths.
CertReport verify_paths(std::span<const Path> paths, VertexId x, VertexId y,
                        int n, Network net, std::size_t expected_count);

}  // namespace fqtree
