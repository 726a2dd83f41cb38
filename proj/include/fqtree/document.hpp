#pragma once

// On-disk forms of a bundle: the versioned JSON document and DOT.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fqtree/bundle.hpp"
#include "fqtree/certify.hpp"
#include "fqtree/topology.hpp"

namespace fqtree {

inline constexpr std::string_view kGenerator = "fqtree 1.0.0";

/// JSON view of a TreeBundle. Edges keep the endpoint order they were
/// written with so that documents round-trip exactly.
struct BundleDocument {
  int n = 0;
  std::array<VertexId, 3> s{};
  std::vector<std::vector<Edge>> trees;
  std::vector<std::string> trace;
  std::string generator{kGenerator};

  friend bool operator==(const BundleDocument&, const BundleDocument&) = default;
};

BundleDocument to_document(const TreeBundle& bundle);
/// Throws InvalidDocument / InvalidTerminals when the document is not a
/// well-formed bundle description. Adjacency is left to the certifier.
TreeBundle from_document(const BundleDocument& doc);

std::string to_json(const BundleDocument& doc);
/// Throws InvalidDocument on malformed JSON or schema violations.
BundleDocument parse_document(std::string_view text);

/// One edge statement per tree edge, tagged with `treeindex` and a color.
std::string to_dot(const TreeBundle& bundle);

std::string to_json(const CertReport& report, int n);

}  // namespace fqtree
