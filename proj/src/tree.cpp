#include "fqtree/tree.hpp"

#include <algorithm>

namespace fqtree {

std::vector<VertexId> Tree::vertices() const {
  std::vector<VertexId> out = terminals;
  out.reserve(out.size() + 2 * edges.size());
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Tree::normalize() {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Tree make_tree(std::vector<VertexId> terminals, std::vector<Edge> edges) {
  Tree t{std::move(terminals), std::move(edges)};
  t.normalize();
  return t;
}

void append_path(std::vector<Edge>& edges, const Path& path) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    edges.push_back(make_edge(path[i - 1], path[i]));
  }
}

}  // namespace fqtree
